#include "crank/exact_core.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <ostream>
#include <string>

#include "crank/errors.hpp"
#include "crank/modular_core.hpp"
#include "crank/parallel.hpp"

namespace crank {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be non-increasing");
    n_ += parts_[i];
  }
}

namespace {
std::mutex g_pn_mutex;
std::vector<BigInt> g_pn{BigInt(1)};
}  // namespace

std::vector<BigInt> partition_numbers(long max_n) {
  if (max_n < 0) throw DomainError("partition_number: n must be >= 0");
  std::lock_guard<std::mutex> lock(g_pn_mutex);
  auto& p = g_pn;
  for (long n = static_cast<long>(p.size()); n <= max_n; ++n) {
    BigInt s = 0;
    for (long j = 1;; ++j) {
      long g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      long g2 = j * (3 * j + 1) / 2;
      if (j % 2) {
        s += p[n - g1];
        if (g2 <= n) s += p[n - g2];
      } else {
        s -= p[n - g1];
        if (g2 <= n) s -= p[n - g2];
      }
    }
    p.push_back(s);
  }
  return std::vector<BigInt>(p.begin(), p.begin() + max_n + 1);
}

BigInt partition_number(long n) {
  if (n < 0) throw DomainError("partition_number: n must be >= 0");
  {
    std::lock_guard<std::mutex> lock(g_pn_mutex);
    if (n < static_cast<long>(g_pn.size())) return g_pn[n];
  }
  return partition_numbers(n)[n];
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 0) throw DomainError("for_each_partition: n must be >= 0");
  if (n > kEnumerationCap)
    throw CapacityError("enumeration capped at n = " + std::to_string(kEnumerationCap));
  std::vector<int> a;
  if (n == 0) {
    fn(a);
    return;
  }
  // reverse lexicographic descent
  a.push_back(n);
  for (;;) {
    fn(a);
    int rem = 0;
    while (!a.empty() && a.back() == 1) {
      ++rem;
      a.pop_back();
    }
    if (a.empty()) return;
    int v = --a.back();
    ++rem;
    while (rem > v) {
      a.push_back(v);
      rem -= v;
    }
    if (rem > 0) a.push_back(rem);
  }
}

int crank_of_parts(const std::vector<int>& parts) {
  if (parts.empty()) throw DomainError("crank of the empty partition is undefined");
  int ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
  if (ones == 0) return parts.front();
  // parts are non-increasing, so the ones exceeding o form a prefix
  auto it = std::partition_point(parts.begin(), parts.end(), [ones](int p) { return p > ones; });
  int mu = static_cast<int>(it - parts.begin());
  return mu - ones;
}

int crank(const Partition& lambda) { return crank_of_parts(lambda.parts()); }

const char* to_string(Convention c) {
  return c == Convention::GeneratingFunction ? "generating_function" : "combinatorial";
}

LaurentSeries::LaurentSeries(int window, int q_trunc)
    : window_(window), q_trunc_(q_trunc),
      data_(static_cast<std::size_t>(2 * window + 1) * static_cast<std::size_t>(q_trunc + 1)) {
  if (window < 0 || q_trunc < 0) throw DomainError("LaurentSeries: negative size");
}

std::size_t LaurentSeries::index(int m, int n) const {
  if (n < 0 || n > q_trunc_) throw RangeError("q-degree " + std::to_string(n) + " past truncation");
  if (m < -window_ || m > window_) throw RangeError("x-degree " + std::to_string(m) + " outside window");
  return static_cast<std::size_t>(n) * (2 * window_ + 1) + (m + window_);
}

const BigInt& LaurentSeries::at(int m, int n) const { return data_[index(m, n)]; }
BigInt& LaurentSeries::at(int m, int n) { return data_[index(m, n)]; }

BigInt LaurentSeries::coeff(int m, int n) const {
  if (n < 0 || n > q_trunc_) throw RangeError("q-degree " + std::to_string(n) + " past truncation");
  if (m < -window_ || m > window_) return 0;
  return data_[index(m, n)];
}

void LaurentSeries::multiply_one_minus(int e, int j) {
  if (j < 1) throw DomainError("factor must carry a positive q-power");
  // descending n so the source row is still the old one
  for (int n = q_trunc_; n >= j; --n) {
    for (int m = -window_; m <= window_; ++m) {
      const BigInt& src = data_[index(m, n - j)];
      if (src == 0) continue;
      data_[index(m + e, n)] -= src;
    }
  }
}

void LaurentSeries::divide_one_minus(int e, int j) {
  if (j < 1) throw DomainError("factor must carry a positive q-power");
  // f = g + x^e q^j f, ascending n; source rows are already final
  const int w = 2 * window_ + 1;
  for (int n = j; n <= q_trunc_; ++n) {
    BigInt* dst = &data_[static_cast<std::size_t>(n) * w + window_];
    const BigInt* src = &data_[static_cast<std::size_t>(n - j) * w + window_];
    int reach = std::min(window_, n - j);
    if (reach + std::abs(e) > window_) {
      for (int m = -reach; m <= reach; ++m)
        if (src[m] != 0) at(m + e, n) += src[m];
      continue;
    }
    for (int m = -reach; m <= reach; ++m) mpz_add(dst[m + e].get_mpz_t(), dst[m + e].get_mpz_t(), src[m].get_mpz_t());
  }
}

CrankTable::CrankTable(int max_n, Convention conv, LaurentSeries series)
    : max_n_(max_n), conv_(conv), series_(std::move(series)) {}

BigInt CrankTable::coeff(int m, int n) const {
  if (n < 0 || n > max_n_) throw RangeError("n = " + std::to_string(n) + " outside table range");
  if (m < -n || m > n) return 0;
  return series_.coeff(m, n);
}

std::vector<BigInt> CrankTable::row(int n) const {
  std::vector<BigInt> r;
  r.reserve(2 * n + 1);
  for (int m = -n; m <= n; ++m) r.push_back(coeff(m, n));
  return r;
}

void CrankTable::write_csv(std::ostream& os) const {
  os << "n,m,coeff\n";
  for (int n = 0; n <= max_n_; ++n)
    for (int m = -n; m <= n; ++m) os << n << ',' << m << ',' << coeff(m, n).get_str() << '\n';
}

namespace {

LaurentSeries generating_function_series(int max_n) {
  LaurentSeries s(max_n, max_n);
  // (q)_inf by Euler's pentagonal theorem
  s.at(0, 0) = 1;
  for (long j = 1;; ++j) {
    long g1 = j * (3 * j - 1) / 2;
    if (g1 > max_n) break;
    long g2 = j * (3 * j + 1) / 2;
    int sign = (j % 2) ? -1 : 1;
    s.at(0, static_cast<int>(g1)) += sign;
    if (g2 <= max_n) s.at(0, static_cast<int>(g2)) += sign;
  }
  for (int j = 1; j <= max_n; ++j) {
    s.divide_one_minus(1, j);
    s.divide_one_minus(-1, j);
  }
  return s;
}

LaurentSeries combinatorial_series(int max_n) {
  LaurentSeries s(max_n, max_n);
  s.at(0, 0) = 1;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<long> counts(2 * n + 1, 0);
    for_each_partition(n, [&](const std::vector<int>& parts) { ++counts[crank_of_parts(parts) + n]; });
    for (int m = -n; m <= n; ++m)
      if (counts[m + n]) s.at(m, n) = counts[m + n];
  }
  return s;
}

}  // namespace

CrankTable crank_table(int max_n, Convention conv) {
  if (max_n < 0) throw DomainError("crank_table: max_n must be >= 0");
  if (conv == Convention::GeneratingFunction) return CrankTable(max_n, conv, generating_function_series(max_n));
  return CrankTable(max_n, conv, combinatorial_series(max_n));
}

namespace {
void check_modulus(int c) {
  if (c < 1 || c % 2 == 0) throw DomainError("modulus c must be a positive odd integer");
}
}  // namespace

std::vector<BigInt> crank_class_counts(int c, int n, const CrankTable& table) {
  check_modulus(c);
  if (n < 0 || n > table.max_n()) throw RangeError("n = " + std::to_string(n) + " outside table range");
  std::vector<BigInt> cls(c);
  for (int m = -n; m <= n; ++m) cls[floor_mod(m, c)] += table.coeff(m, n);
  return cls;
}

BigInt crank_class_count(int a, int c, int n, const CrankTable& table) {
  check_modulus(c);
  if (a < 0 || a >= c) throw DomainError("class count: need 0 <= a < c");
  return crank_class_counts(c, n, table)[a];
}

bool CongruenceReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CongruenceCheck& ch) { return ch.pn_divisible && ch.classes_equal; });
}

CongruenceReport verify_congruence(int prime, int shift, int n_max, const CrankTable& table) {
  bool ok = (prime == 5 && shift == 4) || (prime == 7 && shift == 5) || (prime == 11 && shift == 6);
  if (!ok) throw DomainError("congruence pair must be (5,4), (7,5) or (11,6)");
  if (n_max > table.max_n()) throw RangeError("table too short for n_max");
  if (table.convention() != Convention::GeneratingFunction)
    throw DomainError("congruence check needs the generating-function table");
  CongruenceReport rep;
  rep.prime = prime;
  rep.shift = shift;
  rep.n_max = n_max;
  for (int arg = shift; arg <= n_max; arg += prime) {
    CongruenceCheck ch;
    ch.argument = arg;
    ch.pn = partition_number(arg);
    ch.pn_divisible = mpz_divisible_ui_p(ch.pn.get_mpz_t(), prime) != 0;
    ch.classes = crank_class_counts(prime, arg, table);
    ch.classes_equal = std::all_of(ch.classes.begin(), ch.classes.end(),
                                   [&](const BigInt& v) { return v == ch.classes[0]; });
    rep.checks.push_back(std::move(ch));
  }
  return rep;
}

CongruenceReport verify_congruence(int prime, int shift, int n_max) {
  CrankTable t = crank_table(std::max(n_max, 0), Convention::GeneratingFunction);
  return verify_congruence(prime, shift, n_max, t);
}

Real crank_coeff_exact(int a, int c, int n, const CrankTable& table) {
  if (c < 3 || c % 2 == 0) throw DomainError("crank_coeff_exact: c must be odd and >= 3");
  if (a <= 0 || a >= c || gcd(a, c) != 1) throw DomainError("crank_coeff_exact: need 0 < a < c, gcd(a,c) = 1");
  if (table.convention() != Convention::GeneratingFunction)
    throw DomainError("crank_coeff_exact: needs the generating-function table");
  auto cls = crank_class_counts(c, n, table);
  // the root-of-unity sum over all classes vanishes, so contract differences;
  // this keeps the cancellation exact
  Real acc = 0;
  for (int s = 1; s < c; ++s) {
    BigInt diff = cls[s] - cls[0];
    if (diff == 0) continue;
    Real ang = 2 * pi_real() * a * s / c;
    acc += to_real(diff) * cos(ang);
  }
  return acc;
}

}  // namespace crank
