#include "crank/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "crank/asymptotics.hpp"
#include "crank/errors.hpp"
#include "crank/exp_sums.hpp"
#include "crank/modular_core.hpp"
#include "crank/parallel.hpp"

namespace crank {

namespace {

struct Triple {
  int a, b, d;
};

// published sign lists, argument c*n+d
const std::vector<Triple>& neg_list(long c) {
  static const std::map<long, std::vector<Triple>> t = {
      {5, {{0, 1, 1}, {0, 2, 1}, {0, 2, 2}, {1, 2, 2}, {1, 2, 3}}},
      {7, {{0, 1, 1}, {0, 1, 6}, {0, 2, 1}, {0, 2, 2}, {0, 3, 1}, {0, 3, 6},
           {1, 2, 2}, {1, 2, 4}, {1, 3, 3}, {1, 3, 4}, {2, 3, 3}, {2, 3, 6}}},
      {9, {{0, 1, 1}, {0, 1, 6}, {0, 1, 8}, {0, 2, 1}, {0, 2, 2}, {0, 2, 6}, {0, 3, 1},
           {0, 3, 3}, {0, 3, 6}, {0, 4, 1}, {0, 4, 6}, {0, 4, 8}, {1, 2, 2}, {1, 2, 4},
           {1, 2, 7}, {1, 3, 2}, {1, 3, 3}, {1, 3, 4}, {1, 3, 5}, {1, 3, 7}, {1, 4, 4},
           {1, 4, 7}, {2, 3, 1}, {2, 3, 3}, {2, 3, 5}, {2, 3, 7}, {2, 3, 8}, {2, 4, 5},
           {2, 4, 8}, {3, 4, 0}, {3, 4, 4}, {3, 4, 6}, {3, 4, 8}}},
      {11, {{0, 1, 1}, {0, 1, 7}, {0, 1, 8}, {0, 1, 9}, {0, 2, 1}, {0, 2, 2}, {0, 2, 9},
            {0, 3, 1}, {0, 3, 8}, {0, 3, 9}, {0, 4, 1}, {0, 4, 7}, {0, 4, 8}, {0, 5, 1},
            {0, 5, 9}, {1, 2, 2}, {1, 2, 4}, {1, 3, 3}, {1, 4, 4}, {2, 3, 3}, {2, 3, 5},
            {2, 3, 8}, {2, 4, 8}, {3, 4, 4}, {3, 4, 7}, {3, 4, 10}, {3, 5, 10}, {4, 5, 5},
            {4, 5, 9}}},
  };
  return t.at(c);
}

const std::vector<Triple>& pos_list(long c) {
  static const std::map<long, std::vector<Triple>> t = {
      {5, {{0, 1, 0}, {0, 2, 0}, {1, 2, 1}, {0, 1, 3}}},
      {7, {{0, 1, 0}, {0, 1, 3}, {0, 1, 4}, {0, 2, 0}, {0, 2, 3}, {0, 3, 0}, {1, 2, 1},
           {1, 2, 6}, {1, 3, 1}, {2, 3, 2}}},
      {9, {{0, 1, 0}, {0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}, {0, 1, 7}, {0, 2, 0},
           {0, 2, 3}, {0, 2, 4}, {0, 2, 5}, {0, 2, 7}, {0, 2, 8}, {0, 3, 0}, {0, 3, 4},
           {0, 3, 7}, {0, 4, 0}, {0, 4, 2}, {0, 4, 3}, {0, 4, 4}, {0, 4, 5}, {0, 4, 7},
           {1, 2, 1}, {1, 2, 5}, {1, 2, 8}, {1, 3, 0}, {1, 3, 1}, {1, 3, 6}, {1, 3, 8},
           {1, 4, 1}, {2, 3, 0}, {2, 3, 2}, {2, 3, 4}, {2, 3, 6}, {2, 4, 2}, {3, 4, 1},
           {3, 4, 2}, {3, 4, 3}, {3, 4, 5}, {3, 4, 7}}},
      {11, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {0, 4, 0}, {0, 5, 0}, {0, 1, 3}, {0, 1, 4},
            {0, 2, 3}, {0, 2, 5}, {0, 3, 4}, {0, 3, 10}, {0, 4, 3}, {0, 4, 5}, {0, 5, 3},
            {0, 5, 4}, {1, 2, 1}, {1, 2, 5}, {1, 2, 7}, {1, 2, 8}, {1, 3, 1}, {1, 3, 7},
            {1, 3, 10}, {1, 4, 1}, {1, 4, 5}, {1, 4, 9}, {1, 5, 1}, {1, 5, 7}, {1, 5, 8},
            {2, 3, 2}, {2, 3, 4}, {2, 3, 10}, {2, 4, 2}, {2, 4, 9}, {2, 5, 2}, {2, 5, 4},
            {3, 4, 3}, {3, 4, 5}, {3, 4, 9}, {3, 5, 3}, {3, 5, 8}, {4, 5, 4}, {4, 5, 7},
            {4, 5, 8}}},
  };
  return t.at(c);
}

int reference_sign(long c, long a, long b, long d) {
  for (const auto& t : neg_list(c))
    if (t.a == a && t.b == b && t.d == d) return -1;
  for (const auto& t : pos_list(c))
    if (t.a == a && t.b == b && t.d == d) return 1;
  return 0;
}

void check_odd(long c) {
  if (c < 3 || c % 2 == 0) throw DomainError("c must be odd and >= 3");
}

void check_sign_modulus(long c) {
  if (c != 5 && c != 7 && c != 9 && c != 11) throw DomainError("sign tables exist for c in {5,7,9,11}");
}

void check_pair(long a, long b, long c) {
  long J = (c - 1) / 2;
  if (a < 0 || a >= b || b > J) throw DomainError("need 0 <= a < b <= (c-1)/2");
}

Real sqrt_pos(const Real& x) { return x > 0 ? sqrt(x) : Real(0); }

// everything in the budget that depends on c only
struct Coeffs {
  long c = 0, J = 0;
  Real pi, sqrt3, L, K, sin_sum, cos_c, e2pi;
  Real delta0, delta2;
  BoundConstants k;
};

Coeffs make_coeffs(long c) {
  Coeffs q;
  q.c = c;
  q.J = (c - 1) / 2;
  q.pi = pi_real();
  q.sqrt3 = sqrt(Real(3));
  q.L = 1 + log(Real(q.J));
  q.K = q.pi * (1 - q.pi * q.pi / 24);
  q.sin_sum = 0;
  for (long j = 1; j <= q.J; ++j) q.sin_sum += abs(sin(q.pi * j / c));
  q.cos_c = abs(cos(q.pi / c));
  q.e2pi = exp(2 * q.pi);
  q.k = constants(c);
  q.delta0 = to_real(q.k.delta0);
  q.delta2 = to_real(delta_value(2, c, 0, TermSign::Plus));
  return q;
}

const Coeffs& coeffs(long c) {
  static std::mutex mu;
  static std::map<long, Coeffs> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(c);
  if (it == cache.end()) it = cache.emplace(c, make_coeffs(c)).first;
  return it->second;
}

const Real kArcConst = Real(4) / 3 + pow(Real(2), Real(1.25));

struct Pieces {
  Real S_j_bound, T_tail, T_tail_k2, T_tail_k1, T1_minus, S_err, T_err, S1_err, S2_err, arc_S, arc_T;
  Real S_tail;  // k >= 2c, only used by the small-c search
};

Pieces pieces(const Coeffs& q, long n) {
  const long c = q.c;
  const Real pi = q.pi;
  Real nn(n);
  Real x = 24 * nn - 1;
  Real sx = sqrt(x);
  Real n14 = pow(nn, Real(0.25));
  Real n38 = pow(nn, Real(0.375));
  Real n34 = pow(nn, Real(0.75));
  Pieces p;
  Real s_pre = 64 * n34 * q.L / (sx * c * c * q.sqrt3 * q.K);
  p.S_j_bound = q.J * s_pre * sinh(pi * sx / (6 * c));
  p.S_tail = q.J * s_pre * sinh(pi * sx / (12 * c));

  Real e_half = exp(pi * sqrt_pos(2 * q.delta0 * x) / (2 * q.sqrt3));
  Real e_two = exp(pi * sqrt_pos(2 * q.delta2 * x) / q.sqrt3);
  Real t_k2 = 4 * Real(c + 18) / (3 * q.sqrt3 * c * sx) * n34 * e_half;
  Real t_k1 = 2 * Real(c + 18) / (q.sqrt3 * c * sx) * e_two;
  p.T_tail_k2 = 2 * q.J * t_k2;
  p.T_tail_k1 = 2 * (q.J - 1) * t_k1;
  p.T_tail = p.T_tail_k2 + p.T_tail_k1;
  p.T1_minus = 2 * Real(c - 1) / (q.sqrt3 * c * sx) * e_two;

  const Real& c1 = q.k.c1;
  const Real& c2 = q.k.c2;
  p.S_err = 2 * exp(2 * pi + pi / 24) * q.sin_sum * (c2 + 2 * (1 + q.cos_c) * c1 * (1 + c2)) * n14 * q.L /
            (q.K * c);
  p.T_err = 16 * q.e2pi * q.k.f_c * n14 * q.sin_sum;
  p.S1_err = q.J * 8 * exp(2 * pi + pi / 12) * q.L * n14 / (q.K * c);
  Real geo = 1 - exp(-2 * pi / c);
  p.S2_err = 32 * q.e2pi * n14 * q.sin_sum * exp(2 * pi * q.delta0) / geo;
  p.arc_S = 4 * kArcConst * q.sin_sum * q.L * exp(2 * pi + pi / 12) * n38 / (q.K * c);
  p.arc_T = 8 * kArcConst * q.sin_sum * exp(2 * pi * q.delta0 + 2 * pi) / geo;
  return p;
}

Real main_raw(const Coeffs& q, long a, long b, long n) {
  const long c = q.c;
  Real x = 24 * Real(n) - 1;
  Real sx = sqrt(x);
  Real arg = q.pi * sqrt_pos(2 * q.delta0 * x / 3);
  return Real(2) / c * rho(a, b, c, 1) * 8 * q.sqrt3 * sin(q.pi / c) / sx * sinh(arg);
}

Real budget_total(const Pieces& p) {
  std::vector<Real> v = {p.S_j_bound, p.T_tail, p.T1_minus, p.S_err, p.T_err,
                         p.S1_err,    p.S2_err, p.arc_S,    p.arc_T};
  return pairwise_sum(v);
}

Real log_slope(const Real& lo, const Real& hi, long n_lo, long n_hi) {
  return (log(hi) - log(lo)) / (log(Real(n_hi)) - log(Real(n_lo)));
}

bool is_odd_prime(long c) { return c >= 3 && c % 2 == 1 && is_prime(c); }

// first index in [0, count) where pred holds, scanning in parallel blocks
template <class Pred>
std::optional<long> first_true(long count, Pred pred, long& evaluated) {
  const long block = 1024;
  for (long start = 0; start < count; start += block) {
    long len = std::min(block, count - start);
    auto hits = parallel_map(std::size_t(len), [&](std::size_t i) { return pred(start + long(i)) ? 1 : 0; });
    for (long i = 0; i < len; ++i)
      if (hits[i]) {
        evaluated += i + 1;
        return start + i;
      }
    evaluated += len;
  }
  return std::nullopt;
}

std::string trajectory(const std::vector<std::pair<long, Real>>& pts) {
  std::ostringstream os;
  for (const auto& [n, g] : pts) os << " n=" << n << " gap=" << to_decimal(g, 6);
  return os.str();
}

}  // namespace

BoundConstants constants(long c) {
  check_odd(c);
  BoundConstants k;
  k.c = c;
  const Real pi = pi_real();
  const Real eps("1e-14");

  // c1 and c3: terms e^{-pi m(m+1)/2}/(1-e^{-pi m}) resp. (1-e^{-pi(m-1)}); the
  // denominators are >= 1-e^{-pi} so the remainder is dominated by a Gaussian tail
  Real den = 1 - exp(-pi);
  auto gauss_tail = [&](long m) {  // sum over m' > m of e^{-pi m'(m'+1)/2} / den
    Real first = exp(-pi * Real((m + 1) * (m + 2)) / 2);
    return first / (den * (1 - exp(-pi * Real(m + 2))));
  };
  k.c1 = 0;
  long m = 1;
  for (;; ++m) {
    k.c1 += exp(-pi * Real(m * (m + 1)) / 2) / (1 - exp(-pi * Real(m)));
    if (gauss_tail(m) < eps) break;
  }
  k.c1_tail = gauss_tail(m);
  k.c3 = 0;
  for (m = 2;; ++m) {
    k.c3 += exp(-pi * Real(m * (m + 1)) / 2) / (1 - exp(-pi * Real(m - 1)));
    if (gauss_tail(m) < eps) break;
  }
  k.c3_tail = gauss_tail(m);

  // c2 = sum_{n>=1} p(n) e^{-pi n}; remainder via p(n) < e^{pi sqrt(2n/3)}
  auto p_tail = [&](long N) {
    Real first = exp(pi * sqrt(Real(2 * (N + 1)) / 3) - pi * (N + 1));
    Real ratio = exp(-pi * (1 - 1 / sqrt(Real(6 * (N + 1)))));
    return first / (1 - ratio);
  };
  long N = 1;
  while (p_tail(N) >= eps) ++N;
  auto pn = partition_numbers(N);
  k.c2 = 0;
  for (long i = 1; i <= N; ++i) k.c2 += to_real(pn[i]) * exp(-pi * i);
  k.c2_tail = p_tail(N);

  k.delta0 = delta0(c);
  Real d0 = to_real(k.delta0);
  Real e = exp(pi * d0);
  k.f_c = (1 + k.c2 * e) / (1 - exp(-pi / c)) + e * k.c1 * (1 + k.c2) + e * (k.c2 + 1) * k.c3 / 2;
  long J = (c - 1) / 2;
  k.log_factor = 2 * (1 + log(Real(J))) / (pi * (1 - pi * pi / 24));
  return k;
}

Real main_term_lower(long a, long b, long c, long n) {
  if (c < 11 || !is_odd_prime(c)) throw DomainError("main_term_lower: c must be an odd prime >= 11");
  if (a == b) return Real(0);
  check_pair(a, b, c);
  if (n < 1) throw DomainError("main_term_lower: n must be positive");
  return main_raw(coeffs(c), a, b, n);
}

const Real& ErrorBudget::component(const std::string& name) const {
  for (const auto& [k, v] : components)
    if (k == name) return v;
  throw RangeError("no budget component " + name);
}

ErrorBudget error_budget(long a, long b, long c, long n) {
  check_odd(c);
  if (n < 2) throw DomainError("error_budget: n must be >= 2");
  check_pair(a, b, c);
  const Coeffs& q = coeffs(c);
  Pieces p = pieces(q, n);
  ErrorBudget eb;
  eb.a = a;
  eb.b = b;
  eb.c = c;
  eb.n = n;
  eb.components = {{"S_j_bound", p.S_j_bound}, {"T_j_tail_bound", p.T_tail}, {"T1_minus_bound", p.T1_minus},
                   {"S_err", p.S_err},         {"T_err", p.T_err},           {"S1_err", p.S1_err},
                   {"S2_err", p.S2_err},       {"arc_err_S", p.arc_S},       {"arc_err_T", p.arc_T}};
  eb.total = budget_total(p);
  eb.main_lower = main_raw(q, a, b, n);
  return eb;
}

Real arc_integral_bound(long k, const Rational& t, long n) {
  const Real pi = pi_real();
  return Real(2) / k * exp(2 * pi + 2 * pi * to_real(t)) * kArcConst * pow(Real(n), Real(-0.125));
}

std::vector<ExponentAudit> exponent_audit(long c, long n_lo, long n_hi) {
  check_odd(c);
  const Coeffs& q = coeffs(c);
  Pieces lo = pieces(q, n_lo), hi = pieces(q, n_hi);
  auto sx = [](long n) { return sqrt(24 * Real(n) - 1); };
  auto s_exp = [&](long n) { return sinh(q.pi * sx(n) / (6 * c)); };
  auto t_exp = [&](long n) { return exp(q.pi * sqrt_pos(2 * q.delta0 * (24 * Real(n) - 1)) / (2 * q.sqrt3)); };
  auto t2_exp = [&](long n) { return exp(q.pi * sqrt_pos(2 * q.delta2 * (24 * Real(n) - 1)) / q.sqrt3); };

  std::vector<ExponentAudit> out;
  auto add = [&](const std::string& name, double expect, const Real& a, const Real& b) {
    out.push_back({name, expect, static_cast<double>(log_slope(a, b, n_lo, n_hi))});
  };
  add("S_j_bound", 0.75, lo.S_j_bound * sx(n_lo) / s_exp(n_lo), hi.S_j_bound * sx(n_hi) / s_exp(n_hi));
  add("T_j_tail_bound(k>=2)", 0.75, lo.T_tail_k2 * sx(n_lo) / t_exp(n_lo), hi.T_tail_k2 * sx(n_hi) / t_exp(n_hi));
  if (q.J > 1)
    add("T_j_tail_bound(k=1)", 0.0, lo.T_tail_k1 * sx(n_lo) / t2_exp(n_lo), hi.T_tail_k1 * sx(n_hi) / t2_exp(n_hi));
  add("T1_minus_bound", 0.0, lo.T1_minus * sx(n_lo) / t2_exp(n_lo), hi.T1_minus * sx(n_hi) / t2_exp(n_hi));
  add("S_err", 0.25, lo.S_err, hi.S_err);
  add("T_err", 0.25, lo.T_err, hi.T_err);
  add("S1_err", 0.25, lo.S1_err, hi.S1_err);
  add("S2_err", 0.25, lo.S2_err, hi.S2_err);
  add("arc_err_S", 0.375, lo.arc_S, hi.arc_S);
  add("arc_err_T", 0.0, lo.arc_T, hi.arc_T);
  add("arc_integral", -0.125, arc_integral_bound(1, Rational(1, 24), n_lo),
      arc_integral_bound(1, Rational(1, 24), n_hi));
  return out;
}

ThresholdResult threshold_N(long a, long b, long c, long cap) {
  if (a == b) throw DomainError("threshold_N: a == b has no main term");
  if (c <= 11 || !is_odd_prime(c)) throw DomainError("threshold_N: c must be an odd prime > 11");
  check_pair(a, b, c);
  const Coeffs& q = coeffs(c);
  auto gap = [&](long n) { return main_raw(q, a, b, n) - budget_total(pieces(q, n)); };

  ThresholdResult r;
  r.a = a;
  r.b = b;
  r.c = c;
  auto hit = first_true(
      cap - 1, [&](long i) {
        long n = i + 2;
        return gap(n) > 0 && gap(2 * n) > 0 && gap(4 * n) > 0;
      },
      r.evaluated);
  if (!hit) {
    std::vector<std::pair<long, Real>> pts;
    for (long n = 2; n <= cap; n *= 4) pts.emplace_back(n, gap(n));
    throw CapacityError("threshold search reached cap " + std::to_string(cap) + ";" + trajectory(pts));
  }
  r.N = *hit + 2;
  r.N2 = 2 * r.N;
  r.N4 = 4 * r.N;
  r.gap_N = gap(r.N);
  r.gap_N2 = gap(r.N2);
  r.gap_N4 = gap(r.N4);
  return r;
}

Real sign_predictor(long a, long b, long c, long d) {
  check_sign_modulus(c);
  check_pair(a, b, c);
  const Real pi = pi_real();
  std::vector<Real> terms;
  for (long j = 1; j <= (c - 1) / 2; ++j) {
    Complex v = Complex(0, 1) * btilde_diagonal(j, c, -d, 0);
    terms.push_back(rho(a, b, c, j) * v.real() / sqrt(Real(c)));
  }
  if (c == 11) terms.push_back(2 * rho(a, b, c, 1) * sin(pi / c));
  return pairwise_sum(terms);
}

ThresholdResult threshold_N_small_c(long a, long b, long c, long d, long cap) {
  check_sign_modulus(c);
  check_pair(a, b, c);
  if (d < 0 || d >= c) throw DomainError("threshold_N_small_c: need 0 <= d < c");
  Real pred = sign_predictor(a, b, c, d);
  if (abs(pred) < Real("1e-9")) throw DomainError("threshold_N_small_c: zero class, no sign to prove");
  const int sigma = pred > 0 ? 1 : -1;
  const Coeffs& q = coeffs(c);

  auto gap = [&](long n) {
    Real x = 24 * Real(n) - 1;
    Real sx = sqrt(x);
    Pieces p = pieces(q, n);
    // sum_j S_j at k = c, with T_1^+ folded in for c = 11 (equal sinh arguments)
    Real main = 8 * q.sqrt3 / (c * sx) * sinh(q.pi * sx / (6 * c)) * pred;
    std::vector<Real> err = {p.S_tail, p.T_tail, p.T1_minus, p.S_err, p.T_err,
                             p.S1_err, p.S2_err, p.arc_S,    p.arc_T};
    if (c != 11) err.push_back(Real(2) / rho(a, b, c, 1) * abs(main_raw(q, a, b, n)));
    return sigma * main - pairwise_sum(err);
  };
  auto up = [&](long n) {  // first argument on the progression that is >= n
    long m = (n - d + c - 1) / c;
    return d + c * std::max(m, 0L);
  };
  long first = up(2);
  long count = (cap - first) / c + 1;

  ThresholdResult r;
  r.a = a;
  r.b = b;
  r.c = c;
  r.d = d;
  r.sign = sigma;
  auto hit = first_true(
      count, [&](long i) {
        long n = first + c * i;
        return gap(n) > 0 && gap(up(2 * n)) > 0 && gap(up(4 * n)) > 0;
      },
      r.evaluated);
  if (!hit) {
    std::vector<std::pair<long, Real>> pts;
    for (long n = first; n <= cap; n = up(4 * n)) pts.emplace_back(n, gap(n));
    throw CapacityError("threshold search reached cap " + std::to_string(cap) + ";" + trajectory(pts));
  }
  r.N = first + c * *hit;
  r.N2 = up(2 * r.N);
  r.N4 = up(4 * r.N);
  r.gap_N = gap(r.N);
  r.gap_N2 = gap(r.N2);
  r.gap_N4 = gap(r.N4);
  return r;
}

std::vector<SignEntry> sign_table(long c) {
  check_sign_modulus(c);
  long J = (c - 1) / 2;
  std::vector<std::array<long, 3>> keys;
  for (long a = 0; a <= J; ++a)
    for (long b = a + 1; b <= J; ++b)
      for (long d = 0; d < c; ++d) keys.push_back({a, b, d});
  return parallel_map(keys.size(), [&](std::size_t i) {
    auto [a, b, d] = keys[i];
    SignEntry e;
    e.a = a;
    e.b = b;
    e.c = c;
    e.d = d;
    Real p = sign_predictor(a, b, c, d);
    e.predictor = static_cast<double>(p);
    e.predicted = abs(p) < Real("1e-9") ? 0 : (p > 0 ? 1 : -1);
    e.reference = reference_sign(c, a, b, d);
    return e;
  });
}

bool SignReport::all_stable() const {
  for (const auto& ch : checks)
    if (!ch.stabilization) return false;
  return ramanujan_zero;
}

SignReport verify_sign_table(long c, const CrankTable& table, long arg_max) {
  check_sign_modulus(c);
  if (table.convention() != Convention::GeneratingFunction)
    throw DomainError("verify_sign_table: needs the generating-function convention");
  if (table.max_n() < arg_max) throw RangeError("verify_sign_table: table too short");
  SignReport rep;
  rep.c = c;
  rep.arg_max = arg_max;

  std::vector<std::vector<BigInt>> cls(arg_max + 1);
  for (long n = 2; n <= arg_max; ++n) cls[n] = crank_class_counts(int(c), int(n), table);

  for (const auto& e : sign_table(c)) {
    if (e.reference == 0) {
      if (e.predicted != 0) rep.unlisted_nonzero.push_back(e);
      continue;
    }
    SignCheck ch;
    ch.entry = e;
    for (long n = e.d; n <= arg_max; n += c) {
      if (n < 2) continue;
      int s = cmp(cls[n][e.a], cls[n][e.b]);
      s = (s > 0) - (s < 0);
      ch.exact.emplace_back(n, s);
      if (s != e.reference) ch.last_mismatch = n;
    }
    if (ch.last_mismatch < 0)
      ch.stabilization = ch.exact.empty() ? std::nullopt : std::optional<long>(ch.exact.front().first);
    else if (ch.last_mismatch + c <= arg_max)
      ch.stabilization = ch.last_mismatch + c;
    rep.checks.push_back(std::move(ch));
  }

  const std::map<long, long> shift = {{5, 4}, {7, 5}, {11, 6}};
  if (auto it = shift.find(c); it != shift.end()) {
    rep.ramanujan_shift = it->second;
    for (long n = it->second; n <= arg_max; n += c)
      for (long s = 1; s < c; ++s)
        if (cls[n][s] != cls[n][0]) rep.ramanujan_zero = false;
  }
  return rep;
}

}  // namespace crank
