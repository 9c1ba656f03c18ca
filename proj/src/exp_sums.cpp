#include "crank/exp_sums.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "crank/errors.hpp"
#include "crank/parallel.hpp"

namespace crank {

const char* to_string(SumKind k) {
  switch (k) {
    case SumKind::A:
      return "A";
    case SumKind::Btilde:
      return "Btilde";
    case SumKind::D:
      return "D";
  }
  return "?";
}

const std::vector<ModularDatum>& primitive_data(long k) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<std::vector<ModularDatum>>> cache;
  if (k < 1) throw DomainError("k must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[k];
  if (!slot) {
    slot = std::make_unique<std::vector<ModularDatum>>();
    for (long h = 0; h < k; ++h)
      if (gcd(h, k) == 1) slot->push_back(modular_datum(h, k));
  }
  return *slot;
}

namespace {

void check_ac(long a, long c) {
  if (c < 3 || c % 2 == 0) throw DomainError("c must be odd and >= 3");
  if (a <= 0 || a >= c || gcd(a, c) != 1) throw DomainError("need 0 < a < c, gcd(a,c) = 1");
}

long lift_step(long k) { return (k % 2) ? k : 2 * k; }

Complex btilde_core(long a, long c, long k, long n, long m, long lift) {
  const long nk = floor_mod(n, k), mk = floor_mod(m, k);
  const Real pi = pi_real();
  std::vector<Complex> terms;
  for (const auto& d : primitive_data(k)) {
    long hp = d.h_prime + lift * lift_step(k);
    Rational sarg(floor_mod(a * hp, 2 * c), c);
    Real s = sin(pi * to_real(sarg));
    Rational ang = d.s_hk - Rational(a * a * k * hp, c * c) + Rational(2 * (nk * d.h + mk * floor_mod(hp, k)), k);
    terms.push_back(exp_i_pi_hp(ang) / s);
  }
  Complex sum = pairwise_sum(terms);
  Real pre = sin(pi * a / c);
  if ((a * k + 1) % 2 != 0) pre = -pre;
  return sum * pre;
}

Complex d_core(long a, long c, long k, long n, long m, long lift) {
  const long l = l_shift(a, c, k);
  const long nk = floor_mod(n, k), mk = floor_mod(m, k);
  std::vector<Complex> terms;
  for (const auto& d : primitive_data(k)) {
    long hp = floor_mod(d.h_prime + lift * lift_step(k), k);
    Rational ang = d.s_hk + Rational(2 * (nk * d.h + mk * hp), k);
    terms.push_back(exp_i_pi_hp(ang));
  }
  Complex sum = pairwise_sum(terms);
  if ((a * k + l) % 2 != 0) sum = -sum;
  return sum;
}

}  // namespace

Complex kloosterman_A(long k, long n) {
  if (k < 1) throw DomainError("kloosterman_A: k must be positive");
  const long nk = floor_mod(n, k);
  std::vector<Complex> terms;
  for (const auto& d : primitive_data(k)) terms.push_back(exp_i_pi_hp(d.s_hk - Rational(2 * nk * d.h, k)));
  return pairwise_sum(terms);
}

Complex btilde(long a, long c, long k, long n, long m) {
  check_ac(a, c);
  if (k < 1 || k % c != 0) throw DomainError("btilde: c must divide k");
  return btilde_core(a, c, k, n, m, 0);
}

Complex btilde_diagonal(long a, long c, long n, long m) {
  if (c < 3 || c % 2 == 0) throw DomainError("btilde_diagonal: c must be odd and >= 3");
  if (a <= 0 || a >= c) throw DomainError("btilde_diagonal: need 0 < a < c");
  // sin(pi a h'/c) != 0 since gcd(h',c) = 1 and c does not divide a
  return btilde_core(a, c, c, n, m, 0);
}

Complex d_sum(long a, long c, long k, long n, long m) {
  check_ac(a, c);
  if (k < 1 || k % c == 0) throw DomainError("d_sum: c must not divide k");
  return d_core(a, c, k, n, m, 0);
}

Complex evaluate(const SumSpec& s) {
  switch (s.kind) {
    case SumKind::A:
      return kloosterman_A(s.k, s.n);
    case SumKind::Btilde:
      return btilde(s.a, s.c, s.k, s.n, s.m);
    case SumKind::D:
      return d_sum(s.a, s.c, s.k, s.n, s.m);
  }
  throw DomainError("unknown sum kind");
}

namespace detail {
Complex btilde_lifted(long a, long c, long k, long n, long m, long lift) {
  check_ac(a, c);
  if (k % c != 0) throw DomainError("btilde: c must divide k");
  return btilde_core(a, c, k, n, m, lift);
}
Complex d_sum_lifted(long a, long c, long k, long n, long m, long lift) {
  check_ac(a, c);
  if (k % c == 0) throw DomainError("d_sum: c must not divide k");
  return d_core(a, c, k, n, m, lift);
}
}  // namespace detail

Lemma1Report lemma1_diagnostic(long c, long n, long k_max, double epsilon) {
  if (c < 3 || c % 2 == 0 || !is_prime(c)) throw DomainError("lemma1_diagnostic: c must be an odd prime");
  if (k_max < 1) throw DomainError("lemma1_diagnostic: k_max must be >= 1");
  Lemma1Report rep;
  rep.c = c;
  rep.n = n;
  rep.k_max = k_max;
  rep.epsilon = epsilon;
  rep.rows = parallel_map(static_cast<std::size_t>(k_max), [&](std::size_t i) {
    long k = static_cast<long>(i) + 1;
    Lemma1Row row;
    row.k = k;
    row.kind = (k % c == 0) ? SumKind::Btilde : SumKind::D;
    double best = 0.0;
    for (long a = 1; a < c; ++a) {
      Complex v = (k % c == 0) ? btilde(a, c, k, n, 0) : d_sum(a, c, k, n, 0);
      best = std::max(best, abs(v).convert_to<double>());
    }
    row.abs_sum = best;
    row.gcd_24n1 = gcd(24 * n + 1, k);
    row.bound = std::sqrt(double(row.gcd_24n1)) * std::pow(double(k), 0.5 + epsilon);
    row.ratio = row.abs_sum / row.bound;
    return row;
  });
  double early = 0.0, late = 0.0;
  for (const auto& r : rep.rows) {
    rep.max_ratio = std::max(rep.max_ratio, r.ratio);
    if (2 * r.k <= k_max)
      early = std::max(early, r.ratio);
    else
      late = std::max(late, r.ratio);
  }
  rep.growth_flag = k_max >= 4 && late > 2.0 * early;
  return rep;
}

}  // namespace crank
