#include "crank/asymptotics.hpp"

#include <string>

#include "crank/errors.hpp"
#include "crank/exp_sums.hpp"
#include "crank/modular_core.hpp"
#include "crank/parallel.hpp"
#include "crank/special_fn.hpp"

namespace crank {

const char* to_string(TermSign s) { return s == TermSign::Plus ? "+" : "-"; }

const char* to_string(Target t) {
  switch (t) {
    case Target::CrankCoeff:
      return "crank_coeff";
    case Target::Partition:
      return "partition";
    case Target::ClassCount:
      return "class_count";
    case Target::CrankDifference:
      return "crank_difference";
  }
  return "?";
}

Rational delta_value(long l, long c, long r, TermSign s) {
  Rational lc(l, c);
  lc.canonicalize();
  Rational d;
  if (s == TermSign::Plus)
    d = -(Rational(1, 2) + r) * lc + lc * lc / 2 + Rational(1, 24);
  else
    d = lc / 2 + lc * lc / 2 - Rational(23, 24) - r * (1 - lc);
  d.canonicalize();
  return d;
}

Rational m_shift_value(long a, long c, long k, long l, long r, TermSign s) {
  BigInt A(a), C(c), K(k), L(l), R(r);
  BigInt num = -A * A * K * K + 2 * L * A * K - A * K * C - L * L;
  if (s == TermSign::Plus)
    num += L * C - 2 * A * R * K * C + 2 * L * C * R;
  else
    num += 2 * C * C * R - 2 * L * R * C + 2 * A * R * K * C + 2 * L * C + 2 * C * C - A * K * C;
  Rational m(num, 2 * C * C);
  m.canonicalize();
  return m;
}

Rational delta0(long c) {
  if (c < 3 || c % 2 == 0) throw DomainError("delta0: c must be odd and >= 3");
  Rational d = Rational(1, 2 * c * c) + Rational(1, 24) - Rational(1, 2 * c);
  d.canonicalize();
  return d;
}

std::vector<DeltaTerm> enumerate_delta_terms(long a, long c, long k) {
  if (c < 3 || c % 2 == 0) throw DomainError("enumerate_delta_terms: c must be odd and >= 3");
  if (a <= 0 || a >= c || gcd(a, c) != 1) throw DomainError("enumerate_delta_terms: need 0 < a < c, gcd(a,c) = 1");
  if (k < 1 || k % c == 0) throw DomainError("enumerate_delta_terms: c must not divide k");
  const long l = l_shift(a, c, k);
  std::vector<DeltaTerm> out;
  // both deltas strictly decrease in r, so stop at the first non-positive value
  for (TermSign s : {TermSign::Plus, TermSign::Minus}) {
    for (long r = 0;; ++r) {
      Rational d = delta_value(l, c, r, s);
      if (d <= 0) break;
      Rational m = m_shift_value(a, c, k, l, r, s);
      if (m.get_den() != 1)
        throw std::logic_error("non-integral shift at a=" + std::to_string(a) + " c=" + std::to_string(c) +
                               " k=" + std::to_string(k) + " r=" + std::to_string(r));
      out.push_back({k, r, s, l, d, m.get_num().get_si()});
    }
  }
  return out;
}

long farey_order(long n) {
  if (n < 0) throw DomainError("farey_order: n must be >= 0");
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Real rho(long a, long b, long c, long j) {
  Real t = 2 * pi_real() * j / c;
  return cos(t * a) - cos(t * b);
}

namespace {

struct KParts {
  Complex b{0}, d_plus{0}, d_minus{0};
  Complex total() const { return b + d_plus + d_minus; }
};

// the k-th summand of the expansion of A~(a/c; n)
KParts expansion_term(long a, long c, long k, long n, const Real& x, const Real& sqrt_x) {
  const Real pi = pi_real();
  const Real sqrt3 = sqrt(Real(3));
  const Real sqrt_k = sqrt(Real(k));
  KParts out;
  if (k % c == 0) {
    Complex bt = btilde(a, c, k, -n, 0);
    Real amp = 4 * sqrt3 / sqrt_x / sqrt_k * sinh(pi * sqrt_x / (6 * k));
    out.b = Complex(0, 1) * bt * amp;
    return out;
  }
  const Real pre = 8 * sqrt3 * sin(pi * a / c) / sqrt_x / sqrt_k;
  std::vector<Complex> plus, minus;
  for (const auto& t : enumerate_delta_terms(a, c, k)) {
    Real arg = pi * sqrt(2 * to_real(t.delta) * x) / (sqrt3 * k);
    Complex v = d_sum(a, c, k, -n, t.m_shift) * (pre * sinh(arg));
    (t.sign == TermSign::Plus ? plus : minus).push_back(v);
  }
  out.d_plus = pairwise_sum(plus);
  out.d_minus = pairwise_sum(minus);
  return out;
}

void check_prime_modulus(long c) {
  if (c < 3 || c % 2 == 0 || !is_prime(c)) throw DomainError("c must be an odd prime");
}

void finish(AsymptoticBreakdown& bd, const std::vector<Complex>& per_k) {
  Complex tot = pairwise_sum(per_k);
  std::vector<Real> re;
  for (std::size_t i = 0; i < per_k.size(); ++i) {
    bd.per_k_terms.push_back({static_cast<long>(i) + 1, per_k[i].real(), per_k[i].imag()});
    re.push_back(per_k[i].real());
  }
  bd.main_value = pairwise_sum(re);
  bd.imag_diagnostic = tot.imag();
  Real last = per_k.empty() ? Real(0) : Real(abs(per_k.back()));
  bd.residual_estimate = abs(bd.imag_diagnostic) + last;
}

}  // namespace

AsymptoticBreakdown crank_coeff_asym(long a, long c, long n) {
  check_prime_modulus(c);
  if (a <= 0 || a >= c) throw DomainError("crank_coeff_asym: need 0 < a < c");
  if (n < 1) throw DomainError("crank_coeff_asym: n must be >= 1");
  AsymptoticBreakdown bd;
  bd.target = Target::CrankCoeff;
  bd.a = a;
  bd.c = c;
  bd.n = n;
  bd.cutoff = farey_order(n);
  const Real x = Real(24 * n - 1), sx = sqrt(x);
  auto per_k = parallel_map(static_cast<std::size_t>(bd.cutoff),
                            [&](std::size_t i) { return expansion_term(a, c, long(i) + 1, n, x, sx).total(); });
  finish(bd, per_k);
  return bd;
}

AsymptoticBreakdown partition_asym(long n, long k_max) {
  if (n < 1) throw DomainError("partition_asym: n must be >= 1");
  if (k_max < 1) throw DomainError("partition_asym: k_max must be >= 1");
  AsymptoticBreakdown bd;
  bd.target = Target::Partition;
  bd.n = n;
  bd.cutoff = k_max;
  const Real pi = pi_real();
  const Real x = Real(24 * n - 1), sx = sqrt(x);
  const Real pre = 2 * pi / pow(x, Real(0.75));
  auto per_k = parallel_map(static_cast<std::size_t>(k_max), [&](std::size_t i) {
    long k = long(i) + 1;
    return kloosterman_A(k, n) * (pre / k * bessel_i_3_2(pi * sx / (6 * k)));
  });
  finish(bd, per_k);
  return bd;
}

AsymptoticBreakdown class_count_asym(long a, long c, long n) {
  check_prime_modulus(c);
  if (a < 0 || a >= c) throw DomainError("class_count_asym: need 0 <= a < c");
  if (n < 1) throw DomainError("class_count_asym: n must be >= 1");
  AsymptoticBreakdown bd;
  bd.target = Target::ClassCount;
  bd.a = a;
  bd.c = c;
  bd.n = n;
  bd.cutoff = farey_order(n);
  const Real pi = pi_real();
  const Real x = Real(24 * n - 1), sx = sqrt(x);
  const Real pre = 2 * pi / pow(x, Real(0.75));
  auto per_k = parallel_map(static_cast<std::size_t>(bd.cutoff), [&](std::size_t i) {
    long k = long(i) + 1;
    std::vector<Complex> parts;
    parts.push_back(kloosterman_A(k, n) * (pre / k * bessel_i_3_2(pi * sx / (6 * k))));
    for (long j = 1; j < c; ++j) {
      Complex zeta = exp_i_pi_hp(Rational(-2 * floor_mod(a * j, c), c));
      parts.push_back(zeta * expansion_term(j, c, k, n, x, sx).total());
    }
    return pairwise_sum(parts) / Real(c);
  });
  finish(bd, per_k);
  return bd;
}

AsymptoticBreakdown crank_difference_asym(long a, long b, long c, long n) {
  check_prime_modulus(c);
  if (a < 0 || a > b || 2 * b > c - 1) throw DomainError("crank_difference_asym: need 0 <= a <= b <= (c-1)/2");
  if (n < 1) throw DomainError("crank_difference_asym: n must be >= 1");
  AsymptoticBreakdown bd;
  bd.target = Target::CrankDifference;
  bd.a = a;
  bd.b = b;
  bd.c = c;
  bd.n = n;
  bd.cutoff = farey_order(n);
  const long J = (c - 1) / 2;
  const Real x = Real(24 * n - 1), sx = sqrt(x);
  std::vector<Real> rhos;
  for (long j = 1; j <= J; ++j) rhos.push_back(a == b ? Real(0) : rho(a, b, c, j));
  // grid[k-1][j-1]
  auto grid = parallel_map(static_cast<std::size_t>(bd.cutoff), [&](std::size_t i) {
    std::vector<KParts> row;
    for (long j = 1; j <= J; ++j) {
      KParts kp = expansion_term(j, c, long(i) + 1, n, x, sx);
      Real w = 2 * rhos[j - 1] / c;
      row.push_back({kp.b * w, kp.d_plus * w, kp.d_minus * w});
    }
    return row;
  });
  std::vector<Complex> per_k;
  for (const auto& row : grid) {
    std::vector<Complex> v;
    for (const auto& kp : row) v.push_back(kp.total());
    per_k.push_back(pairwise_sum(v));
  }
  finish(bd, per_k);
  for (long j = 1; j <= J; ++j) {
    std::vector<Real> s, tp, tm;
    for (const auto& row : grid) {
      s.push_back(row[j - 1].b.real());
      tp.push_back(row[j - 1].d_plus.real());
      tm.push_back(row[j - 1].d_minus.real());
    }
    bd.per_j.push_back({j, rhos[j - 1], pairwise_sum(s), pairwise_sum(tp), pairwise_sum(tm)});
  }
  return bd;
}

}  // namespace crank
