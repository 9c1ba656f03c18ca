#include "crank/special_fn.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <string>

#include "crank/modular_core.hpp"

namespace crank {

namespace {

constexpr double kPi = std::numbers::pi;
const CDouble kI{0.0, 1.0};

CDouble cexp_i(double a) { return {std::cos(a), std::sin(a)}; }

void guard(double tail, double scale, const char* what) {
  if (!(tail <= kDivergenceTail * std::max(1.0, scale)))
    throw ConditioningError(std::string(what) + ": series tail not certified under the truncation policy", tail);
}

// relative bound |prod_{n>=N}(1 - w_n) - 1| given sum |w_n| <= t < 1/2
double product_tail(double t) {
  if (t >= 0.5) return std::numeric_limits<double>::infinity();
  return std::expm1(2.0 * t);
}

}  // namespace

UpperHalfPoint::UpperHalfPoint(CDouble tau) : tau_(tau) {
  if (!(tau.imag() > 0)) throw DomainError("tau must lie in the upper half plane");
}

UpperHalfPoint UpperHalfPoint::from_q(CDouble q) {
  double r = std::abs(q);
  if (!(r > 0 && r < 1)) throw DomainError("need 0 < |q| < 1");
  return UpperHalfPoint(std::log(q) / (2.0 * kPi * kI));
}

CDouble UpperHalfPoint::q() const { return std::exp(2.0 * kPi * kI * tau_); }
CDouble UpperHalfPoint::q_pow(double alpha) const { return std::exp(2.0 * kPi * kI * alpha * tau_); }

UpperHalfPoint Chart::tau() const { return UpperHalfPoint((double(h) + kI * z) / double(k)); }
UpperHalfPoint Chart::tau_prime() const { return UpperHalfPoint((double(h_prime) + kI / z) / double(k)); }

Chart make_chart(long h, long k, CDouble z) {
  if (k < 1) throw DomainError("chart: k must be positive");
  if (gcd(h, k) != 1) throw DomainError("chart: gcd(h,k) != 1");
  if (!(z.real() > 0)) throw DomainError("chart: Re(z) must be positive");
  Chart ch;
  ch.h = h;
  ch.k = k;
  ch.z = z;
  ch.h_prime = h_prime_of(h, k);
  return ch;
}

SeriesValue q_pochhammer(CDouble a, CDouble q, const TruncationPolicy& policy) {
  double rq = std::abs(q);
  if (!(rq < 1)) throw DomainError("q_pochhammer: need |q| < 1");
  CDouble p = 1.0, qn = 1.0;
  double ra = std::abs(a);
  SeriesValue out;
  for (int n = 0; n < policy.series_terms; ++n) {
    p *= 1.0 - a * qn;
    qn *= q;
    out.terms = n + 1;
    double t = ra * std::abs(qn) / (1.0 - rq);
    out.tail_bound = std::abs(p) * product_tail(t);
    if (out.tail_bound < policy.target_abs_tol) break;
  }
  out.value = p;
  guard(out.tail_bound, std::abs(p), "q_pochhammer");
  return out;
}

SeriesValue eta(const UpperHalfPoint& tau, const TruncationPolicy& policy) {
  CDouble q = tau.q();
  SeriesValue qq = q_pochhammer(q, q, policy);
  CDouble pre = std::exp(kPi * kI * tau.tau() / 12.0);
  return {pre * qq.value, std::abs(pre) * qq.tail_bound, qq.terms};
}

SeriesValue theta(CDouble u, const UpperHalfPoint& tau, const TruncationPolicy& policy) {
  const double y = tau.tau().imag(), v = u.imag();
  auto term = [&](double nu) { return std::exp(kPi * kI * nu * nu * tau.tau() + 2.0 * kPi * kI * nu * (u + 0.5)); };
  // magnitude of the nu-th term on each side, and its geometric tail from nu on
  auto side_tail = [&](double nu, double s) {
    double f = std::exp(-kPi * y * nu * nu - 2.0 * kPi * s * nu * v);
    double r = std::exp(-kPi * y * (2.0 * nu + 1.0) - 2.0 * kPi * s * v);
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return f / (1.0 - r);
  };
  CDouble sum = 0.0;
  SeriesValue out;
  for (int j = 0; j < policy.series_terms; ++j) {
    double nu = j + 0.5;
    sum += term(nu) + term(-nu);
    out.terms = j + 1;
    out.tail_bound = side_tail(nu + 1.0, 1.0) + side_tail(nu + 1.0, -1.0);
    if (out.tail_bound < policy.target_abs_tol) break;
  }
  out.value = sum;
  guard(out.tail_bound, std::abs(sum), "theta");
  return out;
}

namespace {

double pole_distance(CDouble x, CDouble q, int terms) {
  double d = std::numeric_limits<double>::infinity();
  CDouble qn = q;
  for (int n = 1; n <= terms; ++n) {
    d = std::min(d, std::abs(1.0 - x * qn));
    d = std::min(d, std::abs(1.0 - qn / x));
    qn *= q;
  }
  return d;
}

}  // namespace

SeriesValue crank_gf_numeric(CDouble u, CDouble q, const TruncationPolicy& policy) {
  if (!(std::abs(q) < 1)) throw DomainError("crank_gf_numeric: need |q| < 1");
  CDouble x = std::exp(2.0 * kPi * kI * u);
  double dist = pole_distance(x, q, policy.series_terms);
  if (dist < kPoleDistance) throw ConditioningError("crank_gf_numeric: u sits on a pole", dist);
  auto p0 = q_pochhammer(q, q, policy);
  auto p1 = q_pochhammer(x * q, q, policy);
  auto p2 = q_pochhammer(q / x, q, policy);
  CDouble val = p0.value / (p1.value * p2.value);
  double r0 = p0.tail_bound / std::abs(p0.value);
  double r1 = p1.tail_bound / std::abs(p1.value);
  double r2 = p2.tail_bound / std::abs(p2.value);
  double rel = (1.0 + r0) / ((1.0 - r1) * (1.0 - r2)) - 1.0;
  return {val, std::abs(val) * rel, std::max({p0.terms, p1.terms, p2.terms})};
}

SeriesValue crank_gf_eta_theta(CDouble u, const UpperHalfPoint& tau, const TruncationPolicy& policy) {
  auto e = eta(tau, policy);
  auto t = theta(u, tau, policy);
  if (std::abs(t.value) < kPoleDistance) throw ConditioningError("crank_gf_eta_theta: theta vanishes", std::abs(t.value));
  CDouble pre = -2.0 * std::sin(kPi * u) * std::exp(2.0 * kPi * kI * tau.tau() / 24.0);
  CDouble val = pre * e.value * e.value / t.value;
  double rel = 2.0 * e.tail_bound / std::abs(e.value) + t.tail_bound / std::abs(t.value);
  return {val, std::abs(val) * rel, std::max(e.terms, t.terms)};
}

SeriesValue c_abc_numeric(long a, long b, long c, const UpperHalfPoint& tau1, const TruncationPolicy& policy) {
  if (c < 1 || b <= 0 || b >= c) throw DomainError("c_abc: need 0 < b < c");
  const CDouble t = tau1.tau();
  const double rq = std::abs(tau1.q());
  const double beta = double(b) / double(c);
  const double ang = kPi * double(a) / double(c);
  auto qpow = [&](double alpha) { return std::exp(2.0 * kPi * kI * alpha * t); };
  CDouble s1 = 0.0, s2 = 0.0;
  double dist = std::numeric_limits<double>::infinity();
  SeriesValue out;
  for (int m = 0; m < policy.series_terms; ++m) {
    double sign = (m % 2) ? -1.0 : 1.0;
    CDouble den1 = 1.0 - cexp_i(-2.0 * ang) * qpow(m + beta);
    dist = std::min(dist, std::abs(den1));
    s1 += sign * cexp_i(-ang) * qpow(0.5 * m * (m + 1) + 0.5 * beta) / den1;
    if (m >= 1) {
      CDouble den2 = 1.0 - cexp_i(2.0 * ang) * qpow(m - beta);
      dist = std::min(dist, std::abs(den2));
      s2 += sign * cexp_i(ang) * qpow(0.5 * m * (m + 1) - 0.5 * beta) / den2;
    }
    out.terms = m + 1;
    // next omitted index is m+1 in both sums; denominators stay >= 1 - |q|^{1-beta}
    double M = m + 1;
    double lead = std::pow(rq, 0.5 * M * (M + 1) - 0.5 * beta);
    double ratio = std::pow(rq, M + 1);
    double den_floor = 1.0 - std::pow(rq, 1.0 - beta);
    out.tail_bound = 2.0 * lead / ((1.0 - ratio) * den_floor);
    if (out.tail_bound < policy.target_abs_tol) break;
  }
  if (dist < kPoleDistance) throw ConditioningError("c_abc: denominator vanishes", dist);
  auto qq = q_pochhammer(tau1.q(), tau1.q(), policy);
  CDouble pre = kI / (2.0 * qq.value);
  CDouble val = pre * (s1 - s2);
  double rel_q = qq.tail_bound / std::abs(qq.value);
  out.tail_bound = std::abs(pre) * out.tail_bound + std::abs(val) * rel_q / (1.0 - rel_q);
  out.value = val;
  guard(out.tail_bound, std::abs(val), "c_abc");
  return out;
}

SeriesValue c_abc_numeric(long a, long b, long c, CDouble q1, const TruncationPolicy& policy) {
  return c_abc_numeric(a, b, c, UpperHalfPoint::from_q(q1), policy);
}

namespace {

void check_transform_args(long a, long c, long h, long k, CDouble z) {
  if (c < 3 || c % 2 == 0) throw DomainError("transform check: c must be odd and >= 3");
  if (a <= 0 || a >= c || gcd(a, c) != 1) throw DomainError("transform check: need 0 < a < c, gcd(a,c) = 1");
  if (k < 1 || gcd(h, k) != 1) throw DomainError("transform check: need gcd(h,k) = 1");
  if (!(z.real() > 0)) throw DomainError("transform check: Re(z) must be positive");
}

double rel_residual(CDouble lhs, CDouble rhs) { return std::abs(lhs - rhs) / std::abs(lhs); }

}  // namespace

double transform_check_divisible(long a, long c, long h, long k, CDouble z, const TruncationPolicy& policy) {
  check_transform_args(a, c, h, k, z);
  if (k % c != 0) throw DomainError("transform_check_divisible: c must divide k");
  Chart ch = make_chart(h, k, z);
  ModularDatum d = modular_datum(h, k);
  const long hp = ch.h_prime;
  CDouble lhs = crank_gf_numeric(double(a) / double(c), ch.tau().q(), policy).value;
  CDouble rhs_c = crank_gf_numeric(double(a * hp) / double(c), ch.tau_prime().q(), policy).value;
  double sign = ((a * k + 1) % 2 == 0) ? 1.0 : -1.0;
  CDouble pre = kI * std::sin(kPi * a / c) / (std::sqrt(z) * std::sin(kPi * double(a * hp) / c)) * sign * d.omega;
  CDouble ex = std::exp(kPi / (12.0 * k) * (1.0 / z - z));
  CDouble ph = exp_i_pi(Rational(-a * a * k * hp, c * c));
  return rel_residual(lhs, pre * ex * ph * rhs_c);
}

double transform_check_nondivisible(long a, long c, long h, long k, CDouble z, const TruncationPolicy& policy) {
  check_transform_args(a, c, h, k, z);
  if (k % c == 0) throw DomainError("transform_check_nondivisible: c divides k");
  Chart ch = make_chart(h, k, z);
  ModularDatum d = modular_datum(h, k);
  const long hp = ch.h_prime;
  const long l = l_shift(a, c, k);
  CDouble lhs = crank_gf_numeric(double(a) / double(c), ch.tau().q(), policy).value;
  UpperHalfPoint t1 = ch.tau_prime();
  CDouble cabc = c_abc_numeric(a * hp, l, c, t1, policy).value;
  double sign = ((a * k + l + 1) % 2 == 0) ? 1.0 : -1.0;
  CDouble pre = 4.0 * kI * std::sin(kPi * a / c) * d.omega * sign / std::sqrt(z);
  // phase e^{-pi i a^2 h' k / c^2 + 2 pi i h' l a / c^2}
  CDouble ph = exp_i_pi(Rational(-a * a * hp * k + 2 * hp * l * a, c * c));
  CDouble q1pow = t1.q_pow(-double(l * l) / (2.0 * c * c));
  CDouble ex = std::exp(kPi / (12.0 * k) * (1.0 / z - z));
  return rel_residual(lhs, pre * ph * q1pow * ex * cabc);
}

std::vector<TransformCase> transform_grid(const std::string& name) {
  const CDouble one{1.0, 0.0}, half{0.5, 0.0}, tq{0.75, 0.0}, tilt{1.0, 0.25};
  std::vector<TransformCase> g = {
      // c | k
      {1, 3, 1, 3, one}, {1, 3, 2, 3, half}, {2, 3, 1, 6, one}, {1, 5, 2, 5, one},
      {2, 5, 3, 5, tq}, {1, 3, 5, 6, tilt}, {3, 7, 2, 7, one}, {1, 5, 1, 10, one},
      // c does not divide k
      {1, 3, 1, 2, one}, {1, 5, 1, 3, tq}, {2, 5, 1, 2, one}, {1, 3, 0, 1, one},
      {2, 5, 0, 1, tilt}, {2, 7, 1, 4, one}, {3, 7, 2, 5, one}, {1, 5, 1, 6, one},
  };
  if (name == "small") return g;
  if (name != "full") throw DomainError("unknown grid '" + name + "'");
  for (long c : {3L, 5L, 7L})
    for (long a = 1; a < c; ++a)
      for (long k = 1; k <= 2 * c; ++k)
        for (long h = 0; h < k; ++h) {
          if (gcd(h, k) != 1 || gcd(a, c) != 1) continue;
          if ((a + h + k) % 3 != 0) continue;  // thin the grid
          g.push_back({a, c, h, k, (k % 2 || k > 6) ? one : tq});
        }
  return g;
}

double transform_residual(const TransformCase& tc, const TruncationPolicy& policy) {
  if (tc.k % tc.c == 0) return transform_check_divisible(tc.a, tc.c, tc.h, tc.k, tc.z, policy);
  return transform_check_nondivisible(tc.a, tc.c, tc.h, tc.k, tc.z, policy);
}

double eta_transform_residual(long h, long k, CDouble z, const TruncationPolicy& policy) {
  Chart ch = make_chart(h, k, z);
  ModularDatum d = modular_datum(h, k);
  CDouble lhs = eta(ch.tau(), policy).value;
  CDouble rhs = std::sqrt(kI / z) * chi_multiplier(d) * eta(ch.tau_prime(), policy).value;
  return rel_residual(lhs, rhs);
}

double theta_transform_residual(CDouble u, long h, long k, CDouble z, const TruncationPolicy& policy) {
  Chart ch = make_chart(h, k, z);
  ModularDatum d = modular_datum(h, k);
  CDouble chi = chi_multiplier(d);
  CDouble lhs = theta(u, ch.tau(), policy).value;
  CDouble rhs = chi * chi * chi * std::sqrt(kI / z) * std::exp(-kPi * double(k) * u * u / z) *
                theta(kI * u / z, ch.tau_prime(), policy).value;
  return rel_residual(lhs, rhs);
}

double triple_product_residual(CDouble u, const UpperHalfPoint& tau, const TruncationPolicy& policy) {
  CDouble q = tau.q();
  CDouble x = std::exp(2.0 * kPi * kI * u);
  CDouble lhs = theta(u, tau, policy).value;
  CDouble rhs = -2.0 * std::sin(kPi * u) * tau.q_pow(1.0 / 8.0) * q_pochhammer(q, q, policy).value *
                q_pochhammer(x * q, q, policy).value * q_pochhammer(q / x, q, policy).value;
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

double bessel_i_3_2_series(double x, int terms) {
  if (!(x > 0)) throw DomainError("bessel_i_3_2_series: x must be positive");
  double sum = 0.0;
  for (int m = 0; m < terms; ++m)
    sum += std::pow(x / 2.0, 1.5 + 2.0 * m) / (std::tgamma(m + 1.0) * std::tgamma(m + 2.5));
  return sum;
}

IdentityGridReport identity_grid(const TruncationPolicy& policy) {
  IdentityGridReport r;
  const CDouble zs[] = {1.0, 0.5, 0.75};
  const CDouble us[] = {1.0 / 3.0, CDouble(0.25, 0.1)};
  for (long k = 1; k <= 6; ++k)
    for (long h = 0; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      for (auto z : zs) {
        r.eta_max = std::max(r.eta_max, eta_transform_residual(h, k, z, policy));
        for (auto u : us) r.theta_max = std::max(r.theta_max, theta_transform_residual(u, h, k, z, policy));
        r.points += 3;
      }
    }
  const CDouble tu[] = {0.1, 1.0 / 3.0, CDouble(0.25, 0.1), CDouble(0.4, -0.2), CDouble(0.7, 0.05)};
  const CDouble taus[] = {CDouble(0, 1), CDouble(0, 0.5), CDouble(0.3, 0.4), CDouble(-0.45, 0.9)};
  for (auto u : tu)
    for (auto t : taus) {
      r.triple_max = std::max(r.triple_max, triple_product_residual(u, UpperHalfPoint(t), policy));
      ++r.points;
    }
  return r;
}

}  // namespace crank
