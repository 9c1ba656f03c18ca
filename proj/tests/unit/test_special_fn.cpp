#include <doctest.h>

#include <cmath>
#include <numeric>
#include <numbers>

#include "crank/exact_core.hpp"
#include "crank/special_fn.hpp"

using namespace crank;

namespace {
const CDouble I{0.0, 1.0};
const double kPi = std::numbers::pi;
}  // namespace

TEST_SUITE("special_fn") {

TEST_CASE("eta values") {
  UpperHalfPoint t(I);
  auto e = eta(t);
  double expect = std::tgamma(0.25) / (2.0 * std::pow(kPi, 0.75));
  CHECK(std::abs(e.value - expect) < 1e-14);
  CHECK(e.tail_bound < 1e-15);

  UpperHalfPoint t2(CDouble(0.3, 0.7)), t3(CDouble(1.3, 0.7));
  CDouble ratio = eta(t3).value / eta(t2).value;
  CHECK(std::abs(ratio - std::exp(kPi * I / 12.0)) < 1e-13);

  CHECK(eta_transform_residual(0, 1, 1.0) < 1e-14);
  CHECK_THROWS_AS(UpperHalfPoint(CDouble(0.2, 0.0)), DomainError);
}

TEST_CASE("theta values") {
  UpperHalfPoint t(I);
  CHECK(std::abs(theta(0.0, t).value) < 1e-15);
  auto v = theta(0.5, t).value;
  CHECK(std::abs(v.imag()) < 1e-15);
  CHECK(std::abs(v.real()) > 0.1);
  CHECK(triple_product_residual(1.0 / 3.0, UpperHalfPoint(0.5 * I)) < 1e-10);
}

TEST_CASE("triple product over a 20-point grid") {
  const CDouble us[] = {0.1, 1.0 / 3.0, CDouble(0.25, 0.1), CDouble(0.4, -0.2), CDouble(0.7, 0.05)};
  const CDouble taus[] = {I, 0.5 * I, CDouble(0.3, 0.4), CDouble(-0.45, 0.9)};
  for (auto u : us)
    for (auto t : taus) CHECK(triple_product_residual(u, UpperHalfPoint(t)) < 1e-10);
}

TEST_CASE("identity grid summary") {
  auto r = identity_grid();
  CHECK(r.points == 3 * 3 * 12 + 20);
  CHECK(r.eta_max < 1e-10);
  CHECK(r.theta_max < 1e-10);
  CHECK(r.triple_max < 1e-10);
}

TEST_CASE("eta and theta transformation grid") {
  const CDouble zs[] = {1.0, 0.5, 0.75};
  const CDouble us[] = {1.0 / 3.0, CDouble(0.25, 0.1)};
  for (long k = 1; k <= 6; ++k)
    for (long h = 0; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      for (auto z : zs) {
        CHECK(eta_transform_residual(h, k, z) < 1e-10);
        for (auto u : us) CHECK(theta_transform_residual(u, h, k, z) < 1e-10);
      }
    }
}

TEST_CASE("theta divergence guard") {
  TruncationPolicy tiny{3, 1e-16};
  CHECK_THROWS_AS(theta(0.2, UpperHalfPoint(CDouble(0.0, 0.01)), tiny), ConditioningError);
}

TEST_CASE("crank generating function") {
  // x = 1 reduces to the partition generating function
  CDouble q = 0.3;
  auto c1 = crank_gf_numeric(0.0, q).value;
  double pgf = 0.0;
  for (int n = 0; n <= 80; ++n) pgf += partition_number(n).get_d() * std::pow(0.3, n);
  CHECK(std::abs(c1 - pgf) < 1e-12 * pgf);

  auto direct = crank_gf_numeric(1.0 / 3.0, 0.1).value;
  auto via = crank_gf_eta_theta(1.0 / 3.0, UpperHalfPoint::from_q(0.1)).value;
  CHECK(std::abs(direct - via) < 1e-11);

  CHECK_THROWS_AS(crank_gf_numeric(0.0, CDouble(1.0, 0.0)), DomainError);
  // x q = 1 is a pole
  CHECK_THROWS_AS(crank_gf_numeric(CDouble(0.0, std::log(0.5) / (2.0 * kPi)), 0.5), ConditioningError);
}

TEST_CASE("q^4 coefficient against the exact table") {
  // finite product, coefficient extraction through a discrete Fourier sum on |q| = r
  auto t = crank_table(4, Convention::GeneratingFunction);
  double exact = crank_coeff_exact(1, 5, 4, t).convert_to<double>();
  const int K = 64;
  const double r = 0.2;
  CDouble acc = 0.0;
  for (int s = 0; s < K; ++s) {
    CDouble q = r * std::exp(2.0 * kPi * I * double(s) / double(K));
    acc += crank_gf_numeric(0.2, q).value * std::exp(-8.0 * kPi * I * double(s) / double(K));
  }
  double coeff = (acc / double(K)).real() / std::pow(r, 4);
  CHECK(std::abs(coeff - exact) < 1e-9);
}

TEST_CASE("C(a,b,c;q)") {
  // brute force 200-term oracle
  auto brute = [](long a, long b, long c, double q1) {
    CDouble s1 = 0.0, s2 = 0.0;
    double beta = double(b) / c, ang = kPi * a / c;
    for (int m = 0; m < 200; ++m) {
      double sg = (m % 2) ? -1.0 : 1.0;
      s1 += sg * std::exp(-I * ang) * std::pow(q1, 0.5 * m * (m + 1) + 0.5 * beta) /
            (1.0 - std::exp(-2.0 * I * ang) * std::pow(q1, m + beta));
      if (m >= 1)
        s2 += sg * std::exp(I * ang) * std::pow(q1, 0.5 * m * (m + 1) - 0.5 * beta) /
              (1.0 - std::exp(2.0 * I * ang) * std::pow(q1, m - beta));
    }
    double qq = 1.0;
    for (int n = 1; n < 200; ++n) qq *= 1.0 - std::pow(q1, n);
    return I / (2.0 * qq) * (s1 - s2);
  };
  auto v = c_abc_numeric(1, 1, 3, CDouble(0.05, 0.0));
  CHECK(std::abs(v.value - brute(1, 1, 3, 0.05)) < 1e-14);

  // the i/2 prefactor flips sign under conjugation
  auto conj_v = c_abc_numeric(-1, 1, 3, CDouble(0.05, 0.0));
  CHECK(std::abs(conj_v.value + std::conj(v.value)) < 1e-14);

  // next correction is relative order q1^{b/c}
  double q1 = 1e-30;
  auto small = c_abc_numeric(2, 3, 7, CDouble(q1, 0.0));
  CDouble lead = 0.5 * I * std::exp(-I * kPi * 2.0 / 7.0) * std::pow(q1, 3.0 / 14.0);
  CHECK(std::abs(small.value - lead) < 1e-10 * std::abs(lead));
  CHECK_THROWS_AS(c_abc_numeric(1, 3, 3, CDouble(0.05, 0.0)), DomainError);
}

TEST_CASE("transformation of C, divisible case") {
  CHECK(transform_check_divisible(1, 3, 1, 3, 1.0) < 1e-9);
  CHECK(transform_check_divisible(1, 3, 2, 3, 0.5) < 1e-9);
  CHECK(transform_check_divisible(2, 3, 1, 6, 1.0) < 1e-9);
  CHECK_THROWS_AS(transform_check_divisible(1, 3, 1, 2, 1.0), DomainError);
}

TEST_CASE("transformation of C, non-divisible case") {
  CHECK(transform_check_nondivisible(1, 3, 1, 2, 1.0) < 1e-9);
  CHECK(transform_check_nondivisible(1, 5, 1, 3, 0.75) < 1e-9);
  CHECK(transform_check_nondivisible(2, 5, 1, 2, 1.0) < 1e-9);
  CHECK_THROWS_AS(transform_check_nondivisible(1, 3, 1, 3, 1.0), DomainError);
}

TEST_CASE("full transformation grid") {
  for (const auto& tc : transform_grid("full")) {
    INFO("a=" << tc.a << " c=" << tc.c << " h=" << tc.h << " k=" << tc.k);
    CHECK(transform_residual(tc) < 1e-9);
  }
}

TEST_CASE("bessel I_{3/2}") {
  CHECK(std::abs(bessel_i_3_2(1.0) - bessel_i_3_2_series(1.0)) < 1e-15);
  for (double x : {0.5, 5.0, 20.0}) {
    double a = bessel_i_3_2(x), b = bessel_i_3_2_series(x);
    CHECK(std::abs(a - b) < 1e-12 * b);
  }
  double x = 1e-4;
  double lead = std::pow(x, 1.5) * std::sqrt(2.0) / (3.0 * std::sqrt(kPi));
  CHECK(std::abs(bessel_i_3_2(x) - lead) < 1e-7 * lead);
  CHECK(std::abs(bessel_i_3_2(x) - bessel_i_3_2_series(x)) < 1e-14 * lead);
  double prev = 0.0;
  for (double y = 0.01; y < 40.0; y *= 1.3) {
    double v = bessel_i_3_2(y);
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(bessel_i_3_2(0.0), DomainError);
  Real hp = bessel_i_3_2(Real(5));
  CHECK(abs(hp - Real(bessel_i_3_2_series(5.0))) < Real(1e-12) * hp);
}

}
