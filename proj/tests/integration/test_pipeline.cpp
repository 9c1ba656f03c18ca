#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "crank/asymptotics.hpp"
#include "crank/bounds.hpp"
#include "crank/exact_core.hpp"
#include "crank/special_fn.hpp"

using namespace crank;

TEST_CASE("past N(0,1,13) the exact difference is positive") {
  auto r = threshold_N(0, 1, 13);
  const int top = int(r.N) + 20;
  auto t = crank_table(top, Convention::GeneratingFunction);
  for (int n = int(r.N); n <= top; ++n) {
    auto cls = crank_class_counts(13, n, t);
    CHECK_MESSAGE(cls[0] > cls[1], n);
  }
  auto bd = crank_difference_asym(0, 1, 13, r.N);
  CHECK(bd.main_value > 0);
}

TEST_CASE("numeric q-series agrees with the exact table") {
  // C(zeta_7; q) at q = 0.3: direct product versus sum of exact coefficients
  const int top = 120;
  auto t = crank_table(top, Convention::GeneratingFunction);
  const double q = 0.3;
  CDouble sum = 0;
  for (int n = 0; n <= top; ++n)
    for (int m = -n; m <= n; ++m)
      sum += t.coeff(m, n).get_d() * std::polar(1.0, 2 * M_PI * m / 7) * std::pow(q, n);
  auto v = crank_gf_numeric(1.0 / 7.0, q);
  CHECK(std::abs(v.value - sum) < 1e-12 * std::abs(sum));
}

TEST_CASE("asymptotic class counts sum to p(n)") {
  const long n = 300;
  Real total = 0;
  for (long a = 0; a < 7; ++a) total += class_count_asym(a, 7, n).main_value;
  CHECK(abs(total - to_real(partition_number(n))) < 1);
}

TEST_CASE("small-c threshold lies past the last exact sign change") {
  auto t = crank_table(400, Convention::GeneratingFunction);
  for (long c : {5L, 7L}) {
    auto rep = verify_sign_table(c, t);
    for (const auto& ch : rep.checks) {
      auto r = threshold_N_small_c(ch.entry.a, ch.entry.b, c, ch.entry.d);
      CHECK(r.sign == ch.entry.reference);
      CHECK(r.N > ch.last_mismatch);
    }
  }
}
