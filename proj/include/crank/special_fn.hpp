#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "crank/errors.hpp"
#include "crank/types.hpp"

namespace crank {

struct TruncationPolicy {
  int series_terms = 64;
  double target_abs_tol = 1e-16;
};

// a tail bound above this after series_terms means the policy is too short
inline constexpr double kDivergenceTail = 1e-8;
// |1 - x q^n| below this is treated as sitting on a pole
inline constexpr double kPoleDistance = 1e-8;

struct SeriesValue {
  CDouble value;
  double tail_bound = 0.0;  // absolute
  int terms = 0;
};

class UpperHalfPoint {
 public:
  explicit UpperHalfPoint(CDouble tau);
  // principal logarithm, so tau has real part in (-1/2, 1/2]
  static UpperHalfPoint from_q(CDouble q);

  CDouble tau() const { return tau_; }
  CDouble q() const;
  CDouble q_pow(double alpha) const;  // e^{2 pi i alpha tau}

 private:
  CDouble tau_;
};

// tau = (h + iz)/k and tau' = (h' + i/z)/k
struct Chart {
  long h = 0;
  long k = 1;
  CDouble z{1.0, 0.0};
  long h_prime = 0;

  UpperHalfPoint tau() const;
  UpperHalfPoint tau_prime() const;
};

Chart make_chart(long h, long k, CDouble z);

// prod_{n >= 0} (1 - a q^n)
SeriesValue q_pochhammer(CDouble a, CDouble q, const TruncationPolicy& policy = {});

SeriesValue eta(const UpperHalfPoint& tau, const TruncationPolicy& policy = {});
SeriesValue theta(CDouble u, const UpperHalfPoint& tau, const TruncationPolicy& policy = {});

// (q)_inf / ((xq)_inf (x^{-1} q)_inf), x = e^{2 pi i u}
SeriesValue crank_gf_numeric(CDouble u, CDouble q, const TruncationPolicy& policy = {});
// same function through -2 sin(pi u) q^{1/24} eta^2 / theta
SeriesValue crank_gf_eta_theta(CDouble u, const UpperHalfPoint& tau, const TruncationPolicy& policy = {});

SeriesValue c_abc_numeric(long a, long b, long c, const UpperHalfPoint& tau1, const TruncationPolicy& policy = {});
SeriesValue c_abc_numeric(long a, long b, long c, CDouble q1, const TruncationPolicy& policy = {});

double transform_check_divisible(long a, long c, long h, long k, CDouble z, const TruncationPolicy& policy = {});
double transform_check_nondivisible(long a, long c, long h, long k, CDouble z,
                                    const TruncationPolicy& policy = {});

struct TransformCase {
  long a, c, h, k;
  CDouble z;
};
// "small" is the documented grid; "full" adds more charts of both kinds
std::vector<TransformCase> transform_grid(const std::string& name);
double transform_residual(const TransformCase& tc, const TruncationPolicy& policy = {});

double eta_transform_residual(long h, long k, CDouble z, const TruncationPolicy& policy = {});
double theta_transform_residual(CDouble u, long h, long k, CDouble z, const TruncationPolicy& policy = {});
double triple_product_residual(CDouble u, const UpperHalfPoint& tau, const TruncationPolicy& policy = {});

// eta/theta transformations for k <= 6, z in {1, 1/2, 3/4}; triple product on 20 points
struct IdentityGridReport {
  double eta_max = 0.0, theta_max = 0.0, triple_max = 0.0;
  int points = 0;
};
IdentityGridReport identity_grid(const TruncationPolicy& policy = {});

// I_{3/2}; ascending series near zero where the closed form cancels
template <class T>
T bessel_i_3_2(const T& x) {
  using std::cosh;
  using std::sinh;
  using std::sqrt;
  if (!(x > 0)) throw DomainError("bessel_i_3_2: x must be positive");
  const T pi = boost::math::constants::pi<T>();
  if (x < T(0.1)) {
    // (x/2)^{3/2} sum (x^2/4)^m / (m! Gamma(m+5/2))
    T y = x * x / 4;
    T term = 4 / (3 * sqrt(pi));  // 1/Gamma(5/2)
    T sum = term;
    for (int m = 1; m < 40; ++m) {
      term *= y / (T(m) * (T(m) + T(1.5)));
      sum += term;
      if (term < sum * std::numeric_limits<T>::epsilon()) break;
    }
    return sum * x * sqrt(x) / (2 * sqrt(T(2)));
  }
  return sqrt(2 / (pi * x)) * (cosh(x) - sinh(x) / x);
}

double bessel_i_3_2_series(double x, int terms = 30);

}  // namespace crank
