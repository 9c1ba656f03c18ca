#include "crank/types.hpp"

#include <boost/math/constants/constants.hpp>
#include <sstream>

namespace crank {

Real to_real(const BigInt& x) {
  if (x.fits_slong_p()) return Real(x.get_si());
  return Real(x.get_str());
}

Real to_real(const Rational& x) { return to_real(BigInt(x.get_num())) / to_real(BigInt(x.get_den())); }

Real pi_real() { return boost::math::constants::pi<Real>(); }

std::string to_decimal(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace crank
