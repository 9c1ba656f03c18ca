#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <gmpxx.h>

namespace crank {

using BigInt = mpz_class;
using Rational = mpq_class;

// 50 decimal digits is plenty for Rademacher-type sums at n <= a few thousand.
using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;
using CDouble = std::complex<double>;

Real to_real(const BigInt& x);
Real to_real(const Rational& x);
Real pi_real();

// decimal rendering used by reports; digits are significant digits
std::string to_decimal(const Real& x, int digits = 30);

}  // namespace crank
