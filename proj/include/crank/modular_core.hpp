#pragma once

#include <vector>

#include "crank/types.hpp"

namespace crank {

struct ModularDatum {
  long h = 0;
  long k = 1;
  long h_prime = 0;  // least non-negative; mod k for odd k, mod 2k for even k
  Rational s_hk;
  CDouble omega{1.0, 0.0};
};

struct FareyArc {
  long h = 0;
  long k = 1;
  long k1 = 1;
  long k2 = 1;
  Rational theta_minus;  // 1/(k(k1+k))
  Rational theta_plus;   // 1/(k(k2+k))
};

long gcd(long a, long b);
long floor_mod(long a, long m);
bool is_prime(long n);
// inverse of a modulo m; DomainError if none
long mod_inverse(long a, long m);

Rational sawtooth(const Rational& x);
Rational dedekind_sum(long h, long k);
long h_prime_of(long h, long k);
ModularDatum modular_datum(long h, long k);

// angles are kept as exact multiples of pi
Rational reduce_mod2(const Rational& x);
CDouble exp_i_pi(const Rational& x);
Complex exp_i_pi_hp(const Rational& x);

Rational chi_angle(const ModularDatum& d);
CDouble chi_multiplier(const ModularDatum& d);

std::vector<FareyArc> farey_sequence(long N);

long l_shift(long a, long c, long k);

}  // namespace crank
