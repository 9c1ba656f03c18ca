#include "crank/modular_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "crank/errors.hpp"

namespace crank {

long gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long mod_inverse(long a, long m) {
  if (m == 1) return 0;
  long r0 = floor_mod(a, m), r1 = m;
  long s0 = 1, s1 = 0;
  while (r1 != 0) {
    long q = r0 / r1;
    long t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw DomainError("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  return floor_mod(s0, m);
}

Rational sawtooth(const Rational& x_in) {
  Rational x = x_in;
  x.canonicalize();
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (x.get_den() == 1) return Rational(0);
  Rational r = x - Rational(fl) - Rational(1, 2);
  r.canonicalize();
  return r;
}

Rational dedekind_sum(long h, long k) {
  if (k <= 0) throw DomainError("dedekind_sum: k must be positive");
  if (gcd(h, k) != 1) throw DomainError("dedekind_sum: gcd(h,k) != 1");
  long hh = floor_mod(h, k);
  // each term ((mu/k))((h mu/k)) = (2mu-k)(2r-k)/(4k^2), r = h mu mod k, never 0 here
  BigInt num = 0;
  for (long mu = 1; mu < k; ++mu) {
    long r = static_cast<long>((static_cast<__int128>(hh) * mu) % k);
    num += BigInt(2 * mu - k) * BigInt(2 * r - k);
  }
  Rational s(num, BigInt(4) * k * k);
  s.canonicalize();
  return s;
}

long h_prime_of(long h, long k) {
  if (k <= 0) throw DomainError("k must be positive");
  if (gcd(h, k) != 1) throw DomainError("gcd(h,k) != 1");
  long mod = (k % 2 == 0) ? 2 * k : k;
  if (mod == 1) return 0;
  long inv = mod_inverse(h, mod);
  return floor_mod(-inv, mod);
}

Rational reduce_mod2(const Rational& x) {
  BigInt den2 = 2 * BigInt(x.get_den());
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_num_mpz_t(), den2.get_mpz_t());
  Rational out(r, x.get_den());
  out.canonicalize();
  return out;
}

CDouble exp_i_pi(const Rational& x) {
  Rational r = reduce_mod2(x);
  // fold to (-1,1] so the double angle is small
  if (r > 1) r -= 2;
  double a = std::numbers::pi * r.get_d();
  return {std::cos(a), std::sin(a)};
}

Complex exp_i_pi_hp(const Rational& x) {
  Rational r = reduce_mod2(x);
  if (r > 1) r -= 2;
  Real a = pi_real() * to_real(r);
  return Complex(cos(a), sin(a));
}

ModularDatum modular_datum(long h, long k) {
  ModularDatum d;
  d.h = h;
  d.k = k;
  d.h_prime = h_prime_of(h, k);
  d.s_hk = dedekind_sum(h, k);
  d.omega = exp_i_pi(d.s_hk);
  return d;
}

Rational chi_angle(const ModularDatum& d) {
  Rational a = Rational(-1, 4) - d.s_hk - Rational(d.h_prime - d.h, 12 * d.k);
  a.canonicalize();
  return reduce_mod2(a);
}

CDouble chi_multiplier(const ModularDatum& d) { return exp_i_pi(chi_angle(d)); }

std::vector<FareyArc> farey_sequence(long N) {
  if (N < 1) throw DomainError("farey_sequence: N must be >= 1");
  struct Frac {
    long h, k;
  };
  std::vector<Frac> f;
  long a = 0, b = 1, c = 1, d = N;
  f.push_back({a, b});
  while (c <= N) {
    long t = (N + b) / d;
    long e = t * c - a, g = t * d - b;
    a = c;
    b = d;
    c = e;
    d = g;
    f.push_back({a, b});
  }
  // f runs 0/1 .. 1/1; 1/1 closes the circle and is not its own arc
  std::vector<FareyArc> arcs;
  std::size_t len = f.size();
  for (std::size_t i = 0; i + 1 < len; ++i) {
    FareyArc arc;
    arc.h = f[i].h;
    arc.k = f[i].k;
    arc.k1 = (i == 0) ? f[len - 2].k : f[i - 1].k;
    arc.k2 = f[i + 1].k;
    arc.theta_minus = Rational(1, arc.k * (arc.k1 + arc.k));
    arc.theta_plus = Rational(1, arc.k * (arc.k2 + arc.k));
    arcs.push_back(arc);
  }
  return arcs;
}

long l_shift(long a, long c, long k) {
  if (c < 3 || c % 2 == 0) throw DomainError("l_shift: c must be odd and >= 3");
  if (a <= 0 || a >= c || gcd(a, c) != 1) throw DomainError("l_shift: need 0 < a < c, gcd(a,c) = 1");
  if (k <= 0) throw DomainError("l_shift: k must be positive");
  if (k % c == 0) throw DomainError("l_shift: c divides k");
  return floor_mod(a * floor_mod(k, c), c);
}

}  // namespace crank
