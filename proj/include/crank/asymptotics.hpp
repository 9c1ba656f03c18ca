#pragma once

#include <vector>

#include "crank/types.hpp"

namespace crank {

enum class TermSign { Plus, Minus };
const char* to_string(TermSign s);

struct DeltaTerm {
  long k = 1;
  long r = 0;
  TermSign sign = TermSign::Plus;
  long l = 0;
  Rational delta;
  long m_shift = 0;
};

Rational delta_value(long l, long c, long r, TermSign s);
// exact shift; may be non-integral for bad input, callers check
Rational m_shift_value(long a, long c, long k, long l, long r, TermSign s);
std::vector<DeltaTerm> enumerate_delta_terms(long a, long c, long k);

Rational delta0(long c);

enum class Target { CrankCoeff, Partition, ClassCount, CrankDifference };
const char* to_string(Target t);

struct KTerm {
  long k = 0;
  Real value;  // real part
  Real imag;
};

struct JSplit {
  long j = 0;
  Real rho;
  Real S, T_plus, T_minus;
};

struct AsymptoticBreakdown {
  Target target = Target::CrankCoeff;
  long a = 0, b = 0, c = 0, n = 0;
  long cutoff = 0;  // largest k summed
  Real main_value;
  Real imag_diagnostic;
  std::vector<KTerm> per_k_terms;
  // |imag| plus the size of the last retained k-term; a scale, not a bound
  Real residual_estimate;
  std::vector<JSplit> per_j;  // crank differences only
};

long farey_order(long n);  // floor(sqrt(n))

AsymptoticBreakdown crank_coeff_asym(long a, long c, long n);
AsymptoticBreakdown partition_asym(long n, long k_max);
AsymptoticBreakdown class_count_asym(long a, long c, long n);
AsymptoticBreakdown crank_difference_asym(long a, long b, long c, long n);

Real rho(long a, long b, long c, long j);

}  // namespace crank
