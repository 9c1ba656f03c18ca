#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crank/exact_core.hpp"
#include "crank/types.hpp"

namespace crank {

struct BoundConstants {
  long c = 0;
  Real c1, c2, c3;
  Real c1_tail, c2_tail, c3_tail;  // certified remainders of the truncated series
  Rational delta0;
  Real f_c;
  Real log_factor;  // 2(1+log((c-1)/2)) / (pi(1-pi^2/24))
};

BoundConstants constants(long c);

// T_1^+; c = 11 is accepted as well since the small-c search needs it there
Real main_term_lower(long a, long b, long c, long n);

struct ErrorBudget {
  long a = 0, b = 0, c = 0, n = 0;
  std::vector<std::pair<std::string, Real>> components;  // fixed order
  Real total;
  Real main_lower;

  const Real& component(const std::string& name) const;
};

ErrorBudget error_budget(long a, long b, long c, long n);

// (2/k) e^{2pi + 2pi t} (4/3 + 2^{5/4}) n^{-1/8}
Real arc_integral_bound(long k, const Rational& t, long n);

struct ExponentAudit {
  std::string name;
  double expected = 0.0;
  double measured = 0.0;
};

// log-log slopes between n_lo and n_hi; S_j and T tails are divided by their
// exponential factor first
std::vector<ExponentAudit> exponent_audit(long c, long n_lo, long n_hi);

struct ThresholdResult {
  long a = 0, b = 0, c = 0;
  long d = -1;   // residue class of the search, -1 when every n is scanned
  int sign = 1;  // sign the difference is proven to take past N
  long N = 0;
  long N2 = 0, N4 = 0;  // confirmation points
  Real gap_N, gap_N2, gap_N4;
  long evaluated = 0;
};

constexpr long kThresholdCap = 10'000'000;

ThresholdResult threshold_N(long a, long b, long c, long cap = kThresholdCap);
// search along arguments d, d+c, d+2c, ...
ThresholdResult threshold_N_small_c(long a, long b, long c, long d, long cap = kThresholdCap);

// sum_j rho_j i B~_{j,c,c}(-d,0)/sqrt(c), plus 2 rho_1 sin(pi/11) when c = 11
Real sign_predictor(long a, long b, long c, long d);

struct SignEntry {
  long a = 0, b = 0, c = 0, d = 0;
  int predicted = 0;  // 0 is the zero class
  int reference = 0;  // 0 when the triple is not in the published lists
  double predictor = 0.0;
};

std::vector<SignEntry> sign_table(long c);

struct SignCheck {
  SignEntry entry;
  std::vector<std::pair<long, int>> exact;  // (argument, sign)
  std::optional<long> stabilization;        // first argument after the last mismatch
  long last_mismatch = -1;
};

struct SignReport {
  long c = 0;
  long arg_max = 0;
  std::vector<SignCheck> checks;  // listed triples only
  std::vector<SignEntry> unlisted_nonzero;  // predicted nonzero but absent from the lists
  long ramanujan_shift = -1;  // -1 for c = 9
  bool ramanujan_zero = true;
  bool all_stable() const;
};

// needs a GeneratingFunction table reaching arg_max
SignReport verify_sign_table(long c, const CrankTable& table, long arg_max = 400);

}  // namespace crank
