#pragma once

#include <vector>

#include "crank/modular_core.hpp"
#include "crank/types.hpp"

namespace crank {

enum class SumKind { A, Btilde, D };
const char* to_string(SumKind k);

struct SumSpec {
  SumKind kind = SumKind::A;
  long a = 0, c = 0;  // unused for A
  long k = 1;
  long n = 0, m = 0;
};

// primitive residues h mod k with their data, cached per k
const std::vector<ModularDatum>& primitive_data(long k);

Complex kloosterman_A(long k, long n);
// first argument pairs with h, second with h'
Complex btilde(long a, long c, long k, long n, long m);
Complex d_sum(long a, long c, long k, long n, long m);
Complex evaluate(const SumSpec& spec);

// k = c only; c may be composite as long as c does not divide a
Complex btilde_diagonal(long a, long c, long n, long m);

namespace detail {
// h' replaced by h' + lift*k (odd k) or h' + 2*lift*k (even k)
Complex btilde_lifted(long a, long c, long k, long n, long m, long lift);
Complex d_sum_lifted(long a, long c, long k, long n, long m, long lift);
}  // namespace detail

struct Lemma1Row {
  long k = 0;
  SumKind kind = SumKind::D;
  double abs_sum = 0.0;  // max over a
  long gcd_24n1 = 1;
  double bound = 0.0;  // gcd^{1/2} k^{1/2+eps}
  double ratio = 0.0;
};

struct Lemma1Report {
  long c = 0, n = 0, k_max = 0;
  double epsilon = 0.25;
  std::vector<Lemma1Row> rows;
  double max_ratio = 0.0;
  bool growth_flag = false;  // late-k ratios more than twice the early ones
};

Lemma1Report lemma1_diagnostic(long c, long n, long k_max, double epsilon = 0.25);

}  // namespace crank
