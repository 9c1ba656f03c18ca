#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "crank/types.hpp"

namespace crank {

inline constexpr int kEnumerationCap = 80;

class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

BigInt partition_number(long n);
std::vector<BigInt> partition_numbers(long max_n);

// parts arrive non-increasing; CapacityError past the cap
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn);

int crank(const Partition& lambda);
int crank_of_parts(const std::vector<int>& parts);

enum class Convention { GeneratingFunction, Combinatorial };
const char* to_string(Convention c);

// dense block of integer coefficients x^m q^n, |m| <= window, 0 <= n <= q_trunc
class LaurentSeries {
 public:
  LaurentSeries(int window, int q_trunc);

  int window() const { return window_; }
  int q_trunc() const { return q_trunc_; }

  const BigInt& at(int m, int n) const;
  BigInt& at(int m, int n);
  BigInt coeff(int m, int n) const;  // zero outside the window

  // in place; terms past q_trunc are dropped, x past the window throws
  void multiply_one_minus(int e, int j);
  void divide_one_minus(int e, int j);

 private:
  std::size_t index(int m, int n) const;
  int window_;
  int q_trunc_;
  std::vector<BigInt> data_;
};

class CrankTable {
 public:
  CrankTable(int max_n, Convention conv, LaurentSeries series);

  int max_n() const { return max_n_; }
  Convention convention() const { return conv_; }
  BigInt coeff(int m, int n) const;
  std::vector<BigInt> row(int n) const;  // m = -n..n

  void write_csv(std::ostream& os) const;

 private:
  int max_n_;
  Convention conv_;
  LaurentSeries series_;
};

CrankTable crank_table(int max_n, Convention conv);

BigInt crank_class_count(int a, int c, int n, const CrankTable& table);
std::vector<BigInt> crank_class_counts(int c, int n, const CrankTable& table);

struct CongruenceCheck {
  int argument = 0;
  BigInt pn;
  bool pn_divisible = false;
  std::vector<BigInt> classes;
  bool classes_equal = false;
};

struct CongruenceReport {
  int prime = 0;
  int shift = 0;
  int n_max = 0;
  std::vector<CongruenceCheck> checks;
  bool all_pass() const;
};

CongruenceReport verify_congruence(int prime, int shift, int n_max);
CongruenceReport verify_congruence(int prime, int shift, int n_max, const CrankTable& table);

Real crank_coeff_exact(int a, int c, int n, const CrankTable& table);

}  // namespace crank
