#pragma once

#include <vector>

#include "orbitope/integer.hpp"
#include "orbitope/polynomial.hpp"

namespace orbitope {

/// A permutation of 1..n in one-line notation.
class Permutation {
 public:
  /// Throws InputError unless `word` contains each of 1..size exactly once.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  int operator[](int position) const { return word_[position - 1]; }  // 1-based
  const std::vector<int>& word() const { return word_; }

  bool next();  // lexicographic successor; false after the last one

 private:
  std::vector<int> word_;
};

/// Positions i in 1..n-1 with p_i < p_{i+1}.
std::vector<int> ascent_set(const Permutation& sigma);

/// Number of permutations of 1..n with exactly i ascents, from the
/// recurrence E(n,i) = (i+1)E(n-1,i) + (n-i)E(n-1,i-1). Zero when i lies
/// outside 0..n-1. Requires n >= 1.
Integer eulerian_number(int n, int i);

/// E_n(t) = sum_i E(n,i) t^i. E_0 is the constant 1.
Polynomial eulerian_polynomial(int n);

/// C(n, k), zero for k < 0 or k > n. Requires n >= 0.
Integer binomial(int n, int k);

Integer factorial(int n);

}  // namespace orbitope
