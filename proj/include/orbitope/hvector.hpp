#pragma once

#include <vector>

#include "orbitope/integer.hpp"
#include "orbitope/polynomial.hpp"
#include "orbitope/simple_subset.hpp"

namespace orbitope {

/// Face numbers f_0..f_d of a d-polytope, the polytope itself counted as its
/// single d-face.
struct FVector {
  std::vector<Integer> counts;

  int dimension() const { return static_cast<int>(counts.size()) - 1; }
  /// f_d = 1, alternating sum 1, every entry positive.
  bool satisfies_invariants() const;
  Polynomial as_polynomial() const { return Polynomial(counts); }

  friend bool operator==(const FVector&, const FVector&) = default;
};

struct HVector {
  Polynomial coeffs;
  int dimension = 0;

  Integer operator[](int i) const { return coeffs.coefficient(static_cast<std::size_t>(i)); }
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// h(t) = f(t - 1).
HVector f_to_h(const FVector& f);
/// f(t) = h(t + 1). Throws ValidationError if any resulting count is not
/// positive.
FVector h_to_f(const HVector& h);

/// Face counts of the orbit polytope from the cross-section lattice:
/// f_i = sum over I in S(J), |I| = i, of (n+1)! / |W_{I*_J}|.
FVector f_vector_lattice(int n, const SimpleSubset& j);

/// h(t) = sum over I in S(J) of (n+1)! / |W_{I*_J}| (t-1)^|I|.
HVector h_polynomial_lattice(int n, const SimpleSubset& j);

/// sum over all I of (n+1)! / |W_I| (t-1)^|I|, which equals E_(n+1)(t).
Polynomial eulerian_polynomial_subset_form(int n);

/// Closed form for J = {s_n}: E_(n+1)(t) - C(n+1,2) t E_(n-1)(t). n >= 2.
HVector h_closed_form_last_reflection(int n);

/// h-polynomial of J(k,n) by iterating
///   h_k = h_(k-1) - C(n+1,k+1) (t^k + ... + t) E_(n-k)(t)
/// from h_0 = E_(n+1). Requires 0 <= k <= n.
HVector h_recurrence(int n, int k);

struct PoincareResult {
  Polynomial poincare;         // h(t^2)
  std::vector<Integer> betti;  // b_0..b_2d; odd entries zero
  Classification classification;
  /// Set when J is not combinatorially smooth: the polynomial exists but is
  /// not a Betti sequence of a rationally smooth variety.
  bool warning = false;
};

PoincareResult poincare(int n, const SimpleSubset& j);

/// P_1(t) - P_k(t) for the J(k,n) family, summed in closed form as
///   sum_{i=2..k} C(n+1,i+1) (t^(2i) + ... + t^2) E_(n-i)(t^2).
/// Requires 1 <= k <= n.
Polynomial poincare_difference(int n, int k);

struct IdentityCheck {
  Polynomial lhs;
  Polynomial rhs;
  bool equal = false;
};

/// sum_{i=0..k-1} C(k+1,i)(t-1)^(k-i) + k  versus  t + t^2 + ... + t^k.
IdentityCheck power_sum_binomial_identity(int k);

}  // namespace orbitope
