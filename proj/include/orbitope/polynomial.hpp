#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "orbitope/integer.hpp"

namespace orbitope {

/// Dense univariate polynomial over the integers. Coefficient i multiplies
/// t^i. The stored sequence never ends in a zero, so the zero polynomial is
/// the empty sequence and equality is plain sequence equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  Polynomial(std::initializer_list<long long> coeffs);

  static Polynomial constant(Integer c);
  static Polynomial monomial(Integer c, std::size_t degree);
  /// t^lo + t^(lo+1) + ... + t^hi, zero when lo > hi.
  static Polynomial power_sum(std::size_t lo, std::size_t hi);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of t^i; zero past the degree.
  Integer coefficient(std::size_t i) const;
  std::span<const Integer> coefficients() const { return coeffs_; }

  Integer evaluate(const Integer& x) const;
  /// p(t^2).
  Polynomial substitute_square() const;
  Polynomial pow(unsigned e) const;
  bool is_palindromic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Integer& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
  friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Decimal coefficient strings, lowest degree first.
  std::vector<std::string> coefficient_strings() const;
  /// Human-readable form such as "1 + 4t + t^2".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// q(t) = p(t + shift), expanded exactly with binomial coefficients.
Polynomial poly_compose_linear(const Polynomial& p, const Integer& shift);

}  // namespace orbitope
