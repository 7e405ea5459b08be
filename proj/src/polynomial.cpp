#include "orbitope/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace orbitope {

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long long> coeffs)
    : coeffs_(coeffs.begin(), coeffs.end()) {
  trim();
}

Polynomial Polynomial::constant(Integer c) { return Polynomial(std::vector<Integer>{std::move(c)}); }

Polynomial Polynomial::monomial(Integer c, std::size_t degree) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::power_sum(std::size_t lo, std::size_t hi) {
  if (lo > hi) return {};
  std::vector<Integer> coeffs(hi + 1);
  for (std::size_t i = lo; i <= hi; ++i) coeffs[i] = 1;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer Polynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::substitute_square() const {
  if (is_zero()) return {};
  std::vector<Integer> out(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool Polynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::vector<std::string> Polynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Polynomial poly_compose_linear(const Polynomial& p, const Integer& shift) {
  // q_j = sum_{i >= j} c_i * C(i, j) * shift^(i - j)
  const std::size_t n = p.size();
  if (n == 0) return {};
  std::vector<Integer> powers(n);
  powers[0] = 1;
  for (std::size_t i = 1; i < n; ++i) powers[i] = powers[i - 1] * shift;

  std::vector<Integer> out(n);
  std::vector<Integer> row{1};  // Pascal row i
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      std::vector<Integer> next(i + 1);
      next[0] = next[i] = 1;
      for (std::size_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
      row = std::move(next);
    }
    const Integer& c = p.coefficients()[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= i; ++j) out[j] += c * row[j] * powers[i - j];
  }
  return Polynomial(std::move(out));
}

}  // namespace orbitope
