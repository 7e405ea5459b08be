#include "orbitope/hvector.hpp"

#include <string>
#include <utility>

#include "orbitope/eulerian.hpp"

namespace orbitope {

bool FVector::satisfies_invariants() const {
  if (counts.empty() || counts.back() != 1) return false;
  Integer alternating = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] <= 0) return false;
    alternating += (i % 2 == 0) ? counts[i] : Integer(-counts[i]);
  }
  return alternating == 1;
}

HVector f_to_h(const FVector& f) {
  return {poly_compose_linear(f.as_polynomial(), -1), f.dimension()};
}

FVector h_to_f(const HVector& h) {
  Polynomial f = poly_compose_linear(h.coeffs, 1);
  FVector out;
  out.counts.resize(static_cast<std::size_t>(h.dimension) + 1);
  if (f.degree() > h.dimension) throw ValidationError("h-vector degree exceeds its dimension");
  for (int i = 0; i <= h.dimension; ++i) {
    out.counts[i] = f.coefficient(i);
    if (out.counts[i] <= 0)
      throw ValidationError("f_" + std::to_string(i) + " = " + out.counts[i].str() +
                            " is not a face count");
  }
  return out;
}

namespace {

// Orbit sizes (n+1)!/|W_{I*_J}| summed by |I|. Entry i is f_i.
std::vector<Integer> orbit_sums_by_size(int n, const SimpleSubset& j) {
  if (n < 0) throw InputError("rank must be nonnegative");
  const Integer group_order = factorial(n + 1);
  std::vector<Integer> sums(static_cast<std::size_t>(n) + 1);
  for (const SimpleSubset& i : admissible_subsets(n, j)) {
    const Integer stabilizer = parabolic_order(i_star(i, j));
    Integer quotient, remainder;
    boost::multiprecision::divide_qr(group_order, stabilizer, quotient, remainder);
    if (remainder != 0)
      throw InvariantError("|W_I*| = " + stabilizer.str() + " does not divide (n+1)!");
    sums[i.size()] += quotient;
  }
  while (sums.size() > 1 && sums.back() == 0) sums.pop_back();
  return sums;
}

}  // namespace

FVector f_vector_lattice(int n, const SimpleSubset& j) {
  FVector f{orbit_sums_by_size(n, j)};
  if (!f.satisfies_invariants())
    throw InvariantError("lattice f-vector violates f_d = 1 or the Euler relation");
  return f;
}

HVector h_polynomial_lattice(int n, const SimpleSubset& j) {
  const auto sums = orbit_sums_by_size(n, j);
  const Polynomial t_minus_one{-1, 1};
  Polynomial h;
  for (std::size_t i = 0; i < sums.size(); ++i)
    h += sums[i] * t_minus_one.pow(static_cast<unsigned>(i));
  return {std::move(h), static_cast<int>(sums.size()) - 1};
}

Polynomial eulerian_polynomial_subset_form(int n) {
  if (n < 1) throw InputError("subset form requires n >= 1");
  const Integer group_order = factorial(n + 1);
  const Polynomial t_minus_one{-1, 1};
  std::vector<Integer> by_size(static_cast<std::size_t>(n) + 1);
  const auto universe = SimpleSubset::full(n).mask();
  for (SimpleSubset::Mask m = 0;; ++m) {
    const SimpleSubset i(n, m);
    by_size[i.size()] += group_order / parabolic_order(i);
    if (m == universe) break;
  }
  Polynomial out;
  for (std::size_t i = 0; i < by_size.size(); ++i)
    out += by_size[i] * t_minus_one.pow(static_cast<unsigned>(i));
  return out;
}

HVector h_closed_form_last_reflection(int n) {
  if (n < 2) throw InputError("closed form for J = {s_n} requires n >= 2");
  Polynomial h = eulerian_polynomial(n + 1) -
                 binomial(n + 1, 2) * Polynomial::monomial(1, 1) * eulerian_polynomial(n - 1);
  return {std::move(h), n};
}

HVector h_recurrence(int n, int k) {
  if (n < 1) throw InputError("recurrence requires n >= 1");
  if (k < 0 || k > n) throw InputError("recurrence requires 0 <= k <= n");
  Polynomial h = eulerian_polynomial(n + 1);
  for (int step = 1; step <= k; ++step)
    h -= binomial(n + 1, step + 1) * Polynomial::power_sum(1, step) * eulerian_polynomial(n - step);
  const int dimension = h.degree();
  return {std::move(h), dimension};
}

PoincareResult poincare(int n, const SimpleSubset& j) {
  PoincareResult out;
  out.classification = classify_combinatorially_smooth(n, j);
  out.warning = !out.classification.smooth;
  const HVector h = h_polynomial_lattice(n, j);
  out.poincare = h.coeffs.substitute_square();
  out.betti.resize(2 * static_cast<std::size_t>(h.dimension) + 1);
  for (int i = 0; i <= h.dimension; ++i) out.betti[2 * i] = h[i];
  return out;
}

Polynomial poincare_difference(int n, int k) {
  if (k < 1 || k > n) throw InputError("poincare difference requires 1 <= k <= n");
  Polynomial out;
  for (int i = 2; i <= k; ++i)
    out += binomial(n + 1, i + 1) * Polynomial::power_sum(1, i).substitute_square() *
           eulerian_polynomial(n - i).substitute_square();
  return out;
}

IdentityCheck power_sum_binomial_identity(int k) {
  if (k < 1) throw InputError("identity requires k >= 1");
  const Polynomial t_minus_one{-1, 1};
  IdentityCheck out;
  for (int i = 0; i <= k - 1; ++i)
    out.lhs += binomial(k + 1, i) * t_minus_one.pow(static_cast<unsigned>(k - i));
  out.lhs += Polynomial::constant(k);
  out.rhs = Polynomial::power_sum(1, k);
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace orbitope
