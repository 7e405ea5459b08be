#include "orbitope/eulerian.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace orbitope {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v])
      throw InputError("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

bool Permutation::next() { return std::next_permutation(word_.begin(), word_.end()); }

std::vector<int> ascent_set(const Permutation& sigma) {
  std::vector<int> out;
  for (int i = 1; i < sigma.size(); ++i)
    if (sigma[i] < sigma[i + 1]) out.push_back(i);
  return out;
}

namespace {

std::vector<Integer> eulerian_row(int n) {
  std::vector<Integer> row{1};  // n = 1
  for (int m = 2; m <= n; ++m) {
    std::vector<Integer> next(m);
    for (int i = 0; i < m; ++i) {
      if (i < m - 1) next[i] += (i + 1) * row[i];
      if (i >= 1) next[i] += (m - i) * row[i - 1];
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

Integer eulerian_number(int n, int i) {
  if (n < 1) throw InputError("eulerian_number requires n >= 1");
  if (i < 0 || i > n - 1) return 0;
  return eulerian_row(n)[i];
}

Polynomial eulerian_polynomial(int n) {
  if (n < 0) throw InputError("eulerian_polynomial requires n >= 0");
  if (n == 0) return Polynomial::constant(1);
  return Polynomial(eulerian_row(n));
}

Integer binomial(int n, int k) {
  if (n < 0) throw InputError("binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer factorial(int n) {
  if (n < 0) throw InputError("factorial requires n >= 0");
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace orbitope
