#include "orbitope/verify.hpp"

#include <algorithm>
#include <sstream>

#include "orbitope/eulerian.hpp"

namespace orbitope {

std::size_t SuiteResult::passed() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const InstanceResult& r) { return r.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm4", "thm5", "thm6", "cor4", "id14", "oracle", "symmetry"};
  return names;
}

namespace {

std::string join(const std::vector<Integer>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string join(const Polynomial& p) {
  return join(std::vector<Integer>(p.coefficients().begin(), p.coefficients().end()));
}

InstanceResult compare(std::string key, const Polynomial& expected, const Polynomial& got) {
  return {std::move(key), expected == got, join(expected), join(got)};
}

std::string nj_key(int n, const SimpleSubset& j) { return "n=" + std::to_string(n) + " J=" + to_string(j); }

SuiteResult thm4(int max_n) {
  SuiteResult r{"thm4", {}};
  for (int n = 1; n <= max_n; ++n) {
    const Polynomial e = eulerian_polynomial(n + 1);
    const Polynomial lattice = h_polynomial_lattice(n, SimpleSubset::empty(n)).coeffs;
    const Polynomial subsets = eulerian_polynomial_subset_form(n);
    InstanceResult inst = compare("n=" + std::to_string(n), e, lattice);
    inst.pass = inst.pass && subsets == e;
    r.instances.push_back(std::move(inst));
  }
  return r;
}

SuiteResult thm5(int max_n) {
  SuiteResult r{"thm5", {}};
  for (int n = 2; n <= max_n; ++n)
    r.instances.push_back(compare("n=" + std::to_string(n),
                                  h_polynomial_lattice(n, SimpleSubset::interval(n, n, n)).coeffs,
                                  h_closed_form_last_reflection(n).coeffs));
  return r;
}

SuiteResult thm6(int max_n) {
  SuiteResult r{"thm6", {}};
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      r.instances.push_back(compare("n=" + std::to_string(n) + " k=" + std::to_string(k),
                                    h_polynomial_lattice(n, SimpleSubset::tail(n, k)).coeffs,
                                    h_recurrence(n, k).coeffs));
  return r;
}

SuiteResult cor4(int max_n) {
  SuiteResult r{"cor4", {}};
  for (int n = 1; n <= max_n; ++n) {
    const auto p1 = poincare(n, SimpleSubset::tail(n, 1));
    for (int k = 1; k <= n; ++k) {
      const auto j = SimpleSubset::tail(n, k);
      const auto pk = poincare(n, j);
      const Polynomial h_sq = h_polynomial_lattice(n, j).coeffs.substitute_square();
      InstanceResult inst = compare("n=" + std::to_string(n) + " k=" + std::to_string(k),
                                    p1.poincare - pk.poincare, poincare_difference(n, k));
      inst.pass = inst.pass && pk.poincare == h_sq && Polynomial(pk.betti) == h_sq;
      r.instances.push_back(std::move(inst));
    }
  }
  return r;
}

SuiteResult id14(int max_k) {
  SuiteResult r{"id14", {}};
  for (int k = 1; k <= max_k; ++k) {
    const auto check = power_sum_binomial_identity(k);
    r.instances.push_back(compare("k=" + std::to_string(k), check.rhs, check.lhs));
  }
  return r;
}

SuiteResult oracle_suite(int max_n, const oracle::Limits& limits) {
  SuiteResult r{"oracle", {}};
  for (int n = 1; n <= max_n; ++n) {
    const auto universe = SimpleSubset::full(n).mask();
    for (SimpleSubset::Mask m = 0;; ++m) {
      const SimpleSubset j(n, m);
      const auto pts = oracle::orbit_points(oracle::canonical_weight(n, j), limits);
      const auto lattice = oracle::enumerate_face_lattice(pts, limits);
      const FVector geometric = lattice.f_vector();
      const FVector formula = f_vector_lattice(n, j);
      InstanceResult inst{nj_key(n, j), geometric == formula, join(formula.counts), join(geometric.counts)};
      if (!j.is_full()) inst.pass = inst.pass && oracle::is_simple(lattice) == classify_combinatorially_smooth(n, j).smooth;
      r.instances.push_back(std::move(inst));
      if (m == universe) break;
    }
  }
  return r;
}

SuiteResult symmetry(int max_n) {
  SuiteResult r{"symmetry", {}};
  for (int n = 1; n <= max_n; ++n) {
    const auto universe = SimpleSubset::full(n).mask();
    for (SimpleSubset::Mask m = 0;; ++m) {
      const SimpleSubset j(n, m);
      if (classify_combinatorially_smooth(n, j).smooth) {
        const HVector h = h_polynomial_lattice(n, j);
        bool ok = h.dimension == n && h.coeffs.is_palindromic() && h[0] == 1 && h[n] == 1;
        for (int i = 0; i <= n; ++i) ok = ok && h[i] >= 1;
        ok = ok && h.coeffs.evaluate(1) == factorial(n + 1) / parabolic_order(j);
        r.instances.push_back({nj_key(n, j), ok, std::nullopt, join(h.coeffs)});
      }
      if (m == universe) break;
    }
  }
  return r;
}

}  // namespace

SuiteResult run_suite(std::string_view name, int max_n, const oracle::Limits& limits) {
  if (max_n < 1) throw InputError("--max-n must be at least 1");
  if (name == "thm4") return thm4(max_n);
  if (name == "thm5") return thm5(max_n);
  if (name == "thm6") return thm6(max_n);
  if (name == "cor4") return cor4(max_n);
  if (name == "id14") return id14(max_n);
  if (name == "oracle") return oracle_suite(max_n, limits);
  if (name == "symmetry") return symmetry(max_n);
  throw InputError("unknown suite '" + std::string(name) + "'");
}

}  // namespace orbitope
