#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitope/oracle.hpp"

namespace orbitope {

struct InstanceResult {
  std::string key;
  bool pass = false;
  std::optional<std::string> expected;
  std::optional<std::string> got;
};

struct SuiteResult {
  std::string name;
  std::vector<InstanceResult> instances;

  std::size_t passed() const;
  bool all_pass() const { return passed() == instances.size(); }
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one identity family over every instance up to `max_n`:
///   thm4      lattice h(∅) and the subset sum against E_(n+1), 1 <= n <= max_n
///   thm5      closed form for J = {s_n} against the lattice, 2 <= n <= max_n
///   thm6      recurrence against the lattice for J(k,n), 0 <= k <= n <= max_n
///   cor4      Poincaré = h(t^2) and the closed-form difference, 1 <= k <= n <= max_n
///   id14      the power-sum binomial identity, 1 <= k <= max_n
///   oracle    geometric f-vector and simplicity against the lattice and
///             the classification, every J, n <= max_n (guarded)
///   symmetry  palindromic positive h-vectors for smooth J, n <= max_n
/// Instances are ordered by n, then k or the J bitmask. Throws InputError for
/// an unknown name and GuardError when the oracle suite exceeds `limits`.
SuiteResult run_suite(std::string_view name, int max_n,
                      const oracle::Limits& limits = oracle::Limits::from_environment());

}  // namespace orbitope
