#include "orbitope/simple_subset.hpp"

#include <bit>
#include <charconv>
#include <sstream>

namespace orbitope {

SimpleSubset::SimpleSubset(int n, Mask mask) : n_(n), mask_(mask) {
  if (n < 0 || n > kMaxRank)
    throw InputError("rank must lie in 0.." + std::to_string(kMaxRank));
  if ((mask & ~universe()) != 0) throw InputError("subset has indices beyond n");
}

SimpleSubset SimpleSubset::from_indices(int n, const std::vector<int>& indices) {
  SimpleSubset out(n, 0);
  for (int i : indices) {
    if (i < 1 || i > n)
      throw InputError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    const Mask bit = Mask{1} << (i - 1);
    if (out.mask_ & bit) throw InputError("index " + std::to_string(i) + " repeated");
    out.mask_ |= bit;
  }
  return out;
}

SimpleSubset SimpleSubset::full(int n) {
  SimpleSubset out(n, 0);
  out.mask_ = out.universe();
  return out;
}

SimpleSubset SimpleSubset::interval(int n, int lo, int hi) {
  SimpleSubset out(n, 0);
  if (lo > hi) return out;
  if (lo < 1 || hi > n) throw InputError("interval outside 1..n");
  for (int i = lo; i <= hi; ++i) out.mask_ |= Mask{1} << (i - 1);
  return out;
}

SimpleSubset SimpleSubset::tail(int n, int k) {
  if (k < 0 || k > n) throw InputError("J(k,n) requires 0 <= k <= n");
  return interval(n, n - k + 1, n);
}

int SimpleSubset::size() const { return std::popcount(mask_); }

std::vector<int> SimpleSubset::members() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string to_string(const SimpleSubset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : s.members()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

SimpleSubset parse_subset(int n, std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '{' && text.back() == '}')
    text = trim(text.substr(1, text.size() - 2));
  if (text.empty() || text == "empty") return SimpleSubset::empty(n);

  std::vector<int> indices;
  while (true) {
    const auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    if (!token.empty() && (token.front() == 's' || token.front() == 'S')) token.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw InputError("malformed subset element '" + std::string(token) + "'");
    indices.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return SimpleSubset::from_indices(n, indices);
}

ComponentDecomposition connected_components(const SimpleSubset& subset) {
  ComponentDecomposition out;
  const int n = subset.rank();
  int i = 1;
  while (i <= n) {
    if (!subset.contains(i)) {
      ++i;
      continue;
    }
    int last = i;
    while (last + 1 <= n && subset.contains(last + 1)) ++last;
    out.push_back({i, last});
    i = last + 2;
  }
  return out;
}

Integer parabolic_order(const SimpleSubset& subset) {
  Integer order = 1;
  for (const auto& c : connected_components(subset))
    for (int f = 2; f <= c.length() + 1; ++f) order *= f;
  return order;
}

namespace {

// Each maximal run of `candidate` must contain a bit outside `j`.
bool admissible_mask(std::uint64_t candidate, std::uint64_t j) {
  while (candidate != 0) {
    const int lo = std::countr_zero(candidate);
    const std::uint64_t shifted = candidate >> lo;
    const int len = std::countr_one(shifted);
    const std::uint64_t run = (len >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1)) << lo;
    if ((run & ~j) == 0) return false;
    candidate &= ~run;
  }
  return true;
}

}  // namespace

bool is_admissible(const SimpleSubset& candidate, const SimpleSubset& j) {
  return admissible_mask(candidate.mask(), j.mask());
}

AdmissibleSubsets::AdmissibleSubsets(int n, SimpleSubset j) : n_(n), j_(j) {
  if (j.rank() != n) throw InputError("J must be a subset of {s_1..s_n}");
}

AdmissibleSubsets::iterator::iterator(const AdmissibleSubsets* owner, std::uint64_t mask)
    : owner_(owner), mask_(mask) {
  skip_inadmissible();
}

void AdmissibleSubsets::iterator::skip_inadmissible() {
  const std::uint64_t end = std::uint64_t{1} << owner_->n_;
  while (mask_ < end && !admissible_mask(mask_, owner_->j_.mask())) ++mask_;
}

AdmissibleSubsets::iterator& AdmissibleSubsets::iterator::operator++() {
  ++mask_;
  skip_inadmissible();
  return *this;
}

SimpleSubset i_star(const SimpleSubset& i, const SimpleSubset& j) {
  if (i.rank() != j.rank()) throw InputError("I and J must have the same rank");
  const auto u = i.universe();
  const auto m = i.mask();
  const auto blocked = m | ((m << 1) & u) | (m >> 1);
  return SimpleSubset(i.rank(), m | (j.mask() & ~blocked));
}

std::string_view to_string(SmoothForm form) {
  switch (form) {
    case SmoothForm::kEmpty: return "empty";
    case SmoothForm::kLeftInterval: return "left-interval";
    case SmoothForm::kRightInterval: return "right-interval";
    case SmoothForm::kTwoIntervals: return "two-intervals";
    case SmoothForm::kNone: break;
  }
  return "none";
}

Classification classify_combinatorially_smooth(int n, const SimpleSubset& j) {
  if (j.rank() != n) throw InputError("J must be a subset of {s_1..s_n}");
  if (j.is_empty()) return {true, SmoothForm::kEmpty};
  if (j.is_full()) return {false, SmoothForm::kNone};

  const auto parts = connected_components(j);
  const bool starts_left = parts.front().first == 1;
  const bool ends_right = parts.back().last == n;
  if (parts.size() == 1) {
    if (starts_left) return {true, SmoothForm::kLeftInterval};
    if (ends_right) return {true, SmoothForm::kRightInterval};
    return {false, SmoothForm::kNone};
  }
  if (parts.size() == 2 && starts_left && ends_right &&
      parts.back().first - parts.front().last >= 3)
    return {true, SmoothForm::kTwoIntervals};
  return {false, SmoothForm::kNone};
}

}  // namespace orbitope
