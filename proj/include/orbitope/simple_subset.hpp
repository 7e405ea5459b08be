#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "orbitope/integer.hpp"

namespace orbitope {

/// Largest rank accepted by SimpleSubset (bitmask width).
inline constexpr int kMaxRank = 30;

/// A subset of the simple reflections {s_1, ..., s_n} of A_n, stored as a
/// bitmask with bit i-1 standing for s_i. Reflections s_i and s_j fail to
/// commute exactly when |i - j| = 1, so the Coxeter graph is a path.
class SimpleSubset {
 public:
  using Mask = std::uint32_t;

  SimpleSubset() = default;
  /// Throws InputError if n is outside 0..kMaxRank or mask has bits past n.
  SimpleSubset(int n, Mask mask);
  /// Throws InputError for indices outside 1..n or repeated indices.
  static SimpleSubset from_indices(int n, const std::vector<int>& indices);
  static SimpleSubset empty(int n) { return SimpleSubset(n, 0); }
  static SimpleSubset full(int n);
  /// The interval {s_lo, ..., s_hi}; empty when lo > hi.
  static SimpleSubset interval(int n, int lo, int hi);
  /// J(k, n) = {s_(n-k+1), ..., s_n}; requires 0 <= k <= n.
  static SimpleSubset tail(int n, int k);

  int rank() const { return n_; }
  Mask mask() const { return mask_; }
  Mask universe() const { return n_ == 0 ? 0 : (Mask{1} << n_) - 1; }
  bool contains(int i) const { return i >= 1 && i <= n_ && (mask_ >> (i - 1)) & 1u; }
  int size() const;
  bool is_empty() const { return mask_ == 0; }
  bool is_full() const { return mask_ == universe(); }
  bool is_subset_of(const SimpleSubset& other) const { return (mask_ & ~other.mask_) == 0; }
  std::vector<int> members() const;

  friend bool operator==(const SimpleSubset&, const SimpleSubset&) = default;

 private:
  int n_ = 0;
  Mask mask_ = 0;
};

/// "{1,3}" or "{}".
std::string to_string(const SimpleSubset& s);

/// Parses "s4,s5", "4,5", "empty" (or an empty string) into a subset of
/// {s_1..s_n}. Throws InputError on malformed text.
SimpleSubset parse_subset(int n, std::string_view text);

/// A maximal run [first, last] of consecutive indices.
struct Interval {
  int first = 0;
  int last = 0;
  int length() const { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

using ComponentDecomposition = std::vector<Interval>;

/// Connected components of the induced path subgraph, left to right.
ComponentDecomposition connected_components(const SimpleSubset& subset);

/// |W_I|: a component of size m generates a copy of S_(m+1).
Integer parabolic_order(const SimpleSubset& subset);

/// True iff no connected component of `candidate` lies inside `j`.
bool is_admissible(const SimpleSubset& candidate, const SimpleSubset& j);

/// Lazy view of S(J), the subsets I of {s_1..s_n} none of whose connected
/// components is contained in J. Iterates in increasing bitmask order.
class AdmissibleSubsets {
 public:
  AdmissibleSubsets(int n, SimpleSubset j);

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = SimpleSubset;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = SimpleSubset;

    iterator() = default;
    SimpleSubset operator*() const { return SimpleSubset(owner_->n_, mask_); }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    friend class AdmissibleSubsets;
    iterator(const AdmissibleSubsets* owner, std::uint64_t mask);
    void skip_inadmissible();

    const AdmissibleSubsets* owner_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, std::uint64_t{1} << n_); }

 private:
  int n_;
  SimpleSubset j_;
};

inline AdmissibleSubsets admissible_subsets(int n, const SimpleSubset& j) {
  return AdmissibleSubsets(n, j);
}

/// I*_J: I together with every element of J commuting with all of I.
SimpleSubset i_star(const SimpleSubset& i, const SimpleSubset& j);

enum class SmoothForm { kEmpty, kLeftInterval, kRightInterval, kTwoIntervals, kNone };

std::string_view to_string(SmoothForm form);

struct Classification {
  bool smooth = false;
  SmoothForm form = SmoothForm::kNone;
};

/// Matches J against the type A_n list of combinatorially smooth subsets:
/// empty, {s_1..s_i}, {s_j..s_n} with j > 1, or {s_1..s_i} u {s_j..s_n}
/// with j - i >= 3. The full set S is reported as (false, none).
Classification classify_combinatorially_smooth(int n, const SimpleSubset& j);

}  // namespace orbitope
