#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "orbitope/hvector.hpp"
#include "orbitope/simple_subset.hpp"

// Geometric ground truth for the lattice formulas: the orbit polytope is
// built from integer points and its faces are found by brute force, with no
// use of the cross-section lattice.
namespace orbitope::oracle {

/// Size guards for the brute-force routines, expressed as the rank n
/// (orbit points live in (n+1)-space).
struct Limits {
  int max_orbit_rank = 6;    // orbit_points, ordered_set_partitions(n+1)
  int max_lattice_rank = 5;  // enumerate_face_lattice

  /// Defaults, raised to N when ORBITOPE_GUARD_N=N is set.
  static Limits from_environment();
  /// Both guards set to `rank`.
  static Limits uniform(int rank) { return {rank, rank}; }
};

/// Integer point whose equal adjacent coordinates encode J:
/// coords[i] == coords[i+1] (0-based) iff s_(i+1) in J. Blocks decrease
/// strictly from left to right.
struct Weight {
  std::vector<int> coords;
  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight canonical_weight(int n, const SimpleSubset& j);

using Point = std::vector<int>;

/// Distinct coordinate permutations of a weight, lexicographically sorted.
struct OrbitPointSet {
  std::vector<Point> points;
  int ambient_dimension() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
  std::size_t size() const { return points.size(); }
};

OrbitPointSet orbit_points(const Weight& w, const Limits& limits = Limits::from_environment());

/// Ordered sequence of disjoint nonempty blocks covering {1..m}.
struct OrderedSetPartition {
  std::vector<std::vector<int>> blocks;
  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
};

/// Calls `visit` on every ordered set partition of {1..m}: the first block
/// runs over nonempty subsets in increasing bitmask order, the remainder
/// recursively. Guarded by m <= max_orbit_rank + 1.
void for_each_ordered_set_partition(int m, const std::function<void(const OrderedSetPartition&)>& visit,
                                    const Limits& limits = Limits::from_environment());
std::vector<OrderedSetPartition> ordered_set_partitions(int m, const Limits& limits = Limits::from_environment());

using VertexSet = std::vector<std::size_t>;

/// Indices of the points maximizing the functional that is m - b on every
/// coordinate in block b (1-based, m blocks).
VertexSet face_of_partition(const OrbitPointSet& pts, const OrderedSetPartition& osp);

/// Affine dimension of the given points, by fraction-free elimination on
/// differences from the first point.
int affine_dimension(const OrbitPointSet& pts, const VertexSet& vertices);

struct Face {
  VertexSet vertices;
  int dimension = 0;
};

/// Nonempty faces, sorted by (dimension, vertex set). Inclusion of vertex
/// sets is the face order.
struct FaceLattice {
  std::vector<Face> faces;

  int dimension() const;
  FVector f_vector() const;
};

FaceLattice enumerate_face_lattice(const OrbitPointSet& pts, const Limits& limits = Limits::from_environment());

FVector f_vector_geometric(int n, const SimpleSubset& j, const Limits& limits = Limits::from_environment());

/// Every vertex lies on exactly d edges. Requires d >= 1 (InputError).
bool is_simple(const FaceLattice& lattice);

/// One line per face: "dim <d>: v1 v2 ...", indices into the sorted points.
void dump_face_lattice(const FaceLattice& lattice, std::ostream& os);

}  // namespace orbitope::oracle
