#include "orbitope/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <set>
#include <string>

namespace orbitope::oracle {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("ORBITOPE_GUARD_N")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      limits.max_orbit_rank = std::max(limits.max_orbit_rank, static_cast<int>(value));
      limits.max_lattice_rank = std::max(limits.max_lattice_rank, static_cast<int>(value));
    }
  }
  return limits;
}

Weight canonical_weight(int n, const SimpleSubset& j) {
  if (j.rank() != n) throw InputError("J must be a subset of {s_1..s_n}");
  // Run r (0-based) of positions linked by J gets value (runs - 1 - r).
  std::vector<int> run_of(static_cast<std::size_t>(n) + 1, 0);
  for (int pos = 1; pos <= n; ++pos) run_of[pos] = run_of[pos - 1] + (j.contains(pos) ? 0 : 1);
  const int runs = run_of[n] + 1;
  Weight w;
  w.coords.reserve(run_of.size());
  for (int r : run_of) w.coords.push_back(runs - 1 - r);
  return w;
}

namespace {

void check_guard(int rank, int limit, const char* what) {
  if (rank > limit)
    throw GuardError(std::string(what) + " refused at n = " + std::to_string(rank) + " (guard n <= " +
                     std::to_string(limit) + "; raise with ORBITOPE_GUARD_N)");
}

}  // namespace

OrbitPointSet orbit_points(const Weight& w, const Limits& limits) {
  if (w.coords.empty()) throw InputError("weight must have at least one coordinate");
  check_guard(static_cast<int>(w.coords.size()) - 1, limits.max_orbit_rank, "orbit enumeration");
  Point p = w.coords;
  std::sort(p.begin(), p.end());
  OrbitPointSet out;
  do {
    out.points.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

void partitions_rec(unsigned remaining, OrderedSetPartition& prefix,
                    const std::function<void(const OrderedSetPartition&)>& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  // Nonempty submasks of `remaining` in increasing order.
  for (unsigned sub = 1; sub <= remaining; ++sub) {
    if ((sub & ~remaining) != 0) continue;
    std::vector<int> block;
    for (unsigned bit = 0; (sub >> bit) != 0; ++bit)
      if ((sub >> bit) & 1u) block.push_back(static_cast<int>(bit) + 1);
    prefix.blocks.push_back(std::move(block));
    partitions_rec(remaining & ~sub, prefix, visit);
    prefix.blocks.pop_back();
  }
}

}  // namespace

void for_each_ordered_set_partition(int m, const std::function<void(const OrderedSetPartition&)>& visit,
                                    const Limits& limits) {
  if (m < 1) throw InputError("ordered set partitions need m >= 1");
  check_guard(m - 1, limits.max_orbit_rank, "ordered set partition enumeration");
  OrderedSetPartition prefix;
  partitions_rec((1u << m) - 1, prefix, visit);
}

std::vector<OrderedSetPartition> ordered_set_partitions(int m, const Limits& limits) {
  std::vector<OrderedSetPartition> out;
  for_each_ordered_set_partition(m, [&](const OrderedSetPartition& p) { out.push_back(p); }, limits);
  return out;
}

VertexSet face_of_partition(const OrbitPointSet& pts, const OrderedSetPartition& osp) {
  const int dim = pts.ambient_dimension();
  const int m = static_cast<int>(osp.blocks.size());
  std::vector<long long> functional(static_cast<std::size_t>(dim), 0);
  for (int b = 0; b < m; ++b)
    for (int coord : osp.blocks[b]) {
      if (coord < 1 || coord > dim) throw InputError("partition does not match the ambient space");
      functional[coord - 1] = m - (b + 1);
    }

  VertexSet best;
  long long best_value = 0;
  for (std::size_t idx = 0; idx < pts.points.size(); ++idx) {
    const long long value = std::inner_product(functional.begin(), functional.end(),
                                               pts.points[idx].begin(), 0LL);
    if (best.empty() || value > best_value) {
      best.assign(1, idx);
      best_value = value;
    } else if (value == best_value) {
      best.push_back(idx);
    }
  }
  return best;
}

int affine_dimension(const OrbitPointSet& pts, const VertexSet& vertices) {
  if (vertices.empty()) throw InputError("affine dimension of an empty set");
  const std::size_t cols = static_cast<std::size_t>(pts.ambient_dimension());
  const Point& origin = pts.points.at(vertices.front());

  // Echelon basis; each new difference vector is reduced against it with
  // integer row operations and content removal.
  std::vector<std::vector<long long>> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t k = 1; k < vertices.size() && basis.size() < cols; ++k) {
    const Point& p = pts.points.at(vertices[k]);
    std::vector<long long> row(cols);
    for (std::size_t c = 0; c < cols; ++c) row[c] = p[c] - origin[c];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t pc = pivots[b];
      if (row[pc] == 0) continue;
      const long long a = basis[b][pc];
      const long long r = row[pc];
      for (std::size_t c = 0; c < cols; ++c) row[c] = a * row[c] - r * basis[b][c];
      long long g = 0;
      for (long long x : row) g = std::gcd(g, x);
      if (g > 1)
        for (auto& x : row) x /= g;
    }
    const auto lead = std::find_if(row.begin(), row.end(), [](long long x) { return x != 0; });
    if (lead == row.end()) continue;
    pivots.push_back(static_cast<std::size_t>(lead - row.begin()));
    basis.push_back(std::move(row));
  }
  return static_cast<int>(basis.size());
}

int FaceLattice::dimension() const {
  int d = -1;
  for (const auto& f : faces) d = std::max(d, f.dimension);
  return d;
}

FVector FaceLattice::f_vector() const {
  FVector out;
  const int d = dimension();
  if (d < 0) return out;
  out.counts.assign(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& f : faces) out.counts[f.dimension] += 1;
  return out;
}

FaceLattice enumerate_face_lattice(const OrbitPointSet& pts, const Limits& limits) {
  if (pts.points.empty()) throw InputError("face lattice of an empty point set");
  const int m = pts.ambient_dimension();
  check_guard(m - 1, limits.max_lattice_rank, "face lattice enumeration");

  std::set<VertexSet> distinct;
  for_each_ordered_set_partition(
      m, [&](const OrderedSetPartition& osp) { distinct.insert(face_of_partition(pts, osp)); },
      limits);

  FaceLattice lattice;
  lattice.faces.reserve(distinct.size());
  for (const auto& vs : distinct) lattice.faces.push_back({vs, affine_dimension(pts, vs)});
  std::stable_sort(lattice.faces.begin(), lattice.faces.end(),
                   [](const Face& a, const Face& b) { return a.dimension < b.dimension; });
  return lattice;
}

FVector f_vector_geometric(int n, const SimpleSubset& j, const Limits& limits) {
  return enumerate_face_lattice(orbit_points(canonical_weight(n, j), limits), limits).f_vector();
}

bool is_simple(const FaceLattice& lattice) {
  const int d = lattice.dimension();
  if (d < 1) throw InputError("simplicity is defined for polytopes of dimension >= 1");
  std::vector<int> degree;
  std::vector<std::size_t> vertices;
  for (const auto& f : lattice.faces)
    if (f.dimension == 0) vertices.push_back(f.vertices.front());
  std::size_t max_index = 0;
  for (auto v : vertices) max_index = std::max(max_index, v);
  degree.assign(max_index + 1, 0);
  for (const auto& f : lattice.faces) {
    if (f.dimension != 1) continue;
    for (auto v : f.vertices)
      if (v <= max_index) ++degree[v];
  }
  return std::all_of(vertices.begin(), vertices.end(), [&](std::size_t v) { return degree[v] == d; });
}

void dump_face_lattice(const FaceLattice& lattice, std::ostream& os) {
  for (const auto& f : lattice.faces) {
    os << "dim " << f.dimension << ':';
    for (auto v : f.vertices) os << ' ' << v;
    os << '\n';
  }
}

}  // namespace orbitope::oracle
