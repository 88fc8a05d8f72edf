#pragma once

#include <cstdint>
#include <vector>

#include "systolic/complex.hpp"

namespace systolic {

// ---- combinatorial metric on the 1-skeleton ----

// BFS distances from a source; unreachable vertices get -1.
std::vector<int> distances_from(const SimplicialComplex& X, VertexId source);

// Shortest-path length; throws no_path for a disconnected pair.
int distance(const SimplicialComplex& X, VertexId u, VertexId v);

// Layered DAG carrying every geodesic between two vertices. A vertex w lies
// on the interval iff d(u,w) + d(w,v) = d(u,v); DAG paths from source to
// target biject with geodesics.
class IntervalDag {
 public:
  IntervalDag(const SimplicialComplex& X, VertexId source, VertexId target);

  VertexId source() const { return source_; }
  VertexId target() const { return target_; }
  int length() const { return length_; }

  const std::vector<VertexId>& vertices() const { return verts_; }
  bool on_interval(VertexId v) const;
  int dist_from_source(VertexId v) const { return dist_u_.at(static_cast<size_t>(v)); }

  // Successors one layer further from the source, sorted.
  const std::vector<VertexId>& successors(VertexId v) const;

  std::uint64_t geodesic_count() const;
  // Geodesics in lexicographic order, at most `limit` of them.
  std::vector<std::vector<VertexId>> geodesics(size_t limit = SIZE_MAX) const;

 private:
  VertexId source_, target_;
  int length_;
  std::vector<int> dist_u_, dist_v_;
  std::vector<VertexId> verts_;
  std::vector<std::vector<VertexId>> succ_;  // indexed by vertex id
};

IntervalDag interval(const SimplicialComplex& X, VertexId u, VertexId v);

// ---- subcomplexes and convexity ----

// Full (induced) subcomplex spanned by a vertex set: a parent simplex belongs
// iff all its vertices are in the set.
class Subcomplex {
 public:
  Subcomplex(const SimplicialComplex& parent, std::vector<VertexId> vertices);

  const SimplicialComplex& parent() const { return *parent_; }
  const std::vector<VertexId>& vertices() const { return verts_; }
  bool has_vertex(VertexId v) const { return mask_.at(static_cast<size_t>(v)) != 0; }
  size_t size() const { return verts_.size(); }

  // All parent simplices with every vertex in this subcomplex.
  std::vector<Simplex> simplices() const;

  bool is_connected() const;

 private:
  const SimplicialComplex* parent_;
  std::vector<VertexId> verts_;
  std::vector<char> mask_;
};

// Fullness of the induced representation is structural; the simplex-set
// overload validates externally supplied lists.
bool is_full(const Subcomplex& A);
bool is_full(const SimplicialComplex& X, const SimplexSet& S);

bool is_3_convex(const Subcomplex& A);
bool is_3_convex(const SimplicialComplex& X, const SimplexSet& S);

bool is_locally_3_convex(const Subcomplex& A);
bool is_locally_3_convex(const SimplicialComplex& X, const SimplexSet& S);

// Connected and locally 3-convex. Empty and singleton subcomplexes count as
// convex.
bool is_convex(const Subcomplex& A);

// A contains every geodesic between each pair of its vertices.
bool is_geodesically_convex(const Subcomplex& A);

// Least fixed point of geodesic closure over the seed; the result is
// geodesically convex. Seed vertices must lie in one component.
Subcomplex convex_hull(const SimplicialComplex& X, std::vector<VertexId> seed);

}  // namespace systolic
