#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "systolic/complex.hpp"

namespace systolic {

// ---- triangular lattice (equilaterally triangulated plane) ----

// Axial coordinates; the six unit steps are listed in hex_steps().
struct HexCoord {
  int a = 0;
  int b = 0;
  friend bool operator==(const HexCoord&, const HexCoord&) = default;
  friend auto operator<=>(const HexCoord&, const HexCoord&) = default;
};

const std::vector<HexCoord>& hex_steps();
int hex_distance(const HexCoord& p, const HexCoord& q);
bool hex_adjacent(const HexCoord& p, const HexCoord& q);
// The two apex positions of a lattice edge.
std::pair<HexCoord, HexCoord> hex_edge_apexes(const HexCoord& p, const HexCoord& q);

// ---- triangulated surfaces ----

// Combinatorial 2-disc: pure 2-dimensional, connected, every edge in one or
// two triangles, boundary a single cycle, Euler characteristic 1, all vertex
// links paths or cycles.
class TriangulatedDisc {
 public:
  static TriangulatedDisc from_complex(const SimplicialComplex& X);
  // Diagnostic variant: returns nullopt instead of throwing.
  static std::optional<TriangulatedDisc> try_from_complex(const SimplicialComplex& X);

  const SimplicialComplex& complex() const { return complex_; }
  const std::vector<VertexId>& boundary_cycle() const { return boundary_; }
  const std::vector<VertexId>& interior_vertices() const { return interior_; }
  bool is_interior(VertexId v) const { return interior_mask_.at(static_cast<size_t>(v)) != 0; }
  int triangle_count() const { return triangle_count_; }
  // Number of triangles containing v.
  int triangles_at(VertexId v) const { return tri_count_.at(static_cast<size_t>(v)); }

 private:
  SimplicialComplex complex_;
  std::vector<VertexId> boundary_;
  std::vector<VertexId> interior_;
  std::vector<char> interior_mask_;
  std::vector<int> tri_count_;
  int triangle_count_ = 0;
};

// Closed surface: every edge in exactly two triangles, chi = 2, connected.
class TriangulatedSphere {
 public:
  static TriangulatedSphere from_complex(const SimplicialComplex& X);
  static std::optional<TriangulatedSphere> try_from_complex(const SimplicialComplex& X);

  const SimplicialComplex& complex() const { return complex_; }
  int triangle_count() const { return triangle_count_; }
  int triangles_at(VertexId v) const { return tri_count_.at(static_cast<size_t>(v)); }

 private:
  SimplicialComplex complex_;
  std::vector<int> tri_count_;
  int triangle_count_ = 0;
};

// def(v) = 6 - chi(v) for interior vertices, 3 - chi(v) on the boundary,
// where chi(v) counts incident triangles.
struct DefectVector {
  std::vector<int> defect;
  std::vector<int> triangle_count;
};

DefectVector defects(const TriangulatedDisc& D);
DefectVector defects(const TriangulatedSphere& S);

// lhs = sum of defects, rhs = 6 * Euler characteristic; equal for every
// triangulated 2-manifold.
std::pair<long long, long long> gauss_bonnet(const TriangulatedDisc& D);
std::pair<long long, long long> gauss_bonnet(const TriangulatedSphere& S);

// Flatness via the defect conditions: zero interior defects, no boundary
// defect below -1, and consecutive negative boundary vertices separated by a
// positive one.
bool is_flat(const TriangulatedDisc& D);

// Independent oracle: an isometric simplicial embedding of the 1-skeleton
// into the triangular lattice, or failure.
std::optional<std::map<VertexId, HexCoord>> embed_in_hex_plane(const TriangulatedDisc& D);

}  // namespace systolic
