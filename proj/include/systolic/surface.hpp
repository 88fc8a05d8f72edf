#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "systolic/disc.hpp"
#include "systolic/metric.hpp"

namespace systolic {

// Simplicial map from a small domain into the target complex. The image of
// every domain simplex spans a (possibly degenerate) simplex of the target.
struct SurfaceMap {
  SimplicialComplex domain;
  std::vector<VertexId> assignment;  // domain vertex -> target vertex
  int domain_area = 0;               // triangles of the domain
  int injective_area = 0;            // triangles with three distinct images
};

// Spanning surface of a cycle: a disc whose boundary maps isomorphically
// onto the cycle. Domain vertices 0..|cycle|-1 are the cycle positions.
struct Filling {
  TriangulatedDisc disc;
  std::vector<VertexId> assignment;
  int domain_area = 0;
  int injective_area = 0;

  SurfaceMap as_surface_map(const SimplicialComplex& target) const;
};

// Iterative-deepening exhaustive filling search. Frontier regions are cyclic
// image words, deduplicated by their canonical rotation/reflection form; the
// memo is shared across fills of the same complex.
class FillContext {
 public:
  explicit FillContext(const SimplicialComplex& X, int area_cap = 24);

  const SimplicialComplex& target() const { return *X_; }
  int area_cap() const { return cap_; }

  // Minimal filling: least domain area, then least injective area, then the
  // deterministic search order. none when the cap is exceeded.
  std::optional<Filling> fill(const std::vector<VertexId>& cycle);

 private:
  struct Impl;
  const SimplicialComplex* X_;
  int cap_;
  std::shared_ptr<Impl> impl_;
};

std::optional<Filling> fill_cycle_minimal(const SimplicialComplex& X,
                                          const std::vector<VertexId>& cycle, int area_cap = 24);

// ---- triangular surfaces ----

enum class TriangleShape { Segment, Tripod, HornedTriangle };
const char* to_string(TriangleShape s);

struct TriangularSurface {
  TriangleShape shape = TriangleShape::Segment;
  SurfaceMap surface;

  // domain markers: tops[i] maps to corner i, bottoms[i] is the horn bottom
  std::vector<VertexId> corners;                      // images v0,v1,v2
  std::vector<VertexId> tops, bottoms;                // domain ids
  std::vector<std::vector<VertexId>> horn_paths;      // domain path top->bottom
  std::vector<std::vector<VertexId>> side_paths;      // domain path tops[i]->tops[i+1]
  std::vector<std::vector<VertexId>> side_geodesics;  // their images

  // core of a horned triangle (empty otherwise)
  std::vector<VertexId> reduced_cycle;  // image cycle spanned by the core
  int core_area = 0;
  bool core_single_simplex = false;
  bool core_equilateral = false;
  int core_side = 0;
};

struct TriangularSearchOptions {
  size_t geodesic_limit = 128;  // per side
  int area_cap = 24;
};

TriangularSurface triangular_surface(const SimplicialComplex& X, VertexId v0, VertexId v1,
                                     VertexId v2, const TriangularSearchOptions& opt = {});

// ---- digonal surfaces ----

enum class DigonShape { Segment, SimpleDigon, Chain };
const char* to_string(DigonShape s);

struct DigonPiece {
  bool is_segment = false;
  std::vector<VertexId> top, bottom;  // image paths; equal for segments
  std::optional<Filling> filling;     // minimal filling of a digon piece
};

struct DigonalSurface {
  DigonShape shape = DigonShape::Segment;
  std::vector<VertexId> cuts;  // common vertices in order, endpoints included
  std::vector<DigonPiece> pieces;
  SurfaceMap surface;  // chain domain (pieces joined at cut vertices)
  bool all_pieces_flat = true;
};

DigonalSurface digonal_surface(const SimplicialComplex& X, const std::vector<VertexId>& g0,
                               const std::vector<VertexId>& g1, int area_cap = 24);

// Fills g0 * g1 (geodesics meeting only at endpoints) and tests flatness of
// the minimal domain.
bool check_simple_digon_flat(const SimplicialComplex& X, const std::vector<VertexId>& g0,
                             const std::vector<VertexId>& g1, int area_cap = 24);

// Digon chain flattened into an honest disc: doubled vertices at the places
// the two boundary arcs touch, padded with collapsed triangles.
struct ExtendedDigonDisc {
  TriangulatedDisc disc;
  std::vector<VertexId> assignment;
  std::vector<VertexId> top_arc, bottom_arc;  // domain paths, position-aligned
};

ExtendedDigonDisc extend_digon_to_disc(const DigonalSurface& S);

// ---- sphere construction ----

struct SphereResult {
  bool degenerate = false;
  std::string degeneracy;  // offending identification or failed invariant

  std::optional<TriangulatedSphere> sphere;
  std::vector<VertexId> assignment;  // sphere vertex -> X vertex
  // piece name ("T_abc", "D_ab") -> piece vertex -> sphere vertex
  std::map<std::string, std::vector<VertexId>> inclusions;
  std::map<std::string, SurfaceMap> pieces;
};

SphereResult build_sphere(const SimplicialComplex& X, VertexId A, VertexId B, VertexId C,
                          VertexId D, const TriangularSearchOptions& opt = {});

// ---- ball fillings ----

struct BallFilling {
  std::vector<Simplex> tetrahedra;   // over sphere ids, plus ids past them
  std::vector<VertexId> assignment;  // ball vertex -> X vertex
};

struct BallCheck {
  bool ok = false;
  std::vector<std::string> diagnostics;
};

// Checks that the tetrahedra bound exactly the sphere, every ball vertex is
// a boundary vertex, and the map extends the sphere map simplicially.
BallCheck verify_ball_filling(const SimplicialComplex& X, const TriangulatedSphere& S,
                              const std::vector<VertexId>& sphere_map, const BallFilling& B);

// Exhaustive search over fillings without internal vertices; spheres with up
// to 16 vertices. Cone candidates from a sphere vertex are tried first.
std::optional<BallFilling> search_ball_filling(const SimplicialComplex& X,
                                               const TriangulatedSphere& S,
                                               const std::vector<VertexId>& sphere_map);

}  // namespace systolic
