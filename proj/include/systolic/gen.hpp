#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "systolic/complex.hpp"
#include "systolic/disc.hpp"

namespace systolic {

// Generator output: a complex plus named vertex subsets (facet families,
// disc sides) and expected-property notes carried into the instance file.
struct GeneratedInstance {
  SimplicialComplex complex;
  std::map<std::string, std::vector<VertexId>> subcomplexes;
  std::map<std::string, std::string> notes;
};

enum class HexShape { Triangle, Hexagon, Parallelogram };

// Full subcomplex of the triangular lattice over a convex region. Triangles
// get sides named side_a/side_b/side_c. Flag, 6-large, disc-certified.
GeneratedInstance hex_disc(HexShape shape, int size_a, int size_b = 0);

// Coordinates of the region (same vertex order as the generated complex).
std::vector<HexCoord> hex_region(HexShape shape, int size_a, int size_b = 0);

// Complex induced by an explicit set of lattice coordinates.
GeneratedInstance hex_patch(const std::vector<HexCoord>& coords);

// The n-simplex together with its n+1 codimension-one faces facet_0..facet_n.
GeneratedInstance simplex_with_facets(int n);

// Triangulated disc whose interior vertices all lie in >= 7 triangles:
// depth 0 is a single triangle (boundary must be 3), depth >= 1 grows rings
// around a wheel with `boundary` rim vertices (>= 7). Seed varies ring
// fan-out without breaking the degree bound.
GeneratedInstance seven_systolic_disc(int boundary, int depth, std::uint64_t seed = 0);

struct RandomDiscParams {
  int triangles = 20;
  int interior_defect_min = -6;
  int interior_defect_max = 0;
  int boundary_defect_min = -3;
  int boundary_defect_max = 2;
  int k = 0;  // 0 skips the largeness check
  std::uint64_t seed = 0;
  int max_attempts = 400;
};

// Random triangulated disc grown by boundary moves, rejection-sampled until
// the defect bounds (and k-largeness, when requested) hold.
GeneratedInstance random_disc(const RandomDiscParams& params);

// Double of a disc along its boundary (interior vertices duplicated); valid
// whenever every triangle has an interior vertex, which the wheel-seeded
// growth below guarantees.
SimplicialComplex sphere_double(const TriangulatedDisc& D);

// Sphere grown from the tetrahedron boundary by random 1->3 splits.
SimplicialComplex stacked_sphere(int extra_vertices, std::uint64_t seed);

}  // namespace systolic
