#pragma once

#include <optional>
#include <string>
#include <vector>

#include "systolic/gen.hpp"
#include "systolic/metric.hpp"
#include "systolic/surface.hpp"

namespace systolic {

// Named family of full subcomplexes, candidates for convex sets.
struct ConvexFamily {
  const SimplicialComplex* parent = nullptr;
  std::vector<std::string> names;
  std::vector<Subcomplex> members;
};

struct HellyWitness {
  Simplex simplex;
  std::vector<VertexId> touched;  // one vertex of simplex ∩ member, per member
};

// Exhaustive witness search, dimension-ascending then lexicographic.
std::optional<HellyWitness> find_witness(const ConvexFamily& family, int max_dim);

// One point per pairwise intersection plus geodesics between them inside the
// respective members.
struct TriangleConfiguration {
  VertexId A = 0, B = 0, C = 0;
  std::vector<VertexId> gamma1, gamma2, gamma3;  // A-B in X1, A-C in X2, B-C in X3
  bool common_point = false;                     // else: embedded circle
  std::vector<VertexId> cycle;                   // the circle when !common_point
  int iterations = 0;
};

// Replacement loop: while two geodesics share an interior vertex, move the
// opposite basepoint into the intersection. Ends with a common point or an
// embedded triangulated circle.
TriangleConfiguration reduce_triangle(const ConvexFamily& family);

struct TheoremReport {
  bool hypotheses_ok = true;
  std::vector<std::string> warnings;
  std::optional<HellyWitness> witness;
  int witness_dim = -1;
  bool verified = false;
  std::optional<TriangleConfiguration> trace;   // theorem A
  std::vector<VertexId> extremal_points;        // theorem B
};

// 7-systolic case: three pairwise intersecting convex members admit a
// witness of dimension at most two.
TheoremReport verify_theorem_A(const SimplicialComplex& X, const ConvexFamily& family);

// systolic case: four triple-wise intersecting convex members admit a
// witness of dimension at most three.
TheoremReport verify_theorem_B(const SimplicialComplex& X, const ConvexFamily& family);

struct TriangleShapeReport {
  TriangleShape shape = TriangleShape::Segment;
  int core_area = 0;
  bool single_simplex_core = false;  // degenerate shapes count
  bool core_equilateral = false;
  int core_side = 0;
  std::vector<VertexId> reduced_cycle;
};

// Minimal geodesic triangle of a triple and the shape of its filling core.
TriangleShapeReport triangle_shape(const SimplicialComplex& X, VertexId a, VertexId b, VertexId c,
                                   const TriangularSearchOptions& opt = {});

struct CounterexampleResult {
  bool found = false;
  int side = 0;
  GeneratedInstance instance;
  std::vector<std::string> family_names;
};

// Sweeps triangular hex discs with their three sides, looking for a pairwise
// intersecting convex triple with no witness simplex of any dimension.
CounterexampleResult search_counterexample(int max_side);

}  // namespace systolic
