#pragma once

#include <optional>
#include <vector>

#include "systolic/simplex.hpp"

namespace systolic {

// Certificates a generator can attach to vouch for simple connectivity.
enum class Certificate { Disc, Ball, Cone };

std::optional<Certificate> certificate_from_string(const std::string& s);
const char* to_string(Certificate c);

// Finite abstract simplicial complex, stored as its maximal simplices.
// Membership of an arbitrary simplex is a subset query against them, so the
// complex is automatically closed under faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Validates: ids in range and dense, simplices strictly ascending, no
  // maximal simplex a face of another. Throws invalid_input otherwise.
  static SimplicialComplex from_maximal(int vertex_count, std::vector<Simplex> maximal);

  // Convenience builder that sorts, deduplicates and drops dominated
  // simplices before validating. Vertex count is inferred when negative.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices, int vertex_count = -1);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Simplex>& maximal_simplices() const { return maximal_; }

  // Dimension of the complex; -1 when empty.
  int dimension() const;

  bool adjacent(VertexId u, VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_.at(v); }

  bool contains(const Simplex& s) const;

  std::vector<Simplex> edges() const;
  std::vector<Simplex> triangles() const;

  // Every simplex of the complex (optionally up to max_dim), sorted.
  std::vector<Simplex> all_simplices(int max_dim = -1) const;

  bool is_connected() const;
  // Component id per vertex (BFS order, deterministic).
  std::vector<int> component_ids() const;

  const std::optional<Certificate>& sc_certificate() const { return sc_certificate_; }
  void set_sc_certificate(std::optional<Certificate> c) { sc_certificate_ = std::move(c); }

  bool operator==(const SimplicialComplex& other) const {
    return vertex_count_ == other.vertex_count_ && maximal_ == other.maximal_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Simplex> maximal_;
  std::vector<std::vector<VertexId>> neighbors_;      // sorted
  std::vector<std::vector<int>> incident_maximal_;    // per-vertex indices into maximal_
  std::optional<Certificate> sc_certificate_;

  void build_indices();
};

// ---- closure / star / link (formula of the source material) ----
//
// Cl(S)  = all faces of members of S.
// St(S)  = all simplices of X containing some face of a member of S,
//          i.e. all simplices meeting some member.
// lk(S)  = Cl(St(S)) - St(Cl(S)).

SimplexSet closure(const SimplicialComplex& X, const SimplexSet& S);
SimplexSet star(const SimplicialComplex& X, const SimplexSet& S);
SimplexSet link(const SimplicialComplex& X, const SimplexSet& S);

// Same operators relative to an arbitrary downward-closed universe of
// simplices (used for links inside subcomplexes).
SimplexSet closure_in(const std::vector<Simplex>& universe, const SimplexSet& S);
SimplexSet star_in(const std::vector<Simplex>& universe, const SimplexSet& S);
SimplexSet link_in(const std::vector<Simplex>& universe, const SimplexSet& S);

// Link of a single simplex as a standalone complex. vertex_map[i] is the
// parent vertex id of link vertex i.
struct LinkComplex {
  SimplicialComplex complex;
  std::vector<VertexId> vertex_map;
};
LinkComplex link_complex(const SimplicialComplex& X, const Simplex& s);

// Extract a standalone complex from a downward-closed simplex set.
LinkComplex complex_from_simplex_set(const SimplexSet& S);

// ---- local largeness ----

bool is_flag(const SimplicialComplex& X);

// All chordless cycles of length 4..max_len, one canonical representative
// per rotation/reflection class, sorted.
std::vector<std::vector<VertexId>> induced_cycles_up_to(const SimplicialComplex& X, int max_len);

bool is_k_large(const SimplicialComplex& X, int k);
bool is_locally_k_large(const SimplicialComplex& X, int k);

// ---- simple connectivity ----

struct H1Summary {
  long long betti1 = 0;
  bool has_torsion = false;
  bool trivial() const { return betti1 == 0 && !has_torsion; }
};

// Integral first homology of the 2-skeleton (Smith normal form).
H1Summary homology_h1(const SimplicialComplex& X);

// True if certified or proved within budget, false if H1 is nontrivial,
// unknown when the budget runs out without a verdict.
Tri is_simply_connected(const SimplicialComplex& X, long long budget = 200000);

Tri is_k_systolic(const SimplicialComplex& X, int k, long long budget = 200000);

// Certificate validators (sound; "ball" falls back to collapsibility).
bool validate_certificate(const SimplicialComplex& X, Certificate c, long long budget = 200000);

// Greedy free-face collapsing; true if the complex collapses to a point
// within the budget (counts elementary collapses).
bool collapses_to_point(const SimplicialComplex& X, long long budget);

// Budgeted Tietze-style reduction of the edge-path group presentation
// (generators: non-tree edges, relators: triangles). True only if every
// generator gets eliminated, which proves the group trivial.
bool edge_path_group_trivializes(const SimplicialComplex& X, long long budget);

}  // namespace systolic
