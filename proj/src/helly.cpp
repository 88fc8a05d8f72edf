#include "systolic/helly.hpp"

#include <algorithm>
#include <set>

namespace systolic {

namespace {

// intersection of two members as vertex sets
std::vector<VertexId> member_intersection(const Subcomplex& a, const Subcomplex& b) {
  std::vector<VertexId> out;
  for (VertexId v : a.vertices())
    if (b.has_vertex(v)) out.push_back(v);
  return out;
}

std::vector<VertexId> member_intersection(const Subcomplex& a, const Subcomplex& b,
                                          const Subcomplex& c) {
  std::vector<VertexId> out;
  for (VertexId v : a.vertices())
    if (b.has_vertex(v) && c.has_vertex(v)) out.push_back(v);
  return out;
}

// lexicographically least geodesic between two vertices staying inside a
// member (computed in the member's induced 1-skeleton)
std::vector<VertexId> geodesic_inside(const Subcomplex& A, VertexId u, VertexId v) {
  const auto& X = A.parent();
  // BFS restricted to A
  std::vector<int> dist(static_cast<size_t>(X.vertex_count()), -1);
  std::vector<VertexId> queue{u};
  dist[static_cast<size_t>(u)] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    for (VertexId y : X.neighbors(x)) {
      if (!A.has_vertex(y) || dist[static_cast<size_t>(y)] != -1) continue;
      dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
      queue.push_back(y);
    }
  }
  if (dist[static_cast<size_t>(v)] < 0) throw no_path("member is disconnected between basepoints");
  // distance-to-target guided walk, lexicographic
  std::vector<int> dist_v(static_cast<size_t>(X.vertex_count()), -1);
  std::vector<VertexId> q2{v};
  dist_v[static_cast<size_t>(v)] = 0;
  for (size_t head = 0; head < q2.size(); ++head) {
    VertexId x = q2[head];
    for (VertexId y : X.neighbors(x)) {
      if (!A.has_vertex(y) || dist_v[static_cast<size_t>(y)] != -1) continue;
      dist_v[static_cast<size_t>(y)] = dist_v[static_cast<size_t>(x)] + 1;
      q2.push_back(y);
    }
  }
  std::vector<VertexId> path{u};
  VertexId cur = u;
  while (cur != v) {
    for (VertexId y : X.neighbors(cur)) {
      if (!A.has_vertex(y)) continue;
      if (dist_v[static_cast<size_t>(y)] == dist_v[static_cast<size_t>(cur)] - 1) {
        path.push_back(y);
        cur = y;
        break;
      }
    }
  }
  return path;
}

std::vector<VertexId> interior_intersection(const std::vector<VertexId>& g,
                                            const std::vector<VertexId>& h) {
  // shared vertices other than the one common endpoint
  std::set<VertexId> sg(g.begin(), g.end());
  std::vector<VertexId> out;
  for (VertexId v : h)
    if (sg.count(v)) out.push_back(v);
  return out;
}

}  // namespace

std::optional<HellyWitness> find_witness(const ConvexFamily& family, int max_dim) {
  const auto& X = *family.parent;
  auto simplices = X.all_simplices(max_dim);
  std::stable_sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& s : simplices) {
    HellyWitness w;
    w.simplex = s;
    bool all = true;
    for (const auto& m : family.members) {
      VertexId hit = -1;
      for (VertexId v : s)
        if (m.has_vertex(v)) { hit = v; break; }
      if (hit == -1) { all = false; break; }
      w.touched.push_back(hit);
    }
    if (all) return w;
  }
  return std::nullopt;
}

TriangleConfiguration reduce_triangle(const ConvexFamily& family) {
  if (family.members.size() != 3) throw invalid_input("reduce_triangle expects three members");
  const auto& X1 = family.members[0];
  const auto& X2 = family.members[1];
  const auto& X3 = family.members[2];
  auto i12 = member_intersection(X1, X2);
  auto i13 = member_intersection(X1, X3);
  auto i23 = member_intersection(X2, X3);
  if (i12.empty() || i13.empty() || i23.empty())
    throw invalid_input("members must pairwise intersect");

  TriangleConfiguration cfg;
  cfg.A = i12.front();
  cfg.B = i13.front();
  cfg.C = i23.front();

  while (true) {
    cfg.gamma1 = geodesic_inside(X1, cfg.A, cfg.B);
    cfg.gamma2 = geodesic_inside(X2, cfg.A, cfg.C);
    cfg.gamma3 = geodesic_inside(X3, cfg.B, cfg.C);

    // common point of all three?
    std::set<VertexId> s1(cfg.gamma1.begin(), cfg.gamma1.end());
    std::set<VertexId> s2(cfg.gamma2.begin(), cfg.gamma2.end());
    bool common = false;
    for (VertexId v : cfg.gamma3)
      if (s1.count(v) && s2.count(v)) { common = true; break; }
    if (common) {
      cfg.common_point = true;
      return cfg;
    }

    // a pair sharing more than its common endpoint moves the opposite point
    auto shared23 = interior_intersection(cfg.gamma2, cfg.gamma3);  // share C
    shared23.erase(std::remove(shared23.begin(), shared23.end(), cfg.C), shared23.end());
    if (!shared23.empty()) {
      cfg.C = shared23.front();
      ++cfg.iterations;
      continue;
    }
    auto shared13 = interior_intersection(cfg.gamma1, cfg.gamma3);  // share B
    shared13.erase(std::remove(shared13.begin(), shared13.end(), cfg.B), shared13.end());
    if (!shared13.empty()) {
      cfg.B = shared13.front();
      ++cfg.iterations;
      continue;
    }
    auto shared12 = interior_intersection(cfg.gamma1, cfg.gamma2);  // share A
    shared12.erase(std::remove(shared12.begin(), shared12.end(), cfg.A), shared12.end());
    if (!shared12.empty()) {
      cfg.A = shared12.front();
      ++cfg.iterations;
      continue;
    }
    break;  // pairwise intersections are exactly the endpoints
  }

  // degenerate triangles still mean a common point
  if (cfg.A == cfg.B || cfg.A == cfg.C || cfg.B == cfg.C || cfg.gamma1.size() == 1 ||
      cfg.gamma2.size() == 1 || cfg.gamma3.size() == 1) {
    cfg.common_point = true;
    return cfg;
  }

  cfg.common_point = false;
  cfg.cycle = cfg.gamma1;  // A..B
  cfg.cycle.insert(cfg.cycle.end(), cfg.gamma3.begin() + 1, cfg.gamma3.end());  // ..C
  for (size_t i = cfg.gamma2.size() - 1; i-- > 1;) cfg.cycle.push_back(cfg.gamma2[i]);  // ..back to A
  return cfg;
}

namespace {

void check_hypotheses(const SimplicialComplex& X, const ConvexFamily& family, int k,
                      TheoremReport& rep) {
  Tri systolic = is_k_systolic(X, k);
  if (systolic == Tri::False)
    rep.warnings.push_back("parent complex is not " + std::to_string(k) + "-systolic");
  if (systolic == Tri::Unknown)
    rep.warnings.push_back("simple connectivity of the parent could not be settled");
  for (size_t i = 0; i < family.members.size(); ++i)
    if (!is_convex(family.members[i]))
      rep.warnings.push_back("member " + family.names[i] + " is not convex");
}

}  // namespace

TheoremReport verify_theorem_A(const SimplicialComplex& X, const ConvexFamily& family) {
  if (family.members.size() != 3) throw invalid_input("theorem A expects three members");
  TheoremReport rep;
  check_hypotheses(X, family, 7, rep);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j)
      if (member_intersection(family.members[i], family.members[j]).empty()) {
        rep.hypotheses_ok = false;
        rep.warnings.push_back("members " + family.names[i] + " and " + family.names[j] +
                               " do not intersect");
      }
  if (!rep.hypotheses_ok) return rep;
  rep.trace = reduce_triangle(family);
  rep.witness = find_witness(family, 2);
  if (rep.witness) rep.witness_dim = dim(rep.witness->simplex);
  rep.verified = rep.witness.has_value();
  return rep;
}

TheoremReport verify_theorem_B(const SimplicialComplex& X, const ConvexFamily& family) {
  if (family.members.size() != 4) throw invalid_input("theorem B expects four members");
  TheoremReport rep;
  check_hypotheses(X, family, 6, rep);

  // extremal points: one per triple intersection, minimizing the distance sum
  std::vector<std::vector<VertexId>> triples;
  for (int skip = 3; skip >= 0; --skip) {
    std::vector<const Subcomplex*> three;
    for (int i = 0; i < 4; ++i)
      if (i != skip) three.push_back(&family.members[static_cast<size_t>(i)]);
    auto common = member_intersection(*three[0], *three[1], *three[2]);
    if (common.empty()) {
      rep.hypotheses_ok = false;
      rep.warnings.push_back("a triple of members has empty intersection");
      return rep;
    }
    triples.push_back(common);
  }

  long long best_sum = -1;
  std::vector<VertexId> best;
  std::vector<std::vector<int>> dist_cache(static_cast<size_t>(X.vertex_count()));
  auto dist = [&](VertexId u, VertexId v) {
    auto& row = dist_cache[static_cast<size_t>(u)];
    if (row.empty()) row = distances_from(X, u);
    return row[static_cast<size_t>(v)];
  };
  for (VertexId a : triples[0])
    for (VertexId b : triples[1])
      for (VertexId c : triples[2])
        for (VertexId d : triples[3]) {
          long long sum = 0;
          bool ok = true;
          for (auto [u, v] : {std::pair{a, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}}) {
            int dd = dist(u, v);
            if (dd < 0) { ok = false; break; }
            sum += dd;
          }
          if (!ok) continue;
          std::vector<VertexId> cand{a, b, c, d};
          if (best_sum < 0 || sum < best_sum || (sum == best_sum && cand < best)) {
            best_sum = sum;
            best = cand;
          }
        }
  rep.extremal_points = best;

  rep.witness = find_witness(family, 3);
  if (rep.witness) rep.witness_dim = dim(rep.witness->simplex);
  rep.verified = rep.witness.has_value();
  return rep;
}

TriangleShapeReport triangle_shape(const SimplicialComplex& X, VertexId a, VertexId b, VertexId c,
                                   const TriangularSearchOptions& opt) {
  auto surf = triangular_surface(X, a, b, c, opt);
  TriangleShapeReport rep;
  rep.shape = surf.shape;
  if (surf.shape != TriangleShape::HornedTriangle) {
    rep.single_simplex_core = true;  // degenerate 2-simplex
    return rep;
  }
  rep.core_area = surf.core_area;
  rep.single_simplex_core = surf.core_single_simplex;
  rep.core_equilateral = surf.core_equilateral;
  rep.core_side = surf.core_side;
  rep.reduced_cycle = surf.reduced_cycle;
  return rep;
}

CounterexampleResult search_counterexample(int max_side) {
  CounterexampleResult res;
  for (int side = 1; side <= max_side; ++side) {
    GeneratedInstance inst = hex_disc(HexShape::Triangle, side);
    ConvexFamily family;
    family.parent = &inst.complex;
    for (const auto& name : {"side_a", "side_b", "side_c"}) {
      family.names.push_back(name);
      family.members.emplace_back(inst.complex, inst.subcomplexes.at(name));
    }
    bool pairwise = true;
    for (size_t i = 0; i < 3 && pairwise; ++i)
      for (size_t j = i + 1; j < 3; ++j)
        if (member_intersection(family.members[i], family.members[j]).empty()) pairwise = false;
    if (!pairwise) continue;
    if (!find_witness(family, inst.complex.dimension())) {
      res.found = true;
      res.side = side;
      res.instance = std::move(inst);
      res.family_names = family.names;
      return res;
    }
  }
  return res;
}

}  // namespace systolic
