#include <doctest.h>

#include <random>

#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "systolic/helly.hpp"
#include "systolic/io.hpp"

using namespace systolic;

namespace {

ConvexFamily family_of(const SimplicialComplex& X,
                       std::vector<std::vector<VertexId>> vertex_sets) {
  ConvexFamily fam;
  fam.parent = &X;
  int i = 0;
  for (auto& vs : vertex_sets) {
    fam.names.push_back("m" + std::to_string(i++));
    fam.members.emplace_back(X, std::move(vs));
  }
  return fam;
}

ConvexFamily sides_family(const GeneratedInstance& inst) {
  ConvexFamily fam;
  fam.parent = &inst.complex;
  for (const auto& name : {"side_a", "side_b", "side_c"}) {
    fam.names.push_back(name);
    fam.members.emplace_back(inst.complex, inst.subcomplexes.at(name));
  }
  return fam;
}

}  // namespace

TEST_CASE("find_witness: common vertex gives a point witness") {
  auto X = corpus::wheel(6);
  auto fam = family_of(X, {{0, 1}, {0, 3}, {0, 5}});
  auto w = find_witness(fam, 2);
  REQUIRE(w);
  CHECK(w->simplex == Simplex{0});
  CHECK(w->touched == std::vector<VertexId>{0, 0, 0});
}

TEST_CASE("find_witness on the facet family of a simplex") {
  for (int n = 1; n <= 4; ++n) {
    auto inst = simplex_with_facets(n);
    ConvexFamily fam;
    fam.parent = &inst.complex;
    for (const auto& [name, verts] : inst.subcomplexes) {
      fam.names.push_back(name);
      fam.members.emplace_back(inst.complex, verts);
    }
    // no common vertex, but the top simplex meets every facet
    std::set<VertexId> common(fam.members[0].vertices().begin(),
                              fam.members[0].vertices().end());
    for (const auto& m : fam.members) {
      std::set<VertexId> next;
      for (VertexId v : m.vertices())
        if (common.count(v)) next.insert(v);
      common = next;
    }
    CHECK(common.empty());

    auto w = find_witness(fam, n);
    REQUIRE(w);
    // dimension-ascending search returns an edge as soon as n >= 2
    CHECK(dim(w->simplex) == (n == 1 ? 1 : 1));
    Simplex top;
    for (int v = 0; v <= n; ++v) top.push_back(v);
    bool top_is_witness = true;
    for (const auto& m : fam.members) {
      bool hit = false;
      for (VertexId v : top)
        if (m.has_vertex(v)) hit = true;
      if (!hit) top_is_witness = false;
    }
    CHECK(top_is_witness);
  }
}

TEST_CASE("find_witness agrees with the naive double loop") {
  std::vector<GeneratedInstance> cases;
  cases.push_back(hex_disc(HexShape::Triangle, 3));
  cases.push_back(hex_disc(HexShape::Hexagon, 1));
  cases.push_back(simplex_with_facets(3));
  std::mt19937 rng(13);
  for (auto& inst : cases) {
    const auto& X = inst.complex;
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::vector<VertexId>> sets;
      std::vector<std::set<VertexId>> raw;
      for (int m = 0; m < 3; ++m) {
        std::set<VertexId> s;
        int size = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < size; ++i) s.insert(static_cast<VertexId>(rng() % X.vertex_count()));
        sets.push_back({s.begin(), s.end()});
        raw.push_back(s);
      }
      auto fam = family_of(X, sets);
      for (int max_dim : {0, 1, 2}) {
        auto mine = find_witness(fam, max_dim);
        auto naive = oracles::find_witness_naive(X, raw, max_dim);
        CHECK(mine.has_value() == naive.has_value());
        if (mine && naive) CHECK(mine->simplex == *naive);
      }
    }
  }
}

TEST_CASE("reduce_triangle: shared vertex short-circuits") {
  auto X = corpus::wheel(6);
  auto fam = family_of(X, {{0, 1}, {0, 3}, {0, 5}});
  auto cfg = reduce_triangle(fam);
  CHECK(cfg.common_point);
}

TEST_CASE("reduce_triangle on the three sides of a hex triangle") {
  auto inst = hex_disc(HexShape::Triangle, 3);
  auto cfg = reduce_triangle(sides_family(inst));
  CHECK_FALSE(cfg.common_point);
  CHECK(cfg.cycle.size() == 9);  // the boundary triangle
  std::set<VertexId> cyc(cfg.cycle.begin(), cfg.cycle.end());
  CHECK(cyc.size() == 9);
}

TEST_CASE("reduce_triangle replaces a basepoint when geodesics overlap") {
  // hex side-3 triangle with a path spur hanging off one corner; ids shifted
  // so the initial basepoint lands on the spur tip and two geodesics share
  // the spur, forcing exactly one replacement before the circle appears
  auto hex3 = hex_disc(HexShape::Triangle, 3).complex;
  std::vector<Simplex> simplices;
  for (const auto& t : hex3.maximal_simplices()) {
    Simplex shifted;
    for (VertexId v : t) shifted.push_back(v + 2);
    simplices.push_back(shifted);
  }
  simplices.push_back({0, 1});
  simplices.push_back({1, 11});  // spur tip 0 - 1 - corner (3,0)
  auto X = SimplicialComplex::from_simplices(std::move(simplices), 12);
  std::vector<VertexId> side_b = {2, 3, 4, 5};
  std::vector<VertexId> side_a_spur = {2, 6, 9, 11, 1, 0};
  std::vector<VertexId> side_c_spur = {5, 8, 10, 11, 1, 0};
  auto fam = family_of(X, {side_b, side_a_spur, side_c_spur});
  auto cfg = reduce_triangle(fam);
  CHECK_FALSE(cfg.common_point);
  CHECK(cfg.iterations == 1);
  CHECK(cfg.cycle.size() == 9);  // the hex boundary, shifted ids
  CHECK(cfg.C == 11);
}

TEST_CASE("verify_theorem_A on convex triples in a 7-systolic disc") {
  auto inst = seven_systolic_disc(7, 2, 0);
  const auto& X = inst.complex;
  REQUIRE(is_k_systolic(X, 7) == Tri::True);
  std::mt19937 rng(3);
  int done = 0;
  while (done < 8) {
    VertexId p = static_cast<VertexId>(rng() % X.vertex_count());
    VertexId q = static_cast<VertexId>(rng() % X.vertex_count());
    VertexId r = static_cast<VertexId>(rng() % X.vertex_count());
    if (p == q || q == r || p == r) continue;
    ConvexFamily fam;
    fam.parent = &X;
    fam.names = {"pq", "qr", "pr"};
    fam.members = {convex_hull(X, {p, q}), convex_hull(X, {q, r}), convex_hull(X, {p, r})};
    auto rep = verify_theorem_A(X, fam);
    CHECK(rep.hypotheses_ok);
    CHECK(rep.verified);
    CHECK(rep.witness_dim <= 2);
    ++done;
  }
}

TEST_CASE("verify_theorem_B on convex quadruples in a systolic disc") {
  auto inst = hex_disc(HexShape::Hexagon, 2);
  const auto& X = inst.complex;
  std::mt19937 rng(5);
  int done = 0;
  while (done < 8) {
    std::set<VertexId> pts;
    while (pts.size() < 4) pts.insert(static_cast<VertexId>(rng() % X.vertex_count()));
    std::vector<VertexId> p(pts.begin(), pts.end());
    ConvexFamily fam;
    fam.parent = &X;
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<VertexId> seed;
      for (int i = 0; i < 4; ++i)
        if (i != skip) seed.push_back(p[static_cast<size_t>(i)]);
      fam.names.push_back("h" + std::to_string(skip));
      fam.members.push_back(convex_hull(X, seed));
    }
    auto rep = verify_theorem_B(X, fam);
    CHECK(rep.hypotheses_ok);
    CHECK(rep.verified);
    CHECK(rep.witness_dim <= 3);
    CHECK(rep.extremal_points.size() == 4);
    ++done;
  }
}

TEST_CASE("triangle_shape classifications") {
  auto tree = corpus::tripod_tree(2);
  auto tripod = triangle_shape(tree, 2, 4, 6);
  CHECK(tripod.shape == TriangleShape::Tripod);
  CHECK(tripod.single_simplex_core);

  auto par = hex_disc(HexShape::Parallelogram, 4, 1).complex;
  auto collinear = triangle_shape(par, 0, 2, 4);
  CHECK(collinear.shape == TriangleShape::Segment);
  CHECK(collinear.single_simplex_core);

  auto W = corpus::wheel(7);
  auto generic = triangle_shape(W, 1, 3, 5);
  CHECK(generic.shape != TriangleShape::Segment);
  CHECK(generic.single_simplex_core);
}

TEST_CASE("minimal triangle fillings in 7-systolic discs: no interior vertex, "
          "nonpositive defects along geodesic interiors") {
  std::vector<GeneratedInstance> instances = {seven_systolic_disc(7, 1, 0),
                                              seven_systolic_disc(9, 1, 0),
                                              seven_systolic_disc(7, 2, 1)};
  std::mt19937 rng(17);
  int inspected = 0;
  for (const auto& inst : instances) {
    const auto& X = inst.complex;
    REQUIRE(is_k_systolic(X, 7) == Tri::True);
    int done = 0, guard = 0;
    while (done < 6 && ++guard < 100) {
      std::set<VertexId> pts;
      while (pts.size() < 3) pts.insert(static_cast<VertexId>(rng() % X.vertex_count()));
      std::vector<VertexId> p(pts.begin(), pts.end());
      auto surf = triangular_surface(X, p[0], p[1], p[2]);
      ++done;
      if (surf.shape != TriangleShape::HornedTriangle) continue;
      auto cycle = surf.reduced_cycle;
      auto filling = fill_cycle_minimal(X, cycle);
      REQUIRE(filling);
      CHECK(filling->disc.interior_vertices().empty());
      // trimmed corners are where consecutive sides meet; everything else on
      // the boundary lies in a geodesic interior and cannot be positive
      std::set<VertexId> corner_images;
      for (const auto& horn : surf.horn_paths)
        corner_images.insert(surf.surface.assignment[static_cast<size_t>(horn.back())]);
      auto dv = defects(filling->disc);
      for (size_t i = 0; i < cycle.size(); ++i) {
        if (corner_images.count(cycle[i])) continue;
        CHECK(dv.defect[i] <= 0);
      }
      ++inspected;
    }
  }
  CHECK(inspected > 0);
}

TEST_CASE("apex triples around a fully surrounded triangle get a side-2 core") {
  // In a two-ring disc with interior degrees >= 7, pick the three second
  // apexes of the edges of an interior triangle. The three midpoints of the
  // resulting geodesic hexagon span a triangle, so the minimal filling is
  // the four-triangle equilateral patch, not a single 2-simplex. A dim-2
  // witness simplex still exists for hulls through the corners.
  auto inst = seven_systolic_disc(10, 2, 3);
  const auto& X = inst.complex;
  REQUIRE(is_k_systolic(X, 7) == Tri::True);
  VertexId a = 11, b = 27, c = 46;
  auto rep = triangle_shape(X, a, b, c);
  CHECK(rep.shape == TriangleShape::HornedTriangle);
  CHECK(rep.core_area == 4);
  CHECK(rep.core_equilateral);
  CHECK(rep.core_side == 2);
  CHECK_FALSE(rep.single_simplex_core);
  // the midpoints of the reduced hexagon span a triangle of X
  REQUIRE(rep.reduced_cycle.size() == 6);
  Simplex mids = normalized_simplex(
      {rep.reduced_cycle[1], rep.reduced_cycle[3], rep.reduced_cycle[5]});
  CHECK(X.contains(mids));

  ConvexFamily fam;
  fam.parent = &X;
  fam.names = {"ab", "bc", "ac"};
  fam.members = {convex_hull(X, {a, b}), convex_hull(X, {b, c}), convex_hull(X, {a, c})};
  auto w = find_witness(fam, 2);
  REQUIRE(w);
  CHECK(dim(w->simplex) <= 2);
}

TEST_CASE("counterexample search finds the side-3 fixture and not less") {
  auto none = search_counterexample(2);
  CHECK_FALSE(none.found);

  auto res = search_counterexample(3);
  REQUIRE(res.found);
  CHECK(res.side == 3);

  // pairwise intersections are single corner vertices
  const auto& inst = res.instance;
  for (auto [a, b] : {std::pair{"side_a", "side_b"}, {"side_a", "side_c"}, {"side_b", "side_c"}}) {
    std::set<VertexId> sa(inst.subcomplexes.at(a).begin(), inst.subcomplexes.at(a).end());
    int shared = 0;
    for (VertexId v : inst.subcomplexes.at(b))
      if (sa.count(v)) ++shared;
    CHECK(shared == 1);
  }

  // and no simplex of any dimension meets all three sides
  ConvexFamily fam = sides_family(inst);
  CHECK_FALSE(find_witness(fam, inst.complex.dimension()));

  // the side-2 medial triangle is a witness, so side 2 stays clean
  auto two = hex_disc(HexShape::Triangle, 2);
  CHECK(find_witness(sides_family(two), 2));
}

TEST_CASE("the frozen counterexample fixture matches a fresh search bit for bit") {
  auto res = search_counterexample(3);
  REQUIRE(res.found);
  auto frozen = load_instance(std::string(SYSTOLIC_SOURCE_DIR) +
                              "/data/helly_counterexample_hex3.json");
  CHECK(instance_to_json(res.instance) == instance_to_json(frozen));
  CHECK(frozen.complex.sc_certificate() == Certificate::Disc);
  CHECK(frozen.subcomplexes.size() == 3);
}

TEST_CASE("witness search respects the dimension cap") {
  auto inst = simplex_with_facets(3);
  ConvexFamily fam;
  fam.parent = &inst.complex;
  for (const auto& [name, verts] : inst.subcomplexes) {
    fam.names.push_back(name);
    fam.members.emplace_back(inst.complex, verts);
  }
  CHECK_FALSE(find_witness(fam, 0));
  CHECK(find_witness(fam, 1));
}
