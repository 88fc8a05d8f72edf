#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "systolic/gen.hpp"
#include "systolic/surface.hpp"

using namespace systolic;

namespace {

VertexId at(const std::vector<HexCoord>& pts, HexCoord c) {
  for (size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == c) return static_cast<VertexId>(i);
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("filling a face, a squared diagonal, a wheel rim") {
  auto tri = corpus::single_triangle();
  auto f0 = fill_cycle_minimal(tri, {0, 1, 2});
  REQUIRE(f0);
  CHECK(f0->domain_area == 1);
  CHECK(f0->injective_area == 1);

  auto two = corpus::two_triangles_shared_edge();
  auto f1 = fill_cycle_minimal(two, {0, 1, 3, 2});
  REQUIRE(f1);
  CHECK(f1->domain_area == 2);
  CHECK(f1->injective_area == 2);

  auto hexagon = hex_disc(HexShape::Hexagon, 2).complex;
  auto pts = hex_region(HexShape::Hexagon, 2);
  std::vector<VertexId> rim;
  for (auto c : {HexCoord{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}})
    rim.push_back(at(pts, c));
  auto f2 = fill_cycle_minimal(hexagon, rim);
  REQUIRE(f2);
  CHECK(f2->domain_area == 6);
  CHECK(f2->injective_area == 6);
  CHECK(is_flat(f2->disc));
}

TEST_CASE("filling validates its cycle") {
  auto tri = corpus::single_triangle();
  CHECK_THROWS_AS(fill_cycle_minimal(tri, {0, 1}), invalid_input);
  CHECK_THROWS_AS(fill_cycle_minimal(tri, {0, 1, 1}), invalid_input);
  auto sq = corpus::square_cycle();
  CHECK_THROWS_AS(fill_cycle_minimal(sq, {0, 1, 3}), invalid_input);  // 1,3 not adjacent
  // square has no 2-cells at all: no filling within any cap
  CHECK_FALSE(fill_cycle_minimal(sq, {0, 1, 2, 3}, 10));
}

TEST_CASE("filling an induced square needs an interior vertex") {
  auto octa = corpus::octahedron();
  // equatorial square 1,2,4,3 (antipodes (1,4),(2,3) opposite)
  auto f = fill_cycle_minimal(octa, {1, 2, 4, 3});
  REQUIRE(f);
  CHECK(f->domain_area == 4);  // fan through a pole
  CHECK(f->disc.boundary_cycle().size() == 4);
}

TEST_CASE("boundary of a minimal filling maps isomorphically onto the cycle") {
  auto hex3 = hex_disc(HexShape::Triangle, 3).complex;
  auto pts = hex_region(HexShape::Triangle, 3);
  std::vector<VertexId> rim;
  for (auto c : {HexCoord{0, 1}, {0, 2}, {1, 2}, {2, 1}, {2, 0}, {1, 0}})
    rim.push_back(at(pts, c));
  auto f = fill_cycle_minimal(hex3, rim);
  REQUIRE(f);
  CHECK(f->domain_area == 6);
  CHECK(f->assignment.size() == rim.size() + 1);  // wheel over the interior vertex
  for (size_t i = 0; i < rim.size(); ++i)
    CHECK(f->assignment[i] == rim[i]);
  CHECK(f->disc.is_interior(static_cast<VertexId>(rim.size())));
}

TEST_CASE("filling search agrees with direct enumeration on small cycles") {
  struct Case {
    SimplicialComplex X;
    std::vector<VertexId> cycle;
  };
  std::vector<Case> cases;
  cases.push_back({corpus::single_triangle(), {0, 1, 2}});
  cases.push_back({corpus::two_triangles_shared_edge(), {0, 1, 3, 2}});
  cases.push_back({corpus::octahedron(), {1, 2, 4, 3}});
  cases.push_back({corpus::wheel(7), {1, 2, 3, 0}});
  cases.push_back({corpus::wheel(7), {1, 2, 3, 4, 0}});
  cases.push_back({corpus::wheel(5), {1, 2, 3, 4, 5}});
  for (const auto& [X, cycle] : cases) {
    auto mine = fill_cycle_minimal(X, cycle, 8);
    auto brute = oracles::min_fill_brute(X, cycle, 1, 6);
    REQUIRE(mine);
    REQUIRE(brute);
    CHECK(mine->domain_area == brute->first);
    CHECK(mine->injective_area == brute->second);
    // the domain boundary is the polygon itself
    const auto& bc = mine->disc.boundary_cycle();
    CHECK(bc.size() == cycle.size());
    for (VertexId v : bc) CHECK(v < static_cast<VertexId>(cycle.size()));
  }

  // a cycle with no filling at all: both sides say none
  auto circle = corpus::triangle_boundary();
  CHECK_FALSE(fill_cycle_minimal(circle, {0, 1, 2}, 10));
  CHECK_FALSE(oracles::min_fill_brute(circle, {0, 1, 2}, 2, 8));

  // randomized cross-check on short cycles of generated discs
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto inst = random_disc({.triangles = 10, .seed = 70 + seed});
    for (int len : {3, 4}) {
      auto cycles = oracles::simple_cycles(inst.complex, len);
      for (size_t i = 0; i < cycles.size() && i < 3; ++i) {
        auto mine = fill_cycle_minimal(inst.complex, cycles[i], 8);
        auto brute = oracles::min_fill_brute(inst.complex, cycles[i], 1, 6);
        REQUIRE(mine.has_value() == brute.has_value());
        if (mine) {
          CHECK(mine->domain_area == brute->first);
          CHECK(mine->injective_area == brute->second);
          ++compared;
        }
      }
    }
  }
  CHECK(compared > 0);
}

TEST_CASE("minimal fillings of cycles in systolic instances are systolic discs") {
  auto inst = hex_disc(HexShape::Hexagon, 2);
  const auto& X = inst.complex;
  FillContext ctx(X, 12);
  int checked = 0;
  for (const auto& cyc : induced_cycles_up_to(X, 6)) {
    auto f = ctx.fill(cyc);
    if (!f) continue;
    auto filled = f->disc.complex();
    filled.set_sc_certificate(Certificate::Disc);
    CHECK(is_k_systolic(filled, 6) == Tri::True);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("digonal surfaces classify segment, simple digon, chain") {
  // segment: equal geodesics
  auto hex2 = hex_disc(HexShape::Triangle, 2).complex;
  auto pts2 = hex_region(HexShape::Triangle, 2);
  std::vector<VertexId> side = {at(pts2, {0, 0}), at(pts2, {1, 0}), at(pts2, {2, 0})};
  auto seg = digonal_surface(hex2, side, side);
  CHECK(seg.shape == DigonShape::Segment);
  CHECK(seg.surface.domain_area == 0);

  // simple digon: two length-2 geodesics with adjacent midpoints
  auto quad = corpus::two_triangles_shared_edge();
  auto simple = digonal_surface(quad, {0, 1, 3}, {0, 2, 3});
  CHECK(simple.shape == DigonShape::SimpleDigon);
  CHECK(simple.surface.domain_area == 2);
  CHECK(simple.all_pieces_flat);
  CHECK(check_simple_digon_flat(quad, {0, 1, 3}, {0, 2, 3}));

  // chain: two digons glued at a middle vertex
  std::vector<Simplex> tris = {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}, {4, 5, 6}};
  auto chain_complex = SimplicialComplex::from_maximal(7, tris);
  auto chain = digonal_surface(chain_complex, {0, 1, 3, 4, 6}, {0, 2, 3, 5, 6});
  CHECK(chain.shape == DigonShape::Chain);
  CHECK(chain.pieces.size() == 2);
  CHECK(chain.cuts == std::vector<VertexId>{0, 3, 6});
  CHECK(chain.all_pieces_flat);
}

TEST_CASE("digon chains extend to honest discs with collapsed seams") {
  // digon, shared edge, digon: cuts at both ends of the middle segment
  std::vector<Simplex> tris = {{0, 1, 2}, {1, 2, 3}, {4, 5, 6}, {5, 6, 7}};
  std::vector<Simplex> all(tris.begin(), tris.end());
  all.push_back({3, 4});
  auto X = SimplicialComplex::from_simplices(std::move(all), 8);
  std::vector<VertexId> g0 = {0, 1, 3, 4, 5, 7};
  std::vector<VertexId> g1 = {0, 2, 3, 4, 6, 7};
  auto surf = digonal_surface(X, g0, g1);
  CHECK(surf.shape == DigonShape::Chain);
  REQUIRE(surf.pieces.size() == 3);
  CHECK(surf.pieces[1].is_segment);

  auto ext = extend_digon_to_disc(surf);
  const auto& disc = ext.disc;  // construction already validated disc-ness
  CHECK(disc.boundary_cycle().size() == 2 * (g0.size() - 1));
  REQUIRE(ext.top_arc.size() == g0.size());
  for (size_t i = 0; i < g0.size(); ++i) {
    CHECK(ext.assignment[static_cast<size_t>(ext.top_arc[i])] == g0[i]);
    CHECK(ext.assignment[static_cast<size_t>(ext.bottom_arc[i])] == g1[i]);
  }
  // interior cut positions are doubled, endpoints are not
  CHECK(ext.top_arc.front() == ext.bottom_arc.front());
  CHECK(ext.top_arc.back() == ext.bottom_arc.back());
  CHECK(ext.top_arc[2] != ext.bottom_arc[2]);
  CHECK(ext.top_arc[3] != ext.bottom_arc[3]);
  auto [lhs, rhs] = gauss_bonnet(disc);
  CHECK(lhs == rhs);
}

TEST_CASE("digon preconditions") {
  auto quad = corpus::two_triangles_shared_edge();
  CHECK_THROWS_AS(check_simple_digon_flat(quad, {0, 1, 3}, {0, 1, 3}), invalid_input);
  CHECK_THROWS_AS(digonal_surface(quad, {0, 1, 3}, {1, 2, 3}), invalid_input);
  CHECK_THROWS_AS(digonal_surface(quad, {0, 1}, {0, 2, 3}), invalid_input);
}

TEST_CASE("digons in flat patches are flat") {
  auto par = hex_disc(HexShape::Parallelogram, 3, 2).complex;
  auto pts = hex_region(HexShape::Parallelogram, 3, 2);
  VertexId a = at(pts, {0, 0}), b = at(pts, {2, 2});
  auto dag = interval(par, a, b);
  auto geos = dag.geodesics(16);
  REQUIRE(geos.size() >= 2);
  int tested = 0;
  for (size_t i = 0; i < geos.size(); ++i)
    for (size_t j = i + 1; j < geos.size(); ++j) {
      bool endpoints_only = true;
      for (size_t p = 1; p + 1 < geos[i].size() && endpoints_only; ++p)
        for (size_t q = 1; q + 1 < geos[j].size(); ++q)
          if (geos[i][p] == geos[j][q]) { endpoints_only = false; break; }
      if (!endpoints_only) continue;
      CHECK(check_simple_digon_flat(par, geos[i], geos[j]));
      ++tested;
    }
  CHECK(tested > 0);
}

TEST_CASE("triangular surface: collinear triples give segments") {
  auto par = hex_disc(HexShape::Parallelogram, 4, 1).complex;
  auto pts = hex_region(HexShape::Parallelogram, 4, 1);
  auto s = triangular_surface(par, at(pts, {0, 0}), at(pts, {4, 0}), at(pts, {2, 0}));
  CHECK(s.shape == TriangleShape::Segment);
  CHECK(s.surface.domain_area == 0);
  CHECK(s.side_geodesics[0].size() ==
        static_cast<size_t>(distance(par, at(pts, {0, 0}), at(pts, {4, 0}))) + 1);
}

TEST_CASE("triangular surface: tree leaves give a tripod") {
  auto tree = corpus::tripod_tree(3);
  auto s = triangular_surface(tree, 3, 6, 9);  // the three leaves
  CHECK(s.shape == TriangleShape::Tripod);
  CHECK(s.surface.domain_area == 0);
  // sides pass through the center and are isometric
  for (int k = 0; k < 3; ++k) {
    const auto& g = s.side_geodesics[static_cast<size_t>(k)];
    CHECK(static_cast<int>(g.size()) - 1 == distance(tree, g.front(), g.back()));
  }
}

TEST_CASE("triangular surface: hex corners give a hornless equilateral core") {
  for (int side : {2, 3}) {
    auto inst = hex_disc(HexShape::Triangle, side);
    auto pts = hex_region(HexShape::Triangle, side);
    VertexId c0 = at(pts, {0, 0}), c1 = at(pts, {side, 0}), c2 = at(pts, {0, side});
    auto s = triangular_surface(inst.complex, c0, c1, c2);
    CHECK(s.shape == TriangleShape::HornedTriangle);
    CHECK(s.core_area == side * side);
    CHECK(s.core_equilateral);
    CHECK(s.core_side == side);
    for (int k = 0; k < 3; ++k) CHECK(s.horn_paths[static_cast<size_t>(k)].size() == 1);
    // segments map isometrically
    for (int k = 0; k < 3; ++k) {
      const auto& g = s.side_geodesics[static_cast<size_t>(k)];
      CHECK(static_cast<int>(g.size()) - 1 == distance(inst.complex, g.front(), g.back()));
    }
  }
}

TEST_CASE("triangular surface with a genuine horn") {
  auto W = corpus::wheel(7);
  // rim vertices 1..7; triple (1,2,4): side 1-2 is an edge, sides to 4 run
  // through the hub or the rim; the reduction leaves a single simplex core
  auto s = triangular_surface(W, 1, 2, 4);
  CHECK(s.shape == TriangleShape::HornedTriangle);
  CHECK(s.core_area == 1);
  CHECK(s.core_single_simplex);
}

TEST_CASE("sphere from the four vertices of a tetrahedron") {
  auto X = corpus::solid_tetrahedron();
  auto res = build_sphere(X, 0, 1, 2, 3);
  REQUIRE_FALSE(res.degenerate);
  REQUIRE(res.sphere);
  CHECK(res.sphere->complex().vertex_count() == 4);
  CHECK(res.sphere->triangle_count() == 4);
  auto [lhs, rhs] = gauss_bonnet(*res.sphere);
  CHECK(lhs == rhs);

  // the inclusions compose with the sphere map to the piece maps
  for (const auto& [name, piece] : res.pieces) {
    const auto& inc = res.inclusions.at(name);
    for (size_t v = 0; v < piece.assignment.size(); ++v)
      CHECK(res.assignment[static_cast<size_t>(inc[v])] == piece.assignment[v]);
  }
}

TEST_CASE("sphere over a generic quadruple in a flat patch") {
  auto inst = hex_disc(HexShape::Triangle, 4);
  auto pts = hex_region(HexShape::Triangle, 4);
  VertexId A = at(pts, {0, 0}), B = at(pts, {4, 0}), C = at(pts, {0, 4}), D = at(pts, {1, 1});
  auto res = build_sphere(inst.complex, A, B, C, D);
  REQUIRE_FALSE(res.degenerate);
  REQUIRE(res.sphere);
  auto [lhs, rhs] = gauss_bonnet(*res.sphere);
  CHECK(lhs == 12);
  CHECK(rhs == 12);

  // pieces cover the sphere and interiors stay disjoint
  std::set<VertexId> covered;
  size_t triangles = 0;
  for (const auto& [name, piece] : res.pieces) {
    for (VertexId s : res.inclusions.at(name)) covered.insert(s);
    for (const auto& t : piece.domain.maximal_simplices())
      if (t.size() == 3) ++triangles;
  }
  CHECK(covered.size() == static_cast<size_t>(res.sphere->complex().vertex_count()));
  CHECK(triangles == static_cast<size_t>(res.sphere->triangle_count()));
}

TEST_CASE("sphere handles and reports degenerate quadruples") {
  auto inst = hex_disc(HexShape::Triangle, 4);
  auto pts = hex_region(HexShape::Triangle, 4);

  // D on a geodesic from A to B: the triangular piece A,B,D collapses to a
  // segment, but the quotient still closes up into a sphere
  VertexId A = at(pts, {0, 0}), B = at(pts, {4, 0}), C = at(pts, {0, 4}), D = at(pts, {2, 0});
  auto res = build_sphere(inst.complex, A, B, C, D);
  if (!res.degenerate) {
    REQUIRE(res.sphere);
    auto [lhs, rhs] = gauss_bonnet(*res.sphere);
    CHECK(lhs == rhs);
  } else {
    CHECK_FALSE(res.degeneracy.empty());
  }

  // four collinear points leave no two-dimensional piece at all
  auto strip = hex_disc(HexShape::Parallelogram, 5, 1);
  auto spts = hex_region(HexShape::Parallelogram, 5, 1);
  auto flat = build_sphere(strip.complex, at(spts, {0, 0}), at(spts, {5, 0}), at(spts, {2, 0}),
                           at(spts, {4, 0}));
  CHECK(flat.degenerate);
  CHECK_FALSE(flat.degeneracy.empty());

  CHECK_THROWS_AS(build_sphere(inst.complex, A, A, B, C), invalid_input);
}

TEST_CASE("sphere over a rim quadruple of a 7-wheel") {
  auto W = corpus::wheel(7);
  auto res = build_sphere(W, 1, 2, 4, 6);
  REQUIRE_FALSE(res.degenerate);
  REQUIRE(res.sphere);
  auto [lhs, rhs] = gauss_bonnet(*res.sphere);
  CHECK(lhs == 12);
  CHECK(rhs == 12);
  // coverage and disjoint interiors
  std::set<VertexId> covered;
  size_t triangles = 0;
  for (const auto& [name, piece] : res.pieces) {
    for (VertexId s : res.inclusions.at(name)) covered.insert(s);
    for (const auto& t : piece.domain.maximal_simplices())
      if (t.size() == 3) ++triangles;
  }
  CHECK(covered.size() == static_cast<size_t>(res.sphere->complex().vertex_count()));
  CHECK(triangles == static_cast<size_t>(res.sphere->triangle_count()));
}

TEST_CASE("ball filling verification and search") {
  // ambient: solid 4-simplex, sphere: tetrahedron boundary on vertices 0..3
  auto X = SimplicialComplex::from_maximal(5, {{0, 1, 2, 3, 4}});
  auto S = TriangulatedSphere::from_complex(corpus::tetrahedron_boundary());
  std::vector<VertexId> f = {0, 1, 2, 3};

  BallFilling solid;
  solid.tetrahedra = {{0, 1, 2, 3}};
  solid.assignment = f;
  CHECK(verify_ball_filling(X, S, f, solid).ok);

  // filling with an interior vertex fails
  BallFilling coned;
  coned.tetrahedra = {{0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}};
  coned.assignment = {0, 1, 2, 3, 4};
  auto bad = verify_ball_filling(X, S, f, coned);
  CHECK_FALSE(bad.ok);
  bool internal_flagged = false;
  for (const auto& d : bad.diagnostics)
    if (d.find("internal vertex") != std::string::npos) internal_flagged = true;
  CHECK(internal_flagged);

  auto found = search_ball_filling(X, S, f);
  REQUIRE(found);
  CHECK(verify_ball_filling(X, S, f, *found).ok);

  // sphere produced by the quotient construction on the tetrahedron
  auto res = build_sphere(corpus::solid_tetrahedron(), 0, 1, 2, 3);
  REQUIRE(res.sphere);
  auto filling = search_ball_filling(corpus::solid_tetrahedron(), *res.sphere, res.assignment);
  REQUIRE(filling);
  CHECK(verify_ball_filling(corpus::solid_tetrahedron(), *res.sphere, res.assignment, *filling).ok);
}
