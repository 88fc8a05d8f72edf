#include <doctest.h>

#include "corpus.hpp"
#include "systolic/disc.hpp"
#include "systolic/gen.hpp"
#include "systolic/metric.hpp"

using namespace systolic;

TEST_CASE("disc validation accepts discs and rejects everything else") {
  CHECK(TriangulatedDisc::try_from_complex(corpus::single_triangle()));
  CHECK(TriangulatedDisc::try_from_complex(corpus::wheel(6)));
  CHECK(TriangulatedDisc::try_from_complex(hex_disc(HexShape::Hexagon, 2).complex));
  CHECK(TriangulatedDisc::try_from_complex(corpus::double_reflex_strip()));

  CHECK_FALSE(TriangulatedDisc::try_from_complex(corpus::tetrahedron_boundary()));
  CHECK_FALSE(TriangulatedDisc::try_from_complex(corpus::square_cycle()));
  CHECK_FALSE(TriangulatedDisc::try_from_complex(corpus::flat_torus(7)));
  // pinch point: two triangles sharing only a vertex
  auto pinch = SimplicialComplex::from_maximal(5, {{0, 1, 2}, {0, 3, 4}});
  CHECK_FALSE(TriangulatedDisc::try_from_complex(pinch));
  CHECK_THROWS_AS(TriangulatedDisc::from_complex(pinch), invalid_input);
}

TEST_CASE("sphere validation") {
  CHECK(TriangulatedSphere::try_from_complex(corpus::tetrahedron_boundary()));
  CHECK(TriangulatedSphere::try_from_complex(corpus::octahedron()));
  CHECK_FALSE(TriangulatedSphere::try_from_complex(corpus::wheel(6)));
  CHECK_FALSE(TriangulatedSphere::try_from_complex(corpus::flat_torus(7)));
}

TEST_CASE("defects") {
  auto tri = TriangulatedDisc::from_complex(corpus::single_triangle());
  auto dv = defects(tri);
  CHECK(dv.defect == std::vector<int>{2, 2, 2});

  auto wheel = TriangulatedDisc::from_complex(corpus::wheel(6));
  auto wv = defects(wheel);
  CHECK(wv.defect[0] == 0);
  for (int v = 1; v <= 6; ++v) CHECK(wv.defect[static_cast<size_t>(v)] == 1);

  auto pts = hex_region(HexShape::Triangle, 3);
  auto hex3 = TriangulatedDisc::from_complex(hex_disc(HexShape::Triangle, 3).complex);
  auto hv = defects(hex3);
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    bool corner = (p == HexCoord{0, 0}) || (p == HexCoord{3, 0}) || (p == HexCoord{0, 3});
    bool interior = p.a > 0 && p.b > 0 && p.a + p.b < 3;
    CHECK(hv.defect[i] == (corner ? 2 : 0));
    CHECK(hex3.is_interior(static_cast<VertexId>(i)) == interior);
  }
}

TEST_CASE("Gauss-Bonnet is an exact integer identity") {
  auto tri = TriangulatedDisc::from_complex(corpus::single_triangle());
  CHECK(gauss_bonnet(tri) == std::pair<long long, long long>{6, 6});

  auto tetra = TriangulatedSphere::from_complex(corpus::tetrahedron_boundary());
  CHECK(gauss_bonnet(tetra) == std::pair<long long, long long>{12, 12});

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto d = TriangulatedDisc::from_complex(
        random_disc({.triangles = 17, .seed = seed}).complex);
    auto [lhs, rhs] = gauss_bonnet(d);
    CHECK(lhs == rhs);
    CHECK(rhs == 6);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto s = TriangulatedSphere::from_complex(stacked_sphere(5, seed));
    auto [lhs, rhs] = gauss_bonnet(s);
    CHECK(lhs == rhs);
    CHECK(rhs == 12);
  }
}

TEST_CASE("flatness by defect conditions") {
  CHECK(is_flat(TriangulatedDisc::from_complex(hex_disc(HexShape::Hexagon, 2).complex)));
  CHECK(is_flat(TriangulatedDisc::from_complex(hex_disc(HexShape::Parallelogram, 3, 2).complex)));
  CHECK_FALSE(is_flat(TriangulatedDisc::from_complex(corpus::wheel(7))));  // interior defect -1
  CHECK_FALSE(is_flat(TriangulatedDisc::from_complex(corpus::double_reflex_strip())));
}

TEST_CASE("hex plane embedding oracle") {
  auto tri = TriangulatedDisc::from_complex(corpus::single_triangle());
  auto e0 = embed_in_hex_plane(tri);
  REQUIRE(e0);
  CHECK(hex_distance(e0->at(0), e0->at(1)) == 1);

  auto hex2 = TriangulatedDisc::from_complex(hex_disc(HexShape::Triangle, 2).complex);
  auto e1 = embed_in_hex_plane(hex2);
  REQUIRE(e1);

  CHECK_FALSE(embed_in_hex_plane(TriangulatedDisc::from_complex(corpus::wheel(7))));
  CHECK_FALSE(embed_in_hex_plane(TriangulatedDisc::from_complex(corpus::double_reflex_strip())));
}

TEST_CASE("flatness equals embeddability on a generated corpus") {
  std::vector<SimplicialComplex> discs = {
      corpus::single_triangle(), corpus::wheel(5), corpus::wheel(6), corpus::wheel(7),
      hex_disc(HexShape::Triangle, 3).complex, hex_disc(HexShape::Hexagon, 1).complex,
      corpus::double_reflex_strip(), seven_systolic_disc(7, 1, 0).complex};
  for (std::uint64_t seed = 0; seed < 25; ++seed)
    discs.push_back(random_disc({.triangles = 12 + static_cast<int>(seed % 9), .seed = seed}).complex);
  int flats = 0;
  for (const auto& X : discs) {
    auto d = TriangulatedDisc::from_complex(X);
    if (d.triangle_count() > 30) continue;
    bool emb = embed_in_hex_plane(d).has_value();
    CHECK(is_flat(d) == emb);
    flats += emb;
  }
  CHECK(flats > 0);
}

TEST_CASE("doubling a wheel gives a sphere, lattice helpers are consistent") {
  auto wheel = TriangulatedDisc::from_complex(corpus::wheel(6));
  auto sphere = TriangulatedSphere::from_complex(sphere_double(wheel));
  CHECK(sphere.complex().vertex_count() == 8);
  auto [lhs, rhs] = gauss_bonnet(sphere);
  CHECK(lhs == 12);
  CHECK(rhs == 12);

  for (const auto& s : hex_steps()) CHECK(hex_distance({0, 0}, s) == 1);
  auto [p, q] = hex_edge_apexes({0, 0}, {1, 0});
  CHECK(p != q);
  CHECK(hex_distance(p, {0, 0}) == 1);
  CHECK(hex_distance(p, {1, 0}) == 1);
}
