#include <doctest.h>

#include "corpus.hpp"
#include "systolic/io.hpp"

using namespace systolic;

TEST_CASE("hex disc generator: counts, flags, certificates") {
  auto one = hex_disc(HexShape::Triangle, 1);
  CHECK(one.complex.vertex_count() == 3);
  CHECK(one.complex.maximal_simplices().size() == 1);

  auto three = hex_disc(HexShape::Triangle, 3);
  CHECK(three.complex.vertex_count() == 10);
  CHECK(three.complex.triangles().size() == 9);
  auto disc = TriangulatedDisc::from_complex(three.complex);
  CHECK(disc.interior_vertices().size() == 1);
  CHECK(is_flag(three.complex));
  CHECK(is_k_large(three.complex, 6));
  CHECK(three.complex.sc_certificate() == Certificate::Disc);
  CHECK(three.subcomplexes.at("side_a").size() == 4);

  auto wheel = hex_disc(HexShape::Hexagon, 1);
  CHECK(wheel.complex.vertex_count() == 7);
  CHECK(wheel.complex.triangles().size() == 6);

  CHECK_THROWS_AS(hex_disc(HexShape::Triangle, 0), invalid_input);
}

TEST_CASE("simplex_with_facets emits the family and its expected properties") {
  for (int n : {1, 2, 3}) {
    auto inst = simplex_with_facets(n);
    CHECK(inst.complex.dimension() == n);
    CHECK(inst.subcomplexes.size() == static_cast<size_t>(n) + 1);
    CHECK(inst.complex.sc_certificate() == Certificate::Cone);
    CHECK(!inst.notes.empty());
  }
  CHECK_THROWS_AS(simplex_with_facets(0), invalid_input);
}

TEST_CASE("seven_systolic_disc: degrees and certification") {
  auto tri = seven_systolic_disc(3, 0, 0);
  CHECK(tri.complex.vertex_count() == 3);

  auto wheel = seven_systolic_disc(9, 1, 0);
  CHECK(wheel.complex.vertex_count() == 10);
  CHECK(is_k_systolic(wheel.complex, 7) == Tri::True);

  for (std::uint64_t seed : {0ULL, 5ULL}) {
    auto ball = seven_systolic_disc(7, 2, seed);
    auto disc = TriangulatedDisc::from_complex(ball.complex);
    for (VertexId v : disc.interior_vertices()) CHECK(disc.triangles_at(v) >= 7);
    CHECK(is_k_systolic(ball.complex, 7) == Tri::True);
  }

  CHECK_THROWS_AS(seven_systolic_disc(5, 1, 0), invalid_input);
  CHECK_THROWS_AS(seven_systolic_disc(4, 0, 0), invalid_input);
}

TEST_CASE("random_disc: determinism, bounds, rejection") {
  RandomDiscParams p;
  p.triangles = 18;
  p.seed = 42;
  p.k = 6;
  auto a = random_disc(p);
  auto b = random_disc(p);
  CHECK(instance_to_json(a) == instance_to_json(b));  // bit-exact
  CHECK(is_locally_k_large(a.complex, 6));
  CHECK(TriangulatedDisc::try_from_complex(a.complex));
  CHECK(a.complex.sc_certificate() == Certificate::Disc);

  // interior defects pinned to zero and no negative boundary: flat by the
  // defect characterization
  RandomDiscParams flat;
  flat.triangles = 12;
  flat.interior_defect_min = 0;
  flat.interior_defect_max = 0;
  flat.boundary_defect_min = 0;
  flat.seed = 7;
  auto f = random_disc(flat);
  CHECK(is_flat(TriangulatedDisc::from_complex(f.complex)));

  RandomDiscParams bad;
  bad.boundary_defect_max = 1;  // corners of defect 2 always exist
  CHECK_THROWS_AS(random_disc(bad), invalid_input);

  RandomDiscParams impossible;
  impossible.triangles = 30;
  impossible.interior_defect_min = 2;  // interior defect 2 needs degree 4 < flag limit
  impossible.interior_defect_max = 3;
  impossible.k = 6;
  impossible.max_attempts = 10;
  CHECK_THROWS_AS(random_disc(impossible), invalid_input);
}

TEST_CASE("instance json round trip") {
  auto inst = hex_disc(HexShape::Triangle, 3);
  inst.notes["origin"] = "unit test";
  auto text = instance_to_json(inst);
  auto back = instance_from_json(text);
  CHECK(back.complex == inst.complex);
  CHECK(back.complex.sc_certificate() == inst.complex.sc_certificate());
  CHECK(back.subcomplexes == inst.subcomplexes);
  CHECK(back.notes.at("origin") == "unit test");
  CHECK(instance_hash(back) == instance_hash(inst));
}

TEST_CASE("instance loader reports malformed input") {
  CHECK_THROWS_AS(instance_from_json("{"), invalid_input);
  CHECK_THROWS_AS(instance_from_json("{}"), invalid_input);
  CHECK_THROWS_AS(instance_from_json(R"({"vertices": 2, "maximal_simplices": [[0, "x"]]})"),
                  invalid_input);
  CHECK_THROWS_AS(instance_from_json(R"({"vertices": 2, "maximal_simplices": [[0, 5]]})"),
                  invalid_input);
  CHECK_THROWS_AS(
      instance_from_json(
          R"({"vertices": 3, "maximal_simplices": [[0,1,2]], "subcomplexes": {"s": [7]}})"),
      invalid_input);
  CHECK_THROWS_AS(
      instance_from_json(
          R"({"vertices": 3, "maximal_simplices": [[0,1,2]], "certificates": {"simply_connected": "magic"}})"),
      invalid_input);
}

TEST_CASE("surface json round trip") {
  auto X = corpus::two_triangles_shared_edge();
  auto filling = fill_cycle_minimal(X, {0, 1, 3, 2});
  REQUIRE(filling);
  auto sm = filling->as_surface_map(X);
  auto text = surface_to_json(sm);
  auto back = surface_from_json(text);
  CHECK(back.domain == sm.domain);
  CHECK(back.assignment == sm.assignment);
  CHECK(back.domain_area == sm.domain_area);
  CHECK(back.injective_area == sm.injective_area);
  CHECK_THROWS_AS(surface_from_json("{}"), invalid_input);
}

TEST_CASE("sphere generators for the corpus") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto s = stacked_sphere(6, seed);
    CHECK(TriangulatedSphere::try_from_complex(s));
  }
  auto w = TriangulatedDisc::from_complex(corpus::wheel(5));
  CHECK(TriangulatedSphere::try_from_complex(sphere_double(w)));
}
