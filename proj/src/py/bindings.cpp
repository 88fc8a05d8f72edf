#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "systolic/helly.hpp"
#include "systolic/io.hpp"

namespace py = pybind11;
using namespace systolic;

namespace {

const char* tri_str(Tri t) { return to_string(t); }

ConvexFamily make_family(const SimplicialComplex& X,
                         const std::vector<std::vector<VertexId>>& members) {
  ConvexFamily fam;
  fam.parent = &X;
  int i = 0;
  for (const auto& m : members) {
    fam.names.push_back("m" + std::to_string(i++));
    fam.members.emplace_back(X, m);
  }
  return fam;
}

}  // namespace

PYBIND11_MODULE(_systolic, m) {
  m.doc() = "combinatorial engine for systolic complexes";

  py::register_exception<invalid_input>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<no_path>(m, "NoPath", PyExc_ValueError);

  py::class_<SimplicialComplex>(m, "Complex")
      .def_static("from_maximal", &SimplicialComplex::from_maximal, py::arg("vertices"),
                  py::arg("maximal_simplices"))
      .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
      .def_property_readonly("maximal_simplices", &SimplicialComplex::maximal_simplices)
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def("contains", &SimplicialComplex::contains)
      .def("adjacent", &SimplicialComplex::adjacent)
      .def("neighbors", &SimplicialComplex::neighbors)
      .def("edges", &SimplicialComplex::edges)
      .def("all_simplices", &SimplicialComplex::all_simplices, py::arg("max_dim") = -1)
      .def("is_connected", &SimplicialComplex::is_connected)
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__repr__", [](const SimplicialComplex& X) {
        return "<Complex " + std::to_string(X.vertex_count()) + " vertices, " +
               std::to_string(X.maximal_simplices().size()) + " maximal simplices>";
      });

  py::class_<GeneratedInstance>(m, "Instance")
      .def_readwrite("complex", &GeneratedInstance::complex)
      .def_readwrite("subcomplexes", &GeneratedInstance::subcomplexes)
      .def_readwrite("notes", &GeneratedInstance::notes);

  // core operators (simplex sets in and out as sorted lists)
  auto to_set = [](const std::vector<Simplex>& v) { return SimplexSet(v.begin(), v.end()); };
  auto to_list = [](const SimplexSet& s) { return std::vector<Simplex>(s.begin(), s.end()); };
  m.def("closure", [=](const SimplicialComplex& X, const std::vector<Simplex>& S) {
    return to_list(closure(X, to_set(S)));
  });
  m.def("star", [=](const SimplicialComplex& X, const std::vector<Simplex>& S) {
    return to_list(star(X, to_set(S)));
  });
  m.def("link", [=](const SimplicialComplex& X, const std::vector<Simplex>& S) {
    return to_list(link(X, to_set(S)));
  });
  m.def("is_flag", &is_flag);
  m.def("induced_cycles_up_to", &induced_cycles_up_to);
  m.def("is_k_large", &is_k_large);
  m.def("is_locally_k_large", &is_locally_k_large);
  m.def("is_simply_connected",
        [](const SimplicialComplex& X, long long budget) {
          return std::string(tri_str(is_simply_connected(X, budget)));
        },
        py::arg("X"), py::arg("budget") = 200000);
  m.def("is_k_systolic",
        [](const SimplicialComplex& X, int k, long long budget) {
          return std::string(tri_str(is_k_systolic(X, k, budget)));
        },
        py::arg("X"), py::arg("k"), py::arg("budget") = 200000);

  // metric
  m.def("distance", &distance);
  m.def("geodesic_count", [](const SimplicialComplex& X, VertexId u, VertexId v) {
    return interval(X, u, v).geodesic_count();
  });
  m.def("geodesics",
        [](const SimplicialComplex& X, VertexId u, VertexId v, size_t limit) {
          return interval(X, u, v).geodesics(limit);
        },
        py::arg("X"), py::arg("u"), py::arg("v"), py::arg("limit") = 64);
  m.def("is_convex", [](const SimplicialComplex& X, const std::vector<VertexId>& verts) {
    return is_convex(Subcomplex(X, verts));
  });
  m.def("is_geodesically_convex",
        [](const SimplicialComplex& X, const std::vector<VertexId>& verts) {
          return is_geodesically_convex(Subcomplex(X, verts));
        });
  m.def("convex_hull", [](const SimplicialComplex& X, const std::vector<VertexId>& seed) {
    return convex_hull(X, seed).vertices();
  });

  // discs and fillings
  m.def("disc_defects", [](const SimplicialComplex& X) {
    return defects(TriangulatedDisc::from_complex(X)).defect;
  });
  m.def("gauss_bonnet", [](const SimplicialComplex& X) {
    if (auto s = TriangulatedSphere::try_from_complex(X)) return gauss_bonnet(*s);
    return gauss_bonnet(TriangulatedDisc::from_complex(X));
  });
  m.def("is_flat",
        [](const SimplicialComplex& X) { return is_flat(TriangulatedDisc::from_complex(X)); });
  m.def("hex_embedding", [](const SimplicialComplex& X) {
    auto emb = embed_in_hex_plane(TriangulatedDisc::from_complex(X));
    std::optional<std::map<VertexId, std::pair<int, int>>> out;
    if (emb) {
      out.emplace();
      for (const auto& [v, c] : *emb) (*out)[v] = {c.a, c.b};
    }
    return out;
  });
  m.def("fill_cycle_minimal",
        [](const SimplicialComplex& X, const std::vector<VertexId>& cycle, int cap)
            -> std::optional<py::dict> {
          auto f = fill_cycle_minimal(X, cycle, cap);
          if (!f) return std::nullopt;
          py::dict d;
          d["area"] = f->domain_area;
          d["injective_area"] = f->injective_area;
          d["assignment"] = f->assignment;
          d["domain"] = f->disc.complex();
          d["flat"] = is_flat(f->disc);
          return d;
        },
        py::arg("X"), py::arg("cycle"), py::arg("area_cap") = 24);
  m.def("triangle_shape",
        [](const SimplicialComplex& X, VertexId a, VertexId b, VertexId c) {
          auto rep = triangle_shape(X, a, b, c);
          py::dict d;
          d["shape"] = std::string(to_string(rep.shape));
          d["core_area"] = rep.core_area;
          d["single_simplex_core"] = rep.single_simplex_core;
          d["core_side"] = rep.core_side;
          return d;
        });
  m.def("check_simple_digon_flat",
        [](const SimplicialComplex& X, const std::vector<VertexId>& g0,
           const std::vector<VertexId>& g1) { return check_simple_digon_flat(X, g0, g1); });

  // helly
  m.def("find_witness",
        [](const SimplicialComplex& X, const std::vector<std::vector<VertexId>>& members,
           int max_dim) -> std::optional<Simplex> {
          auto fam = make_family(X, members);
          auto w = find_witness(fam, max_dim);
          if (!w) return std::nullopt;
          return w->simplex;
        });
  m.def("search_counterexample", [](int max_side) -> std::optional<py::dict> {
    auto res = search_counterexample(max_side);
    if (!res.found) return std::nullopt;
    py::dict d;
    d["side"] = res.side;
    d["instance"] = res.instance;
    return d;
  });

  // generators and io
  m.def("hex_disc",
        [](const std::string& shape, int a, int b) {
          if (shape == "triangle") return hex_disc(HexShape::Triangle, a);
          if (shape == "hexagon") return hex_disc(HexShape::Hexagon, a);
          if (shape == "parallelogram") return hex_disc(HexShape::Parallelogram, a, b);
          throw invalid_input("unknown hex shape: " + shape);
        },
        py::arg("shape"), py::arg("a"), py::arg("b") = 0);
  m.def("simplex_with_facets", &simplex_with_facets);
  m.def("seven_systolic_disc", &seven_systolic_disc, py::arg("boundary"), py::arg("depth"),
        py::arg("seed") = 0);
  m.def("random_disc",
        [](int triangles, int k, std::uint64_t seed) {
          RandomDiscParams p;
          p.triangles = triangles;
          p.k = k;
          p.seed = seed;
          return random_disc(p);
        },
        py::arg("triangles"), py::arg("k") = 0, py::arg("seed") = 0);
  m.def("instance_to_json", &instance_to_json);
  m.def("instance_from_json", &instance_from_json);
  m.def("load_instance", &load_instance);
  m.def("save_instance", &save_instance);
}
