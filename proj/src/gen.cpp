#include "systolic/gen.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace systolic {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void attach_disc_certificate(GeneratedInstance& inst) {
  if (TriangulatedDisc::try_from_complex(inst.complex))
    inst.complex.set_sc_certificate(Certificate::Disc);
}

}  // namespace

std::vector<HexCoord> hex_region(HexShape shape, int size_a, int size_b) {
  std::vector<HexCoord> out;
  switch (shape) {
    case HexShape::Triangle:
      if (size_a < 1) throw invalid_input("triangle side must be positive");
      for (int a = 0; a <= size_a; ++a)
        for (int b = 0; a + b <= size_a; ++b) out.push_back({a, b});
      break;
    case HexShape::Hexagon:
      if (size_a < 0) throw invalid_input("hexagon radius must be nonnegative");
      for (int a = -size_a; a <= size_a; ++a)
        for (int b = -size_a; b <= size_a; ++b)
          if (hex_distance({a, b}, {0, 0}) <= size_a) out.push_back({a, b});
      break;
    case HexShape::Parallelogram:
      if (size_a < 1 || size_b < 1) throw invalid_input("parallelogram sides must be positive");
      for (int a = 0; a <= size_a; ++a)
        for (int b = 0; b <= size_b; ++b) out.push_back({a, b});
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeneratedInstance hex_patch(const std::vector<HexCoord>& coords) {
  std::vector<HexCoord> pts(coords);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw invalid_input("empty lattice region");
  std::map<HexCoord, int> index;
  for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
  auto at = [&](HexCoord c) {
    auto it = index.find(c);
    return it == index.end() ? -1 : it->second;
  };

  std::vector<Simplex> simplices;
  for (const auto& p : pts) {
    simplices.push_back({index[p]});
    for (const auto& s : hex_steps()) {
      HexCoord q{p.a + s.a, p.b + s.b};
      int j = at(q);
      if (j >= 0 && index[p] < j) simplices.push_back(normalized_simplex({index[p], j}));
    }
  }
  // lattice triangles anchored anywhere: scan a one-step-padded box so that
  // down triangles whose anchor lies outside the region still appear
  int lo_a = pts.front().a, hi_a = pts.front().a, lo_b = pts.front().b, hi_b = pts.front().b;
  for (const auto& p : pts) {
    lo_a = std::min(lo_a, p.a);
    hi_a = std::max(hi_a, p.a);
    lo_b = std::min(lo_b, p.b);
    hi_b = std::max(hi_b, p.b);
  }
  for (int a = lo_a - 1; a <= hi_a; ++a)
    for (int b = lo_b - 1; b <= hi_b; ++b) {
      int self = at({a, b}), up1 = at({a + 1, b}), up2 = at({a, b + 1}), dn = at({a + 1, b + 1});
      if (self >= 0 && up1 >= 0 && up2 >= 0)
        simplices.push_back(normalized_simplex({self, up1, up2}));
      if (up1 >= 0 && up2 >= 0 && dn >= 0)
        simplices.push_back(normalized_simplex({up1, up2, dn}));
    }
  GeneratedInstance inst;
  inst.complex = SimplicialComplex::from_simplices(std::move(simplices), static_cast<int>(pts.size()));
  attach_disc_certificate(inst);
  return inst;
}

GeneratedInstance hex_disc(HexShape shape, int size_a, int size_b) {
  auto pts = hex_region(shape, size_a, size_b);
  GeneratedInstance inst = hex_patch(pts);
  if (shape == HexShape::Triangle) {
    std::map<HexCoord, int> index;
    for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
    std::vector<VertexId> sa, sb, sc;
    for (const auto& p : pts) {
      if (p.b == 0) sa.push_back(index[p]);
      if (p.a == 0) sb.push_back(index[p]);
      if (p.a + p.b == size_a) sc.push_back(index[p]);
    }
    inst.subcomplexes["side_a"] = sa;
    inst.subcomplexes["side_b"] = sb;
    inst.subcomplexes["side_c"] = sc;
  }
  return inst;
}

GeneratedInstance simplex_with_facets(int n) {
  if (n < 1) throw invalid_input("simplex dimension must be at least 1");
  Simplex top;
  for (int v = 0; v <= n; ++v) top.push_back(v);
  GeneratedInstance inst;
  inst.complex = SimplicialComplex::from_maximal(n + 1, {top});
  inst.complex.set_sc_certificate(Certificate::Cone);
  for (int i = 0; i <= n; ++i) {
    std::vector<VertexId> facet;
    for (int v = 0; v <= n; ++v)
      if (v != i) facet.push_back(v);
    inst.subcomplexes["facet_" + std::to_string(i)] = facet;
  }
  inst.notes["family"] =
      "every subfamily of cardinality " + std::to_string(n) +
      " intersects; the whole facet family has empty intersection";
  return inst;
}

GeneratedInstance seven_systolic_disc(int boundary, int depth, std::uint64_t seed) {
  if (depth == 0) {
    if (boundary != 3) throw invalid_input("depth 0 requires boundary length 3");
    GeneratedInstance inst;
    inst.complex = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
    inst.complex.set_sc_certificate(Certificate::Disc);
    return inst;
  }
  if (boundary < 7 || depth < 1) throw invalid_input("need boundary >= 7 and depth >= 1");

  std::vector<Simplex> triangles;
  std::vector<int> tri_count;  // per vertex
  int next_vertex = 0;

  // depth 1: wheel
  int center = next_vertex++;
  std::vector<VertexId> ring;
  for (int i = 0; i < boundary; ++i) ring.push_back(next_vertex++);
  tri_count.assign(static_cast<size_t>(next_vertex), 0);
  for (int i = 0; i < boundary; ++i) {
    VertexId a = ring[static_cast<size_t>(i)];
    VertexId b = ring[static_cast<size_t>((i + 1) % boundary)];
    triangles.push_back(normalized_simplex({center, a, b}));
    tri_count[static_cast<size_t>(center)]++;
    tri_count[static_cast<size_t>(a)]++;
    tri_count[static_cast<size_t>(b)]++;
  }

  // Each further ring gives every current boundary vertex two strip
  // triangles plus a fan; fan size keeps its final count >= 7.
  for (int ring_idx = 1; ring_idx < depth; ++ring_idx) {
    const int m = static_cast<int>(ring.size());
    std::vector<int> fan(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      int need = 4 - tri_count[static_cast<size_t>(ring[static_cast<size_t>(i)])];
      int extra = static_cast<int>(splitmix64(seed ^ (static_cast<std::uint64_t>(ring_idx) << 32) ^
                                              static_cast<std::uint64_t>(i)) %
                                   2);
      fan[static_cast<size_t>(i)] = std::max(0, need) + extra;
    }
    // ring layout: [fan of v_0], s_0, [fan of v_1], s_1, ...
    std::vector<VertexId> new_ring;
    std::vector<VertexId> apex(static_cast<size_t>(m));
    std::vector<std::vector<VertexId>> fans(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      for (int f = 0; f < fan[static_cast<size_t>(i)]; ++f) {
        fans[static_cast<size_t>(i)].push_back(next_vertex);
        new_ring.push_back(next_vertex++);
      }
      apex[static_cast<size_t>(i)] = next_vertex;
      new_ring.push_back(next_vertex++);
    }
    tri_count.resize(static_cast<size_t>(next_vertex), 0);
    auto add_triangle = [&](VertexId a, VertexId b, VertexId c) {
      triangles.push_back(normalized_simplex({a, b, c}));
      tri_count[static_cast<size_t>(a)]++;
      tri_count[static_cast<size_t>(b)]++;
      tri_count[static_cast<size_t>(c)]++;
    };
    for (int i = 0; i < m; ++i) {
      VertexId v = ring[static_cast<size_t>(i)];
      VertexId vn = ring[static_cast<size_t>((i + 1) % m)];
      add_triangle(v, vn, apex[static_cast<size_t>(i)]);
      // run around v: apex_{i-1}, fan(v_i)..., apex_i
      std::vector<VertexId> run;
      run.push_back(apex[static_cast<size_t>((i + m - 1) % m)]);
      for (VertexId f : fans[static_cast<size_t>(i)]) run.push_back(f);
      run.push_back(apex[static_cast<size_t>(i)]);
      for (size_t j = 0; j + 1 < run.size(); ++j) add_triangle(v, run[j], run[j + 1]);
    }
    ring = std::move(new_ring);
  }

  GeneratedInstance inst;
  inst.complex = SimplicialComplex::from_simplices(std::move(triangles), next_vertex);
  attach_disc_certificate(inst);
  return inst;
}

GeneratedInstance random_disc(const RandomDiscParams& params) {
  if (params.triangles < 1) throw invalid_input("need at least one triangle");
  if (params.interior_defect_min > params.interior_defect_max ||
      params.boundary_defect_min > params.boundary_defect_max)
    throw invalid_input("empty defect bounds");
  if (params.boundary_defect_max < 2)
    throw invalid_input("infeasible bounds: a disc always has boundary vertices of defect 2");

  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    std::mt19937_64 rng(splitmix64(params.seed + 0x1000ULL * static_cast<std::uint64_t>(attempt)));

    std::vector<Simplex> triangles{{0, 1, 2}};
    std::vector<VertexId> bound{0, 1, 2};
    std::vector<int> tri_count{1, 1, 1};
    std::set<std::pair<VertexId, VertexId>> edges{{0, 1}, {0, 2}, {1, 2}};
    int next_vertex = 3;
    auto adjacent = [&](VertexId u, VertexId v) {
      return edges.count({std::min(u, v), std::max(u, v)}) != 0;
    };

    while (static_cast<int>(triangles.size()) < params.triangles) {
      struct Move {
        bool ear;
        int pos;
      };
      // moves that keep boundary defects inside the requested band get extra
      // weight, so tight bounds stay reachable without losing full support
      std::vector<Move> moves;
      const int blen = static_cast<int>(bound.size());
      for (int i = 0; i < blen; ++i) {
        VertexId u = bound[static_cast<size_t>(i)];
        VertexId v = bound[static_cast<size_t>((i + 1) % blen)];
        int du = 3 - (tri_count[static_cast<size_t>(u)] + 1);
        int dv = 3 - (tri_count[static_cast<size_t>(v)] + 1);
        bool gentle = du >= params.boundary_defect_min && dv >= params.boundary_defect_min;
        for (int w = 0; w < (gentle ? 4 : 1); ++w) moves.push_back({false, i});
      }
      if (blen >= 4) {
        for (int i = 0; i < blen; ++i) {
          VertexId u = bound[static_cast<size_t>((i + blen - 1) % blen)];
          VertexId v = bound[static_cast<size_t>(i)];
          VertexId w = bound[static_cast<size_t>((i + 1) % blen)];
          int chi = tri_count[static_cast<size_t>(v)] + 1;
          int defect = 6 - chi;
          if (u != w && !adjacent(u, w) && defect >= params.interior_defect_min &&
              defect <= params.interior_defect_max)
            for (int rep = 0; rep < 6; ++rep) moves.push_back({true, i});
        }
      }
      Move mv = moves[std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng)];
      if (!mv.ear) {
        VertexId u = bound[static_cast<size_t>(mv.pos)];
        VertexId v = bound[static_cast<size_t>((mv.pos + 1) % bound.size())];
        VertexId n = next_vertex++;
        triangles.push_back(normalized_simplex({u, v, n}));
        tri_count.push_back(1);
        tri_count[static_cast<size_t>(u)]++;
        tri_count[static_cast<size_t>(v)]++;
        edges.insert({std::min(u, n), std::max(u, n)});
        edges.insert({std::min(v, n), std::max(v, n)});
        bound.insert(bound.begin() + mv.pos + 1, n);
      } else {
        const int bl = static_cast<int>(bound.size());
        VertexId u = bound[static_cast<size_t>((mv.pos + bl - 1) % bl)];
        VertexId v = bound[static_cast<size_t>(mv.pos)];
        VertexId w = bound[static_cast<size_t>((mv.pos + 1) % bl)];
        triangles.push_back(normalized_simplex({u, v, w}));
        tri_count[static_cast<size_t>(u)]++;
        tri_count[static_cast<size_t>(v)]++;
        tri_count[static_cast<size_t>(w)]++;
        edges.insert({std::min(u, w), std::max(u, w)});
        bound.erase(bound.begin() + mv.pos);
      }
    }

    auto complex = SimplicialComplex::from_simplices(triangles, next_vertex);
    auto disc = TriangulatedDisc::try_from_complex(complex);
    if (!disc) continue;
    auto dv = defects(*disc);
    bool ok = true;
    for (int v = 0; v < complex.vertex_count() && ok; ++v) {
      int d = dv.defect[static_cast<size_t>(v)];
      if (disc->is_interior(v))
        ok = d >= params.interior_defect_min && d <= params.interior_defect_max;
      else
        ok = d >= params.boundary_defect_min && d <= params.boundary_defect_max;
    }
    if (!ok) continue;
    if (params.k >= 4 && !is_locally_k_large(complex, params.k)) continue;

    GeneratedInstance inst;
    inst.complex = std::move(complex);
    inst.complex.set_sc_certificate(Certificate::Disc);
    return inst;
  }
  throw invalid_input("random_disc: bounds look infeasible (attempt budget exhausted)");
}

SimplicialComplex sphere_double(const TriangulatedDisc& D) {
  const auto& X = D.complex();
  std::map<VertexId, VertexId> mirror;
  int next = X.vertex_count();
  for (VertexId v : D.interior_vertices()) mirror[v] = next++;
  std::vector<Simplex> triangles = X.maximal_simplices();
  for (const auto& t : X.maximal_simplices()) {
    Simplex copy;
    for (VertexId v : t) copy.push_back(D.is_interior(v) ? mirror.at(v) : v);
    triangles.push_back(normalized_simplex(std::move(copy)));
  }
  return SimplicialComplex::from_simplices(std::move(triangles), next);
}

SimplicialComplex stacked_sphere(int extra_vertices, std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  std::vector<Simplex> triangles{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  int next = 4;
  for (int i = 0; i < extra_vertices; ++i) {
    size_t pick = std::uniform_int_distribution<size_t>(0, triangles.size() - 1)(rng);
    Simplex t = triangles[pick];
    triangles.erase(triangles.begin() + static_cast<std::ptrdiff_t>(pick));
    VertexId n = next++;
    triangles.push_back(normalized_simplex({t[0], t[1], n}));
    triangles.push_back(normalized_simplex({t[0], t[2], n}));
    triangles.push_back(normalized_simplex({t[1], t[2], n}));
  }
  return SimplicialComplex::from_simplices(std::move(triangles), next);
}

}  // namespace systolic
