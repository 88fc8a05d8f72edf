#include "systolic/surface.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace systolic {

const char* to_string(TriangleShape s) {
  switch (s) {
    case TriangleShape::Segment: return "segment";
    case TriangleShape::Tripod: return "tripod";
    default: return "horned-triangle";
  }
}

const char* to_string(DigonShape s) {
  switch (s) {
    case DigonShape::Segment: return "segment";
    case DigonShape::SimpleDigon: return "simple-digon";
    default: return "chain";
  }
}

namespace {

using Path = std::vector<VertexId>;

bool is_geodesic(const SimplicialComplex& X, const Path& p) {
  if (p.empty()) return false;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (!X.adjacent(p[i], p[i + 1])) return false;
  return distance(X, p.front(), p.back()) == static_cast<int>(p.size()) - 1;
}

Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

Path lex_min_geodesic(const SimplicialComplex& X, VertexId u, VertexId v) {
  auto gs = interval(X, u, v).geodesics(1);
  return gs.front();
}

// length of the common prefix (in edges) of two paths sharing their start
int common_prefix(const Path& a, const Path& b) {
  size_t n = std::min(a.size(), b.size());
  size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return static_cast<int>(i) - 1;
}

bool intersection_is_prefix(const Path& a, const Path& b, int prefix) {
  std::set<VertexId> sa(a.begin(), a.end());
  std::set<VertexId> sb(b.begin(), b.end());
  std::vector<VertexId> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  if (common.size() != static_cast<size_t>(prefix) + 1) return false;
  for (int i = 0; i <= prefix; ++i)
    if (!std::count(common.begin(), common.end(), a[static_cast<size_t>(i)])) return false;
  return true;
}

// path complex (edges only) over existing ids
SimplicialComplex path_complex(const std::vector<Path>& paths, int vertex_count) {
  std::vector<Simplex> simplices;
  for (const auto& p : paths) {
    if (p.size() == 1) simplices.push_back({p[0]});
    for (size_t i = 0; i + 1 < p.size(); ++i) simplices.push_back(normalized_simplex({p[i], p[i + 1]}));
  }
  return SimplicialComplex::from_simplices(std::move(simplices), vertex_count);
}

}  // namespace

// ---- triangular surfaces ----

namespace {

struct DomainBuilder {
  std::vector<VertexId> assignment;
  VertexId fresh(VertexId image) {
    assignment.push_back(image);
    return static_cast<VertexId>(assignment.size() - 1);
  }
  Path fresh_path(const Path& images) {
    Path out;
    for (VertexId v : images) out.push_back(fresh(v));
    return out;
  }
};

TriangularSurface make_segment_surface(const SimplicialComplex& X, VertexId mid, VertexId a,
                                       VertexId b, const std::array<VertexId, 3>& corners_in) {
  // mid lies on a geodesic from a to b
  Path first = lex_min_geodesic(X, a, mid);
  Path second = lex_min_geodesic(X, mid, b);
  Path image(first);
  image.insert(image.end(), second.begin() + 1, second.end());

  TriangularSurface out;
  out.shape = TriangleShape::Segment;
  out.corners = {corners_in[0], corners_in[1], corners_in[2]};

  DomainBuilder dom;
  Path domain_path = dom.fresh_path(image);
  out.surface.domain = path_complex({domain_path}, static_cast<int>(dom.assignment.size()));
  out.surface.assignment = dom.assignment;

  auto pos_of = [&](VertexId target, VertexId hint_mid) -> VertexId {
    // corners may coincide with mid; prefer the exact image position
    (void)hint_mid;
    for (size_t i = 0; i < image.size(); ++i)
      if (image[i] == target) return domain_path[i];
    return domain_path.front();
  };
  for (int k = 0; k < 3; ++k) {
    VertexId t = pos_of(out.corners[static_cast<size_t>(k)], mid);
    out.tops.push_back(t);
    out.bottoms.push_back(t);
    out.horn_paths.push_back({t});
  }
  for (int k = 0; k < 3; ++k) {
    // walk along the domain path between the corner positions
    VertexId from = out.tops[static_cast<size_t>(k)];
    VertexId to = out.tops[static_cast<size_t>((k + 1) % 3)];
    size_t i = 0, j = 0;
    for (size_t p = 0; p < domain_path.size(); ++p) {
      if (domain_path[p] == from) i = p;
      if (domain_path[p] == to) j = p;
    }
    Path side;
    if (i <= j)
      side.assign(domain_path.begin() + static_cast<std::ptrdiff_t>(i),
                  domain_path.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    else {
      side.assign(domain_path.begin() + static_cast<std::ptrdiff_t>(j),
                  domain_path.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      std::reverse(side.begin(), side.end());
    }
    out.side_paths.push_back(side);
    Path geo;
    for (VertexId d : side) geo.push_back(dom.assignment[static_cast<size_t>(d)]);
    out.side_geodesics.push_back(geo);
  }
  return out;
}

std::optional<TriangularSurface> try_tripod(const SimplicialComplex& X,
                                            const std::array<VertexId, 3>& c, size_t leg_limit) {
  std::array<std::vector<int>, 3> dist;
  for (int k = 0; k < 3; ++k) dist[static_cast<size_t>(k)] = distances_from(X, c[static_cast<size_t>(k)]);
  int d01 = dist[0][static_cast<size_t>(c[1])];
  int d12 = dist[1][static_cast<size_t>(c[2])];
  int d02 = dist[0][static_cast<size_t>(c[2])];
  for (VertexId m = 0; m < X.vertex_count(); ++m) {
    if (dist[0][static_cast<size_t>(m)] < 0) continue;
    if (dist[0][static_cast<size_t>(m)] + dist[1][static_cast<size_t>(m)] != d01) continue;
    if (dist[1][static_cast<size_t>(m)] + dist[2][static_cast<size_t>(m)] != d12) continue;
    if (dist[0][static_cast<size_t>(m)] + dist[2][static_cast<size_t>(m)] != d02) continue;
    // legs must meet only at the median
    auto legs0 = interval(X, m, c[0]).geodesics(leg_limit);
    auto legs1 = interval(X, m, c[1]).geodesics(leg_limit);
    auto legs2 = interval(X, m, c[2]).geodesics(leg_limit);
    for (const auto& l0 : legs0)
      for (const auto& l1 : legs1)
        for (const auto& l2 : legs2) {
          auto disjoint = [&](const Path& a, const Path& b) {
            std::set<VertexId> sa(a.begin() + 1, a.end());
            for (size_t i = 1; i < b.size(); ++i)
              if (sa.count(b[i])) return false;
            return true;
          };
          if (!disjoint(l0, l1) || !disjoint(l0, l2) || !disjoint(l1, l2)) continue;

          TriangularSurface out;
          out.shape = TriangleShape::Tripod;
          out.corners = {c[0], c[1], c[2]};
          DomainBuilder dom;
          VertexId center = dom.fresh(m);
          std::array<Path, 3> dlegs;
          for (int k = 0; k < 3; ++k) {
            const Path& leg = k == 0 ? l0 : (k == 1 ? l1 : l2);
            Path dp{center};
            for (size_t i = 1; i < leg.size(); ++i) dp.push_back(dom.fresh(leg[i]));
            dlegs[static_cast<size_t>(k)] = dp;
          }
          out.surface.domain =
              path_complex({dlegs[0], dlegs[1], dlegs[2]}, static_cast<int>(dom.assignment.size()));
          out.surface.assignment = dom.assignment;
          for (int k = 0; k < 3; ++k) {
            out.tops.push_back(dlegs[static_cast<size_t>(k)].back());
            out.bottoms.push_back(dlegs[static_cast<size_t>(k)].back());
            out.horn_paths.push_back({dlegs[static_cast<size_t>(k)].back()});
          }
          for (int k = 0; k < 3; ++k) {
            Path side = reversed(dlegs[static_cast<size_t>(k)]);
            const Path& next = dlegs[static_cast<size_t>((k + 1) % 3)];
            side.insert(side.end(), next.begin() + 1, next.end());
            out.side_paths.push_back(side);
            Path geo;
            for (VertexId d : side) geo.push_back(dom.assignment[static_cast<size_t>(d)]);
            out.side_geodesics.push_back(geo);
          }
          return out;
        }
  }
  return std::nullopt;
}

// Core shape of a filling: flat, three defect-2 boundary corners equally
// spaced, all other boundary defects zero.
void classify_core(const Filling& core, TriangularSurface& out) {
  out.core_area = core.domain_area;
  out.core_single_simplex = core.domain_area == 1;
  out.core_equilateral = false;
  out.core_side = 0;
  const auto& disc = core.disc;
  auto dv = defects(disc);
  for (VertexId v : disc.interior_vertices())
    if (dv.defect[static_cast<size_t>(v)] != 0) return;
  const auto& cycle = disc.boundary_cycle();
  std::vector<size_t> corners;
  for (size_t i = 0; i < cycle.size(); ++i) {
    int d = dv.defect[static_cast<size_t>(cycle[i])];
    if (d == 2)
      corners.push_back(i);
    else if (d != 0)
      return;
  }
  if (corners.size() != 3) return;
  size_t g1 = corners[1] - corners[0];
  size_t g2 = corners[2] - corners[1];
  size_t g3 = cycle.size() - corners[2] + corners[0];
  if (g1 == g2 && g2 == g3) {
    out.core_equilateral = true;
    out.core_side = static_cast<int>(g1);
  }
}

}  // namespace

TriangularSurface triangular_surface(const SimplicialComplex& X, VertexId v0, VertexId v1,
                                     VertexId v2, const TriangularSearchOptions& opt) {
  if (v0 == v1 || v0 == v2 || v1 == v2) throw invalid_input("triangular surface needs distinct vertices");
  std::array<VertexId, 3> c{v0, v1, v2};
  int d01 = distance(X, v0, v1), d12 = distance(X, v1, v2), d02 = distance(X, v0, v2);

  // one point on a geodesic between the other two
  if (d02 + d12 == d01) return make_segment_surface(X, v2, v0, v1, c);
  if (d01 + d12 == d02) return make_segment_surface(X, v1, v0, v2, c);
  if (d01 + d02 == d12) return make_segment_surface(X, v0, v1, v2, c);

  if (auto tripod = try_tripod(X, c, std::min<size_t>(opt.geodesic_limit, 16))) return *tripod;

  // general case: geodesic triangles with horn prefixes, minimal filling
  std::array<std::vector<Path>, 3> sides;  // side k joins corner k and k+1
  sides[0] = interval(X, v0, v1).geodesics(opt.geodesic_limit);
  sides[1] = interval(X, v1, v2).geodesics(opt.geodesic_limit);
  sides[2] = interval(X, v2, v0).geodesics(opt.geodesic_limit);

  FillContext ctx(X, opt.area_cap);
  struct Best {
    int area = 0, perimeter = 0;
    std::vector<VertexId> cycle;
    std::array<int, 3> prefix{};
    std::array<Path, 3> geos;
    Filling filling;
    bool set = false;
  } best;

  for (const auto& g0 : sides[0])
    for (const auto& g1 : sides[1])
      for (const auto& g2 : sides[2]) {
        std::array<const Path*, 3> g{&g0, &g1, &g2};
        // prefix at corner k between side k (from v_k) and side k-1 (reversed)
        std::array<int, 3> pre{};
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k) {
          Path from_k = *g[static_cast<size_t>(k)];
          Path prev = reversed(*g[static_cast<size_t>((k + 2) % 3)]);
          int p = common_prefix(from_k, prev);
          if (p < 0 || !intersection_is_prefix(from_k, prev, p)) ok = false;
          pre[static_cast<size_t>(k)] = p;
        }
        if (!ok) continue;
        std::array<Path, 3> reduced;
        for (int k = 0; k < 3 && ok; ++k) {
          const Path& side = *g[static_cast<size_t>(k)];
          int from = pre[static_cast<size_t>(k)];
          int to = static_cast<int>(side.size()) - 1 - pre[static_cast<size_t>((k + 1) % 3)];
          if (from > to) { ok = false; break; }
          reduced[static_cast<size_t>(k)].assign(side.begin() + from, side.begin() + to + 1);
        }
        if (!ok) continue;
        std::vector<VertexId> cycle(reduced[0]);
        cycle.insert(cycle.end(), reduced[1].begin() + 1, reduced[1].end());
        cycle.insert(cycle.end(), reduced[2].begin() + 1, reduced[2].end());
        if (cycle.size() < 4 || cycle.front() != cycle.back()) continue;
        cycle.pop_back();
        std::set<VertexId> uniq(cycle.begin(), cycle.end());
        if (uniq.size() != cycle.size() || cycle.size() < 3) continue;

        auto filling = ctx.fill(cycle);
        if (!filling) continue;
        int perimeter = static_cast<int>(cycle.size());
        if (!best.set || filling->domain_area < best.area ||
            (filling->domain_area == best.area &&
             (perimeter < best.perimeter || (perimeter == best.perimeter && cycle < best.cycle)))) {
          best = {filling->domain_area, perimeter, cycle, pre, {g0, g1, g2}, *filling, true};
        }
      }

  if (!best.set)
    throw std::runtime_error("no admissible geodesic triangle within the search caps");

  // assemble core + horns
  TriangularSurface out;
  out.shape = TriangleShape::HornedTriangle;
  out.corners = {v0, v1, v2};
  out.reduced_cycle = best.cycle;
  classify_core(best.filling, out);

  DomainBuilder dom;
  for (VertexId img : best.filling.assignment) dom.fresh(img);
  std::vector<Simplex> simplices = best.filling.disc.complex().maximal_simplices();

  // cycle offsets of the trimmed corners x'_k
  std::array<int, 3> offset{};
  offset[0] = 0;
  offset[1] = static_cast<int>(best.geos[0].size()) - 1 - best.prefix[0] - best.prefix[1];
  offset[2] = offset[1] + static_cast<int>(best.geos[1].size()) - 1 - best.prefix[1] - best.prefix[2];

  std::array<Path, 3> horns;  // domain paths top -> bottom
  for (int k = 0; k < 3; ++k) {
    VertexId bottom = offset[static_cast<size_t>(k)];
    Path horn{bottom};
    // horn images run from x'_k back up to the corner v_k
    const Path& side = best.geos[static_cast<size_t>(k)];
    for (int i = best.prefix[static_cast<size_t>(k)] - 1; i >= 0; --i) {
      VertexId nv = dom.fresh(side[static_cast<size_t>(i)]);
      simplices.push_back(normalized_simplex({horn.back(), nv}));
      horn.push_back(nv);
    }
    std::reverse(horn.begin(), horn.end());  // now top -> bottom
    horns[static_cast<size_t>(k)] = horn;
    out.tops.push_back(horn.front());
    out.bottoms.push_back(horn.back());
    out.horn_paths.push_back(horn);
  }

  out.surface.domain =
      SimplicialComplex::from_simplices(std::move(simplices), static_cast<int>(dom.assignment.size()));
  out.surface.assignment = dom.assignment;
  out.surface.domain_area = best.filling.domain_area;
  out.surface.injective_area = best.filling.injective_area;

  const int L = static_cast<int>(best.cycle.size());
  for (int k = 0; k < 3; ++k) {
    Path side = horns[static_cast<size_t>(k)];  // top -> bottom = x'_k
    int from = offset[static_cast<size_t>(k)];
    int to = offset[static_cast<size_t>((k + 1) % 3)];
    if (k == 2) to = L;
    for (int i = from + 1; i <= to; ++i) side.push_back(i % L);
    const Path& nh = horns[static_cast<size_t>((k + 1) % 3)];
    for (size_t i = nh.size() - 1; i-- > 0;) side.push_back(nh[i]);
    out.side_paths.push_back(side);
    Path geo;
    for (VertexId d : side) geo.push_back(dom.assignment[static_cast<size_t>(d)]);
    out.side_geodesics.push_back(geo);
  }
  return out;
}

// ---- digonal surfaces ----

DigonalSurface digonal_surface(const SimplicialComplex& X, const Path& g0, const Path& g1,
                               int area_cap) {
  if (g0.empty() || g1.empty() || g0.front() != g1.front() || g0.back() != g1.back())
    throw invalid_input("digonal surface needs geodesics sharing both endpoints");
  if (!is_geodesic(X, g0) || !is_geodesic(X, g1)) throw invalid_input("paths are not geodesics");
  if (g0.size() != g1.size()) throw invalid_input("geodesics of unequal length share endpoints");

  const int d = static_cast<int>(g0.size()) - 1;
  DigonalSurface out;
  for (int i = 0; i <= d; ++i)
    if (g0[static_cast<size_t>(i)] == g1[static_cast<size_t>(i)])
      out.cuts.push_back(g0[static_cast<size_t>(i)]);

  std::vector<int> equal_pos;
  for (int i = 0; i <= d; ++i)
    if (g0[static_cast<size_t>(i)] == g1[static_cast<size_t>(i)]) equal_pos.push_back(i);

  FillContext ctx(X, area_cap);
  size_t run_start = 0;
  for (size_t e = 0; e + 1 <= equal_pos.size(); ++e) {
    bool run_continues = e + 1 < equal_pos.size() && equal_pos[e + 1] == equal_pos[e] + 1;
    if (run_continues) continue;
    // close the current run [run_start..e]
    if (e > run_start) {
      DigonPiece piece;
      piece.is_segment = true;
      int a = equal_pos[run_start], b = equal_pos[e];
      piece.top.assign(g0.begin() + a, g0.begin() + b + 1);
      piece.bottom = piece.top;
      out.pieces.push_back(std::move(piece));
    }
    if (e + 1 < equal_pos.size()) {
      // digon between this run's end and the next equal position
      int a = equal_pos[e], b = equal_pos[e + 1];
      DigonPiece piece;
      piece.is_segment = false;
      piece.top.assign(g0.begin() + a, g0.begin() + b + 1);
      piece.bottom.assign(g1.begin() + a, g1.begin() + b + 1);
      std::vector<VertexId> cycle(piece.top);
      for (int i = b - 1; i > a; --i) cycle.push_back(g1[static_cast<size_t>(i)]);
      auto filling = ctx.fill(cycle);
      if (!filling)
        throw std::runtime_error("digon piece exceeded the filling area cap");
      if (!is_flat(filling->disc)) out.all_pieces_flat = false;
      piece.filling = std::move(filling);
      out.pieces.push_back(std::move(piece));
      run_start = e + 1;
    }
  }

  size_t digons = 0, segments = 0;
  for (const auto& p : out.pieces) (p.is_segment ? segments : digons)++;
  out.shape = digons == 0 ? DigonShape::Segment
                          : (digons == 1 && segments == 0 ? DigonShape::SimpleDigon : DigonShape::Chain);

  // chain domain: pieces share exactly their cut vertices
  DomainBuilder dom;
  std::vector<Simplex> simplices;
  std::map<int, VertexId> cut_dom;  // position -> domain id
  for (int i : equal_pos) cut_dom[i] = -1;
  auto dom_at_cut = [&](int pos) {
    auto& v = cut_dom.at(pos);
    if (v == -1) v = dom.fresh(g0[static_cast<size_t>(pos)]);
    return v;
  };
  int cursor = 0;
  for (const auto& piece : out.pieces) {
    int a = cursor;
    int b = a + static_cast<int>(piece.top.size()) - 1;
    cursor = b;
    VertexId da = dom_at_cut(a), db = dom_at_cut(b);
    if (piece.is_segment) {
      Path p{da};
      for (size_t i = 1; i + 1 < piece.top.size(); ++i) p.push_back(dom.fresh(piece.top[i]));
      p.push_back(db);
      if (p.size() == 1) simplices.push_back({p[0]});
      for (size_t i = 0; i + 1 < p.size(); ++i) simplices.push_back(normalized_simplex({p[i], p[i + 1]}));
    } else {
      const auto& f = *piece.filling;
      int n = static_cast<int>(piece.top.size()) - 1;
      std::vector<VertexId> rename;
      for (size_t i = 0; i < f.assignment.size(); ++i) {
        if (i == 0)
          rename.push_back(da);
        else if (i == static_cast<size_t>(n))
          rename.push_back(db);
        else
          rename.push_back(dom.fresh(f.assignment[i]));
      }
      for (const auto& t : f.disc.complex().maximal_simplices()) {
        Simplex r;
        for (VertexId v : t) r.push_back(rename[static_cast<size_t>(v)]);
        simplices.push_back(normalized_simplex(std::move(r)));
      }
    }
  }
  out.surface.domain =
      SimplicialComplex::from_simplices(std::move(simplices), static_cast<int>(dom.assignment.size()));
  out.surface.assignment = dom.assignment;
  for (const auto& t : out.surface.domain.maximal_simplices())
    if (t.size() == 3) {
      out.surface.domain_area++;
      std::set<VertexId> imgs{out.surface.assignment[static_cast<size_t>(t[0])],
                              out.surface.assignment[static_cast<size_t>(t[1])],
                              out.surface.assignment[static_cast<size_t>(t[2])]};
      if (imgs.size() == 3) out.surface.injective_area++;
    }
  return out;
}

bool check_simple_digon_flat(const SimplicialComplex& X, const Path& g0, const Path& g1,
                             int area_cap) {
  if (g0 == g1) throw invalid_input("degenerate digon: equal geodesics");
  if (g0.empty() || g1.empty() || g0.front() != g1.front() || g0.back() != g1.back())
    throw invalid_input("digon needs geodesics sharing both endpoints");
  if (!is_geodesic(X, g0) || !is_geodesic(X, g1)) throw invalid_input("paths are not geodesics");
  for (size_t i = 1; i + 1 < g0.size(); ++i)
    for (size_t j = 1; j + 1 < g1.size(); ++j)
      if (g0[i] == g1[j]) throw invalid_input("geodesics intersect beyond their endpoints");

  std::vector<VertexId> cycle(g0);
  for (size_t i = g1.size() - 2; i >= 1; --i) cycle.push_back(g1[i]);
  auto filling = fill_cycle_minimal(X, cycle, area_cap);
  if (!filling) throw std::runtime_error("digon exceeded the filling area cap");
  return is_flat(filling->disc);
}

// ---- extended digon discs ----

ExtendedDigonDisc extend_digon_to_disc(const DigonalSurface& S) {
  // recover the two image paths from the pieces
  Path g0, g1;
  for (const auto& piece : S.pieces) {
    size_t skip = g0.empty() ? 0 : 1;
    g0.insert(g0.end(), piece.top.begin() + static_cast<std::ptrdiff_t>(skip), piece.top.end());
    g1.insert(g1.end(), piece.bottom.begin() + static_cast<std::ptrdiff_t>(skip), piece.bottom.end());
  }
  const int d = static_cast<int>(g0.size()) - 1;
  if (d < 1) throw invalid_input("cannot extend an empty digon");
  if (d == 1 && g0 == g1) throw invalid_input("single shared edge has no disc extension");

  DomainBuilder dom;
  std::vector<VertexId> top(static_cast<size_t>(d) + 1, -1);
  std::vector<VertexId> bot(static_cast<size_t>(d) + 1, -1);
  for (int i = 0; i <= d; ++i) top[static_cast<size_t>(i)] = dom.fresh(g0[static_cast<size_t>(i)]);
  bot[0] = top[0];
  bot[static_cast<size_t>(d)] = top[static_cast<size_t>(d)];
  for (int i = 1; i < d; ++i) {
    if (g0[static_cast<size_t>(i)] == g1[static_cast<size_t>(i)])
      bot[static_cast<size_t>(i)] = dom.fresh(g1[static_cast<size_t>(i)]);  // doubled
  }

  std::vector<Simplex> triangles;
  auto add_tri = [&](VertexId a, VertexId b, VertexId c) {
    triangles.push_back(normalized_simplex({a, b, c}));
  };

  int pos = 0;
  for (const auto& piece : S.pieces) {
    int a = pos;
    int b = a + static_cast<int>(piece.top.size()) - 1;
    pos = b;
    if (piece.is_segment) {
      // ladder of collapsed squares over [a..b]
      for (int j = a; j < b; ++j) {
        VertexId tj = top[static_cast<size_t>(j)], bj = bot[static_cast<size_t>(j)];
        VertexId tn = top[static_cast<size_t>(j + 1)], bn = bot[static_cast<size_t>(j + 1)];
        if (bj == -1) bj = tj;
        if (bn == -1) bn = tn;
        if (tj != bj) add_tri(tj, bj, tn);
        if (tn != bn) add_tri(bj == -1 ? tj : bj, tn, bn);
      }
    } else {
      const auto& f = *piece.filling;
      int n = static_cast<int>(piece.top.size()) - 1;
      // boundary of the filling: 0..n is the top arc, then bottom interior
      std::vector<VertexId> rename(f.assignment.size(), -1);
      for (int i = 0; i <= n; ++i) rename[static_cast<size_t>(i)] = top[static_cast<size_t>(a + i)];
      for (int i = 1; i < n; ++i) {
        // cycle position n + (n - i) carries g1[a+i]
        rename[static_cast<size_t>(n + (n - i))] = dom.fresh(g1[static_cast<size_t>(a + i)]);
        bot[static_cast<size_t>(a + i)] = rename[static_cast<size_t>(n + (n - i))];
      }
      for (size_t i = 2 * static_cast<size_t>(n); i < f.assignment.size(); ++i)
        rename[i] = dom.fresh(f.assignment[i]);
      for (const auto& t : f.disc.complex().maximal_simplices()) {
        Simplex r;
        for (VertexId v : t) r.push_back(rename[static_cast<size_t>(v)]);
        triangles.push_back(normalized_simplex(std::move(r)));
      }
      // collapsed seams at doubled cut vertices
      if (bot[static_cast<size_t>(a)] != -1 && bot[static_cast<size_t>(a)] != top[static_cast<size_t>(a)])
        add_tri(top[static_cast<size_t>(a)], bot[static_cast<size_t>(a)], bot[static_cast<size_t>(a + 1)]);
      if (bot[static_cast<size_t>(b)] != -1 && bot[static_cast<size_t>(b)] != top[static_cast<size_t>(b)])
        add_tri(top[static_cast<size_t>(b)], bot[static_cast<size_t>(b)], bot[static_cast<size_t>(b - 1)]);
    }
  }

  for (int i = 0; i <= d; ++i)
    if (bot[static_cast<size_t>(i)] == -1) bot[static_cast<size_t>(i)] = top[static_cast<size_t>(i)];

  ExtendedDigonDisc out;
  out.assignment = dom.assignment;
  out.top_arc = top;
  out.bottom_arc = bot;
  out.disc = TriangulatedDisc::from_complex(
      SimplicialComplex::from_simplices(triangles, static_cast<int>(dom.assignment.size())));
  return out;
}

// ---- sphere construction ----

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

std::string pair_name(VertexId u, VertexId v) {
  return "D_" + std::to_string(std::min(u, v)) + "_" + std::to_string(std::max(u, v));
}

std::string triple_name(VertexId u, VertexId v, VertexId w) {
  Simplex s = normalized_simplex({u, v, w});
  return "T_" + std::to_string(s[0]) + "_" + std::to_string(s[1]) + "_" + std::to_string(s[2]);
}

}  // namespace

SphereResult build_sphere(const SimplicialComplex& X, VertexId A, VertexId B, VertexId C,
                          VertexId D, const TriangularSearchOptions& opt) {
  std::array<VertexId, 4> pts{A, B, C, D};
  std::set<VertexId> uniq(pts.begin(), pts.end());
  if (uniq.size() != 4) throw invalid_input("sphere construction needs four distinct vertices");

  SphereResult res;

  // minimal triangular surfaces per triple; record each side geodesic
  struct TrianglePiece {
    std::array<VertexId, 3> corners;
    TriangularSurface surf;
  };
  std::vector<TrianglePiece> tri_pieces;
  // (sorted pair, sorted triple) -> geodesic oriented min(u,v) -> max(u,v)
  std::map<std::pair<Simplex, Simplex>, Path> side_geodesic;
  std::map<std::pair<Simplex, Simplex>, Path> side_domain_path;  // same orientation

  for (int skip = 0; skip < 4; ++skip) {
    std::array<VertexId, 3> tri{};
    int t = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) tri[static_cast<size_t>(t++)] = pts[static_cast<size_t>(i)];
    TrianglePiece piece{tri, triangular_surface(X, tri[0], tri[1], tri[2], opt)};
    Simplex triple = normalized_simplex({tri[0], tri[1], tri[2]});
    for (int k = 0; k < 3; ++k) {
      VertexId u = tri[static_cast<size_t>(k)], v = tri[static_cast<size_t>((k + 1) % 3)];
      Path geo = piece.surf.side_geodesics[static_cast<size_t>(k)];
      Path dp = piece.surf.side_paths[static_cast<size_t>(k)];
      if (u > v) {
        std::reverse(geo.begin(), geo.end());
        std::reverse(dp.begin(), dp.end());
      }
      Simplex pair = normalized_simplex({u, v});
      side_geodesic[{pair, triple}] = geo;
      side_domain_path[{pair, triple}] = dp;
    }
    tri_pieces.push_back(std::move(piece));
  }

  // digonal pieces per pair, between the geodesics of its two triples
  struct DigonPieceInfo {
    Simplex pair;
    Simplex triple_top, triple_bot;
    std::optional<ExtendedDigonDisc> disc;  // absent for a single shared edge
    Path top_images, bot_images;
  };
  std::vector<DigonPieceInfo> digon_pieces;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      VertexId u = pts[static_cast<size_t>(i)], v = pts[static_cast<size_t>(j)];
      Simplex pair = normalized_simplex({u, v});
      std::vector<Simplex> triples;
      for (int k = 0; k < 4; ++k) {
        if (k == i || k == j) continue;
        triples.push_back(normalized_simplex({u, v, pts[static_cast<size_t>(k)]}));
      }
      std::sort(triples.begin(), triples.end());
      DigonPieceInfo info;
      info.pair = pair;
      info.triple_top = triples[0];
      info.triple_bot = triples[1];
      info.top_images = side_geodesic.at({pair, triples[0]});
      info.bot_images = side_geodesic.at({pair, triples[1]});
      if (!(info.top_images.size() == 2 && info.top_images == info.bot_images)) {
        DigonalSurface ds = digonal_surface(X, info.top_images, info.bot_images, opt.area_cap);
        info.disc = extend_digon_to_disc(ds);
      }
      digon_pieces.push_back(std::move(info));
    }

  // global vertex table
  std::vector<VertexId> images;
  std::map<std::string, int> base;  // piece name -> first global id
  auto alloc = [&](const std::string& name, const std::vector<VertexId>& assignment) {
    base[name] = static_cast<int>(images.size());
    images.insert(images.end(), assignment.begin(), assignment.end());
  };
  for (const auto& p : tri_pieces)
    alloc(triple_name(p.corners[0], p.corners[1], p.corners[2]), p.surf.surface.assignment);
  for (const auto& dpc : digon_pieces) {
    if (dpc.disc)
      alloc(pair_name(dpc.pair[0], dpc.pair[1]), dpc.disc->assignment);
    else
      alloc(pair_name(dpc.pair[0], dpc.pair[1]), {dpc.pair[0], dpc.pair[1]});
  }

  UnionFind uf(images.size());
  for (const auto& dpc : digon_pieces) {
    int dbase = base.at(pair_name(dpc.pair[0], dpc.pair[1]));
    for (int which = 0; which < 2; ++which) {
      const Simplex& triple = which == 0 ? dpc.triple_top : dpc.triple_bot;
      std::string tname = triple_name(triple[0], triple[1], triple[2]);
      const Path& tri_path = side_domain_path.at({dpc.pair, triple});
      std::vector<VertexId> digon_path;
      if (dpc.disc)
        digon_path = which == 0 ? dpc.disc->top_arc : dpc.disc->bottom_arc;
      else
        digon_path = {0, 1};
      if (tri_path.size() != digon_path.size()) {
        res.degenerate = true;
        res.degeneracy = "arc length mismatch on " + pair_name(dpc.pair[0], dpc.pair[1]);
        return res;
      }
      for (size_t i = 0; i < tri_path.size(); ++i)
        uf.unite(base.at(tname) + tri_path[i], dbase + digon_path[i]);
    }
  }

  // image consistency across identifications
  std::map<int, VertexId> root_image;
  for (size_t i = 0; i < images.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    auto it = root_image.find(r);
    if (it == root_image.end())
      root_image[r] = images[i];
    else if (it->second != images[i]) {
      res.degenerate = true;
      res.degeneracy = "identified domain vertices with different images";
      return res;
    }
  }

  // dense sphere ids per root
  std::map<int, VertexId> dense;
  for (const auto& [r, img] : root_image) {
    VertexId id = static_cast<VertexId>(dense.size());
    dense[r] = id;
    res.assignment.push_back(img);
  }

  auto sphere_id = [&](const std::string& piece, VertexId local) {
    return dense.at(uf.find(base.at(piece) + local));
  };

  std::set<Simplex> tri_set;
  auto add_piece_triangles = [&](const std::string& name, const SimplicialComplex& domain) {
    for (const auto& t : domain.maximal_simplices()) {
      if (t.size() != 3) continue;
      Simplex s = normalized_simplex(
          {sphere_id(name, t[0]), sphere_id(name, t[1]), sphere_id(name, t[2])});
      if (s.size() != 3) {
        res.degenerate = true;
        res.degeneracy = "identification collapsed a triangle of " + name;
        return false;
      }
      if (!tri_set.insert(s).second) {
        res.degenerate = true;
        res.degeneracy = "pieces overlap on a triangle of " + name;
        return false;
      }
    }
    return true;
  };
  for (const auto& p : tri_pieces) {
    std::string name = triple_name(p.corners[0], p.corners[1], p.corners[2]);
    res.pieces[name] = p.surf.surface;
    if (!add_piece_triangles(name, p.surf.surface.domain)) return res;
  }
  for (const auto& dpc : digon_pieces) {
    std::string name = pair_name(dpc.pair[0], dpc.pair[1]);
    if (dpc.disc) {
      SurfaceMap sm;
      sm.domain = dpc.disc->disc.complex();
      sm.assignment = dpc.disc->assignment;
      sm.domain_area = dpc.disc->disc.triangle_count();
      res.pieces[name] = sm;
      if (!add_piece_triangles(name, dpc.disc->disc.complex())) return res;
    } else {
      SurfaceMap sm;
      sm.domain = SimplicialComplex::from_maximal(2, {{0, 1}});
      sm.assignment = {dpc.pair[0], dpc.pair[1]};
      res.pieces[name] = sm;
    }
  }

  for (auto& [name, sm] : res.pieces) {
    std::vector<VertexId> inc;
    for (VertexId local = 0; local < static_cast<VertexId>(sm.assignment.size()); ++local)
      inc.push_back(sphere_id(name, local));
    res.inclusions[name] = inc;
  }

  std::vector<Simplex> triangles(tri_set.begin(), tri_set.end());
  if (triangles.empty()) {
    res.degenerate = true;
    res.degeneracy = "no two-dimensional pieces";
    return res;
  }
  SimplicialComplex sphere_complex;
  try {
    sphere_complex =
        SimplicialComplex::from_simplices(triangles, static_cast<int>(res.assignment.size()));
  } catch (const invalid_input& e) {
    res.degenerate = true;
    res.degeneracy = e.what();
    return res;
  }
  auto sphere = TriangulatedSphere::try_from_complex(sphere_complex);
  if (!sphere) {
    res.degenerate = true;
    res.degeneracy = "quotient is not a triangulated 2-sphere";
    return res;
  }
  res.sphere = std::move(sphere);
  return res;
}

// ---- ball fillings ----

BallCheck verify_ball_filling(const SimplicialComplex& X, const TriangulatedSphere& S,
                              const std::vector<VertexId>& sphere_map, const BallFilling& B) {
  BallCheck out;
  const int sphere_n = S.complex().vertex_count();
  if (sphere_map.size() != static_cast<size_t>(sphere_n)) {
    out.diagnostics.push_back("sphere map has the wrong arity");
    return out;
  }
  if (B.tetrahedra.empty()) {
    out.diagnostics.push_back("no tetrahedra");
    return out;
  }
  int max_id = 0;
  for (const auto& t : B.tetrahedra) {
    if (t.size() != 4 || !is_strictly_ascending(t)) {
      out.diagnostics.push_back("malformed tetrahedron");
      return out;
    }
    max_id = std::max(max_id, t.back());
  }
  if (B.assignment.size() <= static_cast<size_t>(max_id)) {
    out.diagnostics.push_back("assignment does not cover all ball vertices");
    return out;
  }
  for (int v = 0; v < sphere_n; ++v)
    if (B.assignment[static_cast<size_t>(v)] != sphere_map[static_cast<size_t>(v)])
      out.diagnostics.push_back("map does not extend the sphere map at vertex " + std::to_string(v));

  // boundary = faces in exactly one tetrahedron
  std::map<Simplex, int> face_count;
  for (const auto& t : B.tetrahedra)
    for (int skip = 0; skip < 4; ++skip) {
      Simplex f;
      for (int i = 0; i < 4; ++i)
        if (i != skip) f.push_back(t[static_cast<size_t>(i)]);
      face_count[f] += 1;
    }
  std::set<Simplex> boundary;
  for (const auto& [f, n] : face_count)
    if (n == 1) boundary.insert(f);
    else if (n > 2)
      out.diagnostics.push_back("triangle in more than two tetrahedra");

  std::set<Simplex> sphere_triangles;
  for (const auto& t : S.complex().maximal_simplices()) sphere_triangles.insert(t);
  if (boundary != sphere_triangles)
    out.diagnostics.push_back("boundary of the filling is not the given sphere");

  std::set<VertexId> on_boundary;
  for (const auto& f : boundary) on_boundary.insert(f.begin(), f.end());
  for (const auto& t : B.tetrahedra)
    for (VertexId v : t)
      if (!on_boundary.count(v))
        out.diagnostics.push_back("internal vertex " + std::to_string(v));

  for (const auto& t : B.tetrahedra) {
    std::set<VertexId> img;
    for (VertexId v : t) img.insert(B.assignment[static_cast<size_t>(v)]);
    Simplex s(img.begin(), img.end());
    if (!X.contains(s)) {
      out.diagnostics.push_back("tetrahedron image does not span a simplex");
      break;
    }
  }

  out.ok = out.diagnostics.empty();
  return out;
}

std::optional<BallFilling> search_ball_filling(const SimplicialComplex& X,
                                               const TriangulatedSphere& S,
                                               const std::vector<VertexId>& sphere_map) {
  const int n = S.complex().vertex_count();
  if (n > 16) return std::nullopt;
  const auto& sphere_tris = S.complex().maximal_simplices();

  // cone over the complement of a vertex star, apex at that vertex
  for (VertexId v0 = 0; v0 < n; ++v0) {
    BallFilling cand;
    cand.assignment = sphere_map;
    bool ok = true;
    for (const auto& t : sphere_tris) {
      if (std::binary_search(t.begin(), t.end(), v0)) continue;
      Simplex tet = normalized_simplex({t[0], t[1], t[2], v0});
      std::set<VertexId> img;
      for (VertexId v : tet) img.insert(sphere_map[static_cast<size_t>(v)]);
      Simplex s(img.begin(), img.end());
      if (!X.contains(s)) { ok = false; break; }
      cand.tetrahedra.push_back(tet);
    }
    if (!ok || cand.tetrahedra.empty()) continue;
    std::sort(cand.tetrahedra.begin(), cand.tetrahedra.end());
    if (verify_ball_filling(X, S, sphere_map, cand).ok) return cand;
  }

  // bounded exhaustive search over tetrahedra on sphere vertices
  struct State {
    std::set<Simplex> frontier;
    std::vector<Simplex> tets;
  };
  long long nodes = 0;
  std::set<Simplex> start(sphere_tris.begin(), sphere_tris.end());
  std::optional<BallFilling> found;
  auto dfs = [&](auto&& self, State& st) -> bool {
    if (++nodes > 200000) return false;
    if (st.frontier.empty()) {
      BallFilling cand;
      cand.tetrahedra = st.tets;
      std::sort(cand.tetrahedra.begin(), cand.tetrahedra.end());
      cand.assignment = sphere_map;
      if (verify_ball_filling(X, S, sphere_map, cand).ok) {
        found = cand;
        return true;
      }
      return false;
    }
    Simplex face = *st.frontier.begin();
    for (VertexId x = 0; x < n; ++x) {
      if (std::binary_search(face.begin(), face.end(), x)) continue;
      Simplex tet = normalized_simplex({face[0], face[1], face[2], x});
      if (std::count(st.tets.begin(), st.tets.end(), tet)) continue;
      std::set<VertexId> img;
      for (VertexId v : tet) img.insert(sphere_map[static_cast<size_t>(v)]);
      Simplex s(img.begin(), img.end());
      if (!X.contains(s)) continue;
      State next = st;
      next.tets.push_back(tet);
      for (int skip = 0; skip < 4; ++skip) {
        Simplex f;
        for (int i = 0; i < 4; ++i)
          if (i != skip) f.push_back(tet[static_cast<size_t>(i)]);
        auto it = next.frontier.find(f);
        if (it != next.frontier.end())
          next.frontier.erase(it);
        else
          next.frontier.insert(f);
      }
      if (next.tets.size() <= 64 && self(self, next)) return true;
    }
    return false;
  };
  State st{start, {}};
  dfs(dfs, st);
  return found;
}

}  // namespace systolic
