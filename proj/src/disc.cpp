#include "systolic/disc.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <queue>
#include <set>
#include <string>

#include "systolic/metric.hpp"

namespace systolic {

const std::vector<HexCoord>& hex_steps() {
  static const std::vector<HexCoord> steps = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  return steps;
}

int hex_distance(const HexCoord& p, const HexCoord& q) {
  int a = p.a - q.a, b = p.b - q.b;
  return (std::abs(a) + std::abs(b) + std::abs(a + b)) / 2;
}

bool hex_adjacent(const HexCoord& p, const HexCoord& q) { return hex_distance(p, q) == 1; }

std::pair<HexCoord, HexCoord> hex_edge_apexes(const HexCoord& p, const HexCoord& q) {
  // rotate the edge vector by +-60 degrees
  int ea = q.a - p.a, eb = q.b - p.b;
  HexCoord plus{p.a - eb, p.b + ea + eb};   // rot60(e)  = (-b, a+b)
  HexCoord minus{p.a + ea + eb, p.b - ea};  // rot-60(e) = (a+b, -a)
  return {plus, minus};
}

// ---- validation helpers ----

namespace {

struct SurfaceScan {
  std::vector<Simplex> triangles;
  std::map<Simplex, int> edge_use;          // edge -> number of triangles
  std::vector<int> tri_count;               // per vertex
  long long euler = 0;
  std::string fail;

  bool scan(const SimplicialComplex& X) {
    for (const auto& m : X.maximal_simplices())
      if (m.size() != 3) { fail = "complex is not pure of dimension 2"; return false; }
    triangles = X.maximal_simplices();
    if (triangles.empty()) { fail = "no triangles"; return false; }
    if (!X.is_connected()) { fail = "not connected"; return false; }
    tri_count.assign(static_cast<size_t>(X.vertex_count()), 0);
    for (const auto& t : triangles) {
      for (VertexId v : t) ++tri_count[static_cast<size_t>(v)];
      edge_use[{t[0], t[1]}] += 1;
      edge_use[{t[0], t[2]}] += 1;
      edge_use[{t[1], t[2]}] += 1;
    }
    for (const auto& [e, n] : edge_use)
      if (n > 2) { fail = "edge in more than two triangles"; return false; }
    euler = X.vertex_count() - static_cast<long long>(edge_use.size()) +
            static_cast<long long>(triangles.size());
    return true;
  }

  // Link of v as a graph on opposite edges; true iff it is a single path
  // (boundary) or single cycle (interior).
  bool link_is_path_or_cycle(const SimplicialComplex& X, VertexId v, bool expect_cycle) const {
    std::map<VertexId, std::vector<VertexId>> g;
    for (const auto& t : triangles) {
      if (!std::binary_search(t.begin(), t.end(), v)) continue;
      std::vector<VertexId> rest;
      for (VertexId w : t)
        if (w != v) rest.push_back(w);
      g[rest[0]].push_back(rest[1]);
      g[rest[1]].push_back(rest[0]);
    }
    (void)X;
    if (g.empty()) return false;
    size_t deg1 = 0;
    for (const auto& [w, ns] : g) {
      if (ns.size() > 2) return false;
      if (ns.size() == 1) ++deg1;
    }
    // connectivity of the link graph
    std::set<VertexId> seen;
    std::queue<VertexId> q;
    q.push(g.begin()->first);
    seen.insert(g.begin()->first);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      for (VertexId w : g.at(u))
        if (!seen.count(w)) { seen.insert(w); q.push(w); }
    }
    if (seen.size() != g.size()) return false;
    return expect_cycle ? deg1 == 0 : deg1 == 2;
  }
};

}  // namespace

TriangulatedDisc TriangulatedDisc::from_complex(const SimplicialComplex& X) {
  auto d = try_from_complex(X);
  if (!d) throw invalid_input("not a triangulated disc");
  return *std::move(d);
}

std::optional<TriangulatedDisc> TriangulatedDisc::try_from_complex(const SimplicialComplex& X) {
  SurfaceScan scan;
  if (!scan.scan(X)) return std::nullopt;
  if (scan.euler != 1) return std::nullopt;

  // boundary edges must form one cycle
  std::map<VertexId, std::vector<VertexId>> bgraph;
  for (const auto& [e, n] : scan.edge_use)
    if (n == 1) {
      bgraph[e[0]].push_back(e[1]);
      bgraph[e[1]].push_back(e[0]);
    }
  if (bgraph.empty()) return std::nullopt;
  for (const auto& [v, ns] : bgraph)
    if (ns.size() != 2) return std::nullopt;

  TriangulatedDisc D;
  VertexId start = bgraph.begin()->first;
  std::vector<VertexId>& cycle = D.boundary_;
  cycle.push_back(start);
  VertexId prev = -1, cur = start;
  while (true) {
    const auto& ns = bgraph.at(cur);
    VertexId next = (ns[0] == prev) ? ns[1] : ns[0];
    // canonical direction on the first step: smaller neighbor
    if (prev == -1) next = std::min(ns[0], ns[1]);
    if (next == start) break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
    if (cycle.size() > static_cast<size_t>(X.vertex_count())) return std::nullopt;
  }
  if (cycle.size() != bgraph.size()) return std::nullopt;  // several boundary cycles

  D.interior_mask_.assign(static_cast<size_t>(X.vertex_count()), 1);
  for (VertexId v : cycle) D.interior_mask_[static_cast<size_t>(v)] = 0;
  for (int v = 0; v < X.vertex_count(); ++v) {
    bool interior = D.interior_mask_[static_cast<size_t>(v)] != 0;
    if (!scan.link_is_path_or_cycle(X, v, interior)) return std::nullopt;
    if (interior) D.interior_.push_back(v);
  }
  D.complex_ = X;
  D.tri_count_ = scan.tri_count;
  D.triangle_count_ = static_cast<int>(scan.triangles.size());
  return D;
}

TriangulatedSphere TriangulatedSphere::from_complex(const SimplicialComplex& X) {
  auto s = try_from_complex(X);
  if (!s) throw invalid_input("not a triangulated sphere");
  return *std::move(s);
}

std::optional<TriangulatedSphere> TriangulatedSphere::try_from_complex(const SimplicialComplex& X) {
  SurfaceScan scan;
  if (!scan.scan(X)) return std::nullopt;
  if (scan.euler != 2) return std::nullopt;
  for (const auto& [e, n] : scan.edge_use)
    if (n != 2) return std::nullopt;
  for (int v = 0; v < X.vertex_count(); ++v)
    if (!scan.link_is_path_or_cycle(X, v, true)) return std::nullopt;
  TriangulatedSphere S;
  S.complex_ = X;
  S.tri_count_ = scan.tri_count;
  S.triangle_count_ = static_cast<int>(scan.triangles.size());
  return S;
}

// ---- defects and Gauss-Bonnet ----

DefectVector defects(const TriangulatedDisc& D) {
  DefectVector out;
  int n = D.complex().vertex_count();
  out.defect.resize(static_cast<size_t>(n));
  out.triangle_count.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    int chi = D.triangles_at(v);
    out.triangle_count[static_cast<size_t>(v)] = chi;
    out.defect[static_cast<size_t>(v)] = (D.is_interior(v) ? 6 : 3) - chi;
  }
  return out;
}

DefectVector defects(const TriangulatedSphere& S) {
  DefectVector out;
  int n = S.complex().vertex_count();
  out.defect.resize(static_cast<size_t>(n));
  out.triangle_count.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    int chi = S.triangles_at(v);
    out.triangle_count[static_cast<size_t>(v)] = chi;
    out.defect[static_cast<size_t>(v)] = 6 - chi;
  }
  return out;
}

std::pair<long long, long long> gauss_bonnet(const TriangulatedDisc& D) {
  auto dv = defects(D);
  long long lhs = 0;
  for (int d : dv.defect) lhs += d;
  return {lhs, 6 * 1};
}

std::pair<long long, long long> gauss_bonnet(const TriangulatedSphere& S) {
  auto dv = defects(S);
  long long lhs = 0;
  for (int d : dv.defect) lhs += d;
  return {lhs, 6 * 2};
}

bool is_flat(const TriangulatedDisc& D) {
  auto dv = defects(D);
  for (VertexId v : D.interior_vertices())
    if (dv.defect[static_cast<size_t>(v)] != 0) return false;
  std::vector<int> nonzero;
  for (VertexId v : D.boundary_cycle()) {
    int d = dv.defect[static_cast<size_t>(v)];
    if (d < -1) return false;
    if (d != 0) nonzero.push_back(d);
  }
  bool has_neg = std::any_of(nonzero.begin(), nonzero.end(), [](int d) { return d < 0; });
  bool has_pos = std::any_of(nonzero.begin(), nonzero.end(), [](int d) { return d > 0; });
  if (has_neg && !has_pos) return false;
  for (size_t i = 0; i < nonzero.size(); ++i)
    if (nonzero[i] < 0 && nonzero[(i + 1) % nonzero.size()] < 0) return false;
  return true;
}

std::optional<std::map<VertexId, HexCoord>> embed_in_hex_plane(const TriangulatedDisc& D) {
  const auto& X = D.complex();
  const auto& tris = X.maximal_simplices();

  // triangle adjacency over shared edges
  std::map<Simplex, std::vector<int>> tris_of_edge;
  for (size_t i = 0; i < tris.size(); ++i) {
    const auto& t = tris[i];
    tris_of_edge[{t[0], t[1]}].push_back(static_cast<int>(i));
    tris_of_edge[{t[0], t[2]}].push_back(static_cast<int>(i));
    tris_of_edge[{t[1], t[2]}].push_back(static_cast<int>(i));
  }

  std::map<VertexId, HexCoord> pos;
  const auto& seed = tris.front();
  pos[seed[0]] = {0, 0};
  pos[seed[1]] = {1, 0};
  pos[seed[2]] = {0, 1};

  // Positions propagate over the dual graph; across a placed edge the third
  // vertex is forced to the apex not used by the neighbouring triangle.
  std::vector<char> done(tris.size(), 0);
  std::queue<int> q;
  done[0] = 1;
  q.push(0);
  while (!q.empty()) {
    int ti = q.front();
    q.pop();
    const auto& t = tris[static_cast<size_t>(ti)];
    for (auto [a, b, c] : {std::array<VertexId, 3>{t[0], t[1], t[2]},
                           std::array<VertexId, 3>{t[0], t[2], t[1]},
                           std::array<VertexId, 3>{t[1], t[2], t[0]}}) {
      Simplex e{a, b};
      for (int tj : tris_of_edge[e]) {
        if (done[static_cast<size_t>(tj)]) continue;
        const auto& u = tris[static_cast<size_t>(tj)];
        VertexId other = -1;
        for (VertexId w : u)
          if (w != a && w != b) other = w;
        auto [p1, p2] = hex_edge_apexes(pos.at(a), pos.at(b));
        HexCoord forced = (p1 == pos.at(c)) ? p2 : p1;
        auto it = pos.find(other);
        if (it != pos.end()) {
          if (!(it->second == forced)) return std::nullopt;
        } else {
          pos[other] = forced;
        }
        done[static_cast<size_t>(tj)] = 1;
        q.push(tj);
      }
    }
  }
  if (pos.size() != static_cast<size_t>(X.vertex_count())) return std::nullopt;

  // global injectivity
  std::set<HexCoord> used;
  for (const auto& [v, p] : pos)
    if (!used.insert(p).second) return std::nullopt;

  // isometry: intrinsic distances must match lattice distances
  for (int v = 0; v < X.vertex_count(); ++v) {
    auto dist = distances_from(X, v);
    for (int w = v + 1; w < X.vertex_count(); ++w)
      if (dist[static_cast<size_t>(w)] != hex_distance(pos.at(v), pos.at(w))) return std::nullopt;
  }
  return pos;
}

}  // namespace systolic
