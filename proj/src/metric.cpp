#include "systolic/metric.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace systolic {

std::vector<int> distances_from(const SimplicialComplex& X, VertexId source) {
  if (source < 0 || source >= X.vertex_count()) throw invalid_input("vertex id out of range");
  std::vector<int> dist(static_cast<size_t>(X.vertex_count()), -1);
  std::queue<VertexId> q;
  dist[static_cast<size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId v : X.neighbors(u))
      if (dist[static_cast<size_t>(v)] == -1) {
        dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
        q.push(v);
      }
  }
  return dist;
}

int distance(const SimplicialComplex& X, VertexId u, VertexId v) {
  auto d = distances_from(X, u);
  if (v < 0 || v >= X.vertex_count()) throw invalid_input("vertex id out of range");
  if (d[static_cast<size_t>(v)] < 0) throw no_path("no path between vertices");
  return d[static_cast<size_t>(v)];
}

IntervalDag::IntervalDag(const SimplicialComplex& X, VertexId source, VertexId target)
    : source_(source), target_(target) {
  dist_u_ = distances_from(X, source);
  dist_v_ = distances_from(X, target);
  if (target < 0 || target >= X.vertex_count()) throw invalid_input("vertex id out of range");
  length_ = dist_u_[static_cast<size_t>(target)];
  if (length_ < 0) throw no_path("no path between vertices");
  succ_.assign(static_cast<size_t>(X.vertex_count()), {});
  for (int w = 0; w < X.vertex_count(); ++w) {
    if (!on_interval(w)) continue;
    verts_.push_back(w);
    for (VertexId x : X.neighbors(w))
      if (on_interval(x) && dist_u_[static_cast<size_t>(x)] == dist_u_[static_cast<size_t>(w)] + 1)
        succ_[static_cast<size_t>(w)].push_back(x);
  }
}

bool IntervalDag::on_interval(VertexId v) const {
  int du = dist_u_.at(static_cast<size_t>(v));
  int dv = dist_v_.at(static_cast<size_t>(v));
  return du >= 0 && dv >= 0 && du + dv == length_;
}

const std::vector<VertexId>& IntervalDag::successors(VertexId v) const {
  return succ_.at(static_cast<size_t>(v));
}

std::uint64_t IntervalDag::geodesic_count() const {
  std::map<VertexId, std::uint64_t> count;
  // process interval vertices by decreasing distance from source
  std::vector<VertexId> order(verts_);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return dist_u_[static_cast<size_t>(a)] > dist_u_[static_cast<size_t>(b)];
  });
  for (VertexId w : order) {
    if (w == target_) {
      count[w] = 1;
      continue;
    }
    std::uint64_t c = 0;
    for (VertexId x : succ_[static_cast<size_t>(w)]) c += count[x];
    count[w] = c;
  }
  return count[source_];
}

std::vector<std::vector<VertexId>> IntervalDag::geodesics(size_t limit) const {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> path{source_};
  auto walk = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    VertexId tail = path.back();
    if (tail == target_) {
      out.push_back(path);
      return;
    }
    for (VertexId x : succ_[static_cast<size_t>(tail)]) {
      path.push_back(x);
      self(self);
      path.pop_back();
      if (out.size() >= limit) return;
    }
  };
  walk(walk);
  return out;
}

IntervalDag interval(const SimplicialComplex& X, VertexId u, VertexId v) {
  return IntervalDag(X, u, v);
}

// ---- subcomplexes ----

Subcomplex::Subcomplex(const SimplicialComplex& parent, std::vector<VertexId> vertices)
    : parent_(&parent) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (VertexId v : vertices)
    if (v < 0 || v >= parent.vertex_count()) throw invalid_input("subcomplex vertex out of range");
  verts_ = std::move(vertices);
  mask_.assign(static_cast<size_t>(parent.vertex_count()), 0);
  for (VertexId v : verts_) mask_[static_cast<size_t>(v)] = 1;
}

std::vector<Simplex> Subcomplex::simplices() const {
  std::vector<Simplex> out;
  for (const auto& s : parent_->all_simplices()) {
    bool inside = true;
    for (VertexId v : s)
      if (!has_vertex(v)) { inside = false; break; }
    if (inside) out.push_back(s);
  }
  return out;
}

bool Subcomplex::is_connected() const {
  if (verts_.empty()) return true;
  std::set<VertexId> seen;
  std::queue<VertexId> q;
  q.push(verts_.front());
  seen.insert(verts_.front());
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId v : parent_->neighbors(u))
      if (has_vertex(v) && !seen.count(v)) {
        seen.insert(v);
        q.push(v);
      }
  }
  return seen.size() == verts_.size();
}

bool is_full(const Subcomplex&) { return true; }

static std::vector<VertexId> simplex_set_support(const SimplexSet& S) {
  std::set<VertexId> sup;
  for (const auto& s : S) sup.insert(s.begin(), s.end());
  return {sup.begin(), sup.end()};
}

bool is_full(const SimplicialComplex& X, const SimplexSet& S) {
  for (const auto& s : S)
    if (!X.contains(s)) throw invalid_input("simplex set member not in complex");
  Subcomplex span(X, simplex_set_support(S));
  for (const auto& s : span.simplices())
    if (!S.count(s)) return false;
  return true;
}

// Midpoint condition over an explicit graph: for vertices of A at distance
// exactly two in X, every common neighbor must lie in A.
static bool midpoints_inside(const SimplicialComplex& X, const std::vector<VertexId>& verts,
                             const std::vector<char>& mask) {
  for (size_t i = 0; i < verts.size(); ++i) {
    auto d = distances_from(X, verts[i]);
    for (size_t j = i + 1; j < verts.size(); ++j) {
      if (d[static_cast<size_t>(verts[j])] != 2) continue;
      for (VertexId m : X.neighbors(verts[i]))
        if (X.adjacent(m, verts[j]) && !mask[static_cast<size_t>(m)]) return false;
    }
  }
  return true;
}

bool is_3_convex(const Subcomplex& A) {
  std::vector<char> mask(static_cast<size_t>(A.parent().vertex_count()), 0);
  for (VertexId v : A.vertices()) mask[static_cast<size_t>(v)] = 1;
  return midpoints_inside(A.parent(), A.vertices(), mask);
}

bool is_3_convex(const SimplicialComplex& X, const SimplexSet& S) {
  if (!is_full(X, S)) return false;
  Subcomplex span(X, simplex_set_support(S));
  return is_3_convex(span);
}

// 3-convexity of lk_A(s) inside lk_X(s), both given as simplex sets of the
// parent. The link complex supplies the ambient metric.
static bool link_is_3_convex(const SimplexSet& lk_A, const SimplexSet& lk_X) {
  // fullness
  std::set<VertexId> sup;
  for (const auto& s : lk_A)
    for (VertexId v : s) sup.insert(v);
  for (const auto& s : lk_X) {
    bool inside = true;
    for (VertexId v : s)
      if (!sup.count(v)) { inside = false; break; }
    if (inside && !lk_A.count(s)) return false;
  }
  if (lk_X.empty()) return true;
  LinkComplex ambient = complex_from_simplex_set(lk_X);
  std::vector<VertexId> verts;
  std::vector<char> mask(static_cast<size_t>(ambient.complex.vertex_count()), 0);
  for (int i = 0; i < ambient.complex.vertex_count(); ++i)
    if (sup.count(ambient.vertex_map[static_cast<size_t>(i)])) {
      verts.push_back(i);
      mask[static_cast<size_t>(i)] = 1;
    }
  return midpoints_inside(ambient.complex, verts, mask);
}

static bool locally_3_convex_over(const SimplicialComplex& X, const std::vector<Simplex>& a_simplices) {
  SimplexSet universe_A(a_simplices.begin(), a_simplices.end());
  std::vector<Simplex> universe_vec(universe_A.begin(), universe_A.end());
  auto x_simplices = X.all_simplices();
  for (const auto& s : a_simplices) {
    SimplexSet lk_A = link_in(universe_vec, SimplexSet{s});
    SimplexSet lk_X = link_in(x_simplices, SimplexSet{s});
    if (!link_is_3_convex(lk_A, lk_X)) return false;
  }
  return true;
}

bool is_locally_3_convex(const Subcomplex& A) {
  return locally_3_convex_over(A.parent(), A.simplices());
}

bool is_locally_3_convex(const SimplicialComplex& X, const SimplexSet& S) {
  if (!is_full(X, S)) return false;
  std::vector<Simplex> list(S.begin(), S.end());
  return locally_3_convex_over(X, list);
}

bool is_convex(const Subcomplex& A) {
  if (A.size() <= 1) return true;
  return A.is_connected() && is_locally_3_convex(A);
}

bool is_geodesically_convex(const Subcomplex& A) {
  const auto& verts = A.vertices();
  for (size_t i = 0; i < verts.size(); ++i) {
    auto du = distances_from(A.parent(), verts[i]);
    for (size_t j = i + 1; j < verts.size(); ++j) {
      int d = du[static_cast<size_t>(verts[j])];
      if (d < 0) continue;  // no geodesics to contain
      auto dv = distances_from(A.parent(), verts[j]);
      for (int w = 0; w < A.parent().vertex_count(); ++w) {
        if (A.has_vertex(w)) continue;
        int a = du[static_cast<size_t>(w)], b = dv[static_cast<size_t>(w)];
        if (a >= 0 && b >= 0 && a + b == d) return false;
      }
    }
  }
  return true;
}

Subcomplex convex_hull(const SimplicialComplex& X, std::vector<VertexId> seed) {
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  if (!seed.empty()) {
    auto comp = X.component_ids();
    for (VertexId v : seed) {
      if (v < 0 || v >= X.vertex_count()) throw invalid_input("hull seed vertex out of range");
      if (comp[static_cast<size_t>(v)] != comp[static_cast<size_t>(seed.front())])
        throw no_path("hull seed spans several components");
    }
  }
  std::vector<char> in(static_cast<size_t>(X.vertex_count()), 0);
  for (VertexId v : seed) in[static_cast<size_t>(v)] = 1;
  std::vector<std::vector<int>> dist_cache(static_cast<size_t>(X.vertex_count()));
  auto dist_row = [&](VertexId v) -> const std::vector<int>& {
    auto& row = dist_cache[static_cast<size_t>(v)];
    if (row.empty() && X.vertex_count() > 0) row = distances_from(X, v);
    return row;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<VertexId> members;
    for (int v = 0; v < X.vertex_count(); ++v)
      if (in[static_cast<size_t>(v)]) members.push_back(v);
    for (size_t i = 0; i < members.size(); ++i) {
      const auto& du = dist_row(members[i]);
      for (size_t j = i + 1; j < members.size(); ++j) {
        const auto& dv = dist_row(members[j]);
        int d = du[static_cast<size_t>(members[j])];
        for (int w = 0; w < X.vertex_count(); ++w) {
          if (in[static_cast<size_t>(w)]) continue;
          int a = du[static_cast<size_t>(w)], b = dv[static_cast<size_t>(w)];
          if (a >= 0 && b >= 0 && a + b == d) {
            in[static_cast<size_t>(w)] = 1;
            grew = true;
          }
        }
      }
    }
  }
  std::vector<VertexId> verts;
  for (int v = 0; v < X.vertex_count(); ++v)
    if (in[static_cast<size_t>(v)]) verts.push_back(v);
  return Subcomplex(X, std::move(verts));
}

}  // namespace systolic
