#include "systolic/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace systolic {

std::vector<Simplex> faces_of(const Simplex& s) {
  std::vector<Simplex> out;
  const size_t n = s.size();
  out.reserve((size_t{1} << n) - 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Simplex f;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) f.push_back(s[i]);
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<Certificate> certificate_from_string(const std::string& s) {
  if (s == "disc") return Certificate::Disc;
  if (s == "ball") return Certificate::Ball;
  if (s == "cone") return Certificate::Cone;
  return std::nullopt;
}

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::Disc: return "disc";
    case Certificate::Ball: return "ball";
    default: return "cone";
  }
}

// ---- construction ----

SimplicialComplex SimplicialComplex::from_maximal(int vertex_count, std::vector<Simplex> maximal) {
  if (vertex_count < 0) throw invalid_input("negative vertex count");
  std::vector<char> seen(static_cast<size_t>(vertex_count), 0);
  for (const auto& s : maximal) {
    if (s.empty()) throw invalid_input("empty simplex in maximal list");
    if (!is_strictly_ascending(s)) throw invalid_input("simplex vertices not strictly ascending");
    if (s.front() < 0 || s.back() >= vertex_count) throw invalid_input("vertex id out of range");
    for (VertexId v : s) seen[static_cast<size_t>(v)] = 1;
  }
  for (int v = 0; v < vertex_count; ++v)
    if (!seen[static_cast<size_t>(v)])
      throw invalid_input("vertex " + std::to_string(v) + " belongs to no maximal simplex");
  std::sort(maximal.begin(), maximal.end());
  for (size_t i = 0; i + 1 < maximal.size(); ++i)
    if (maximal[i] == maximal[i + 1]) throw invalid_input("duplicate maximal simplex");
  for (const auto& a : maximal)
    for (const auto& b : maximal)
      if (&a != &b && is_subset(a, b))
        throw invalid_input("maximal simplex is a face of another");

  SimplicialComplex X;
  X.vertex_count_ = vertex_count;
  X.maximal_ = std::move(maximal);
  X.build_indices();
  return X;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices, int vertex_count) {
  for (auto& s : simplices) s = normalized_simplex(std::move(s));
  std::sort(simplices.begin(), simplices.end(),
            [](const Simplex& a, const Simplex& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  std::vector<Simplex> maximal;
  for (auto& s : simplices) {
    if (s.empty()) continue;
    bool dominated = false;
    for (const auto& m : maximal)
      if (is_subset(s, m)) { dominated = true; break; }
    if (!dominated) maximal.push_back(std::move(s));
  }
  int n = vertex_count;
  if (n < 0) {
    n = 0;
    for (const auto& m : maximal) n = std::max(n, m.back() + 1);
  }
  return from_maximal(n, std::move(maximal));
}

void SimplicialComplex::build_indices() {
  neighbors_.assign(static_cast<size_t>(vertex_count_), {});
  incident_maximal_.assign(static_cast<size_t>(vertex_count_), {});
  std::set<std::pair<VertexId, VertexId>> edge_set;
  for (size_t i = 0; i < maximal_.size(); ++i) {
    const auto& m = maximal_[i];
    for (VertexId v : m) incident_maximal_[static_cast<size_t>(v)].push_back(static_cast<int>(i));
    for (size_t a = 0; a < m.size(); ++a)
      for (size_t b = a + 1; b < m.size(); ++b)
        edge_set.insert({m[a], m[b]});
  }
  for (const auto& [u, v] : edge_set) {
    neighbors_[static_cast<size_t>(u)].push_back(v);
    neighbors_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& ns : neighbors_) std::sort(ns.begin(), ns.end());
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& m : maximal_) d = std::max(d, dim(m));
  return d;
}

bool SimplicialComplex::adjacent(VertexId u, VertexId v) const {
  if (u == v) return false;
  const auto& ns = neighbors_.at(static_cast<size_t>(u));
  return std::binary_search(ns.begin(), ns.end(), v);
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty() || !is_strictly_ascending(s)) return false;
  if (s.front() < 0 || s.back() >= vertex_count_) return false;
  for (int idx : incident_maximal_[static_cast<size_t>(s.front())])
    if (is_subset(s, maximal_[static_cast<size_t>(idx)])) return true;
  return false;
}

std::vector<Simplex> SimplicialComplex::edges() const {
  std::vector<Simplex> out;
  for (int u = 0; u < vertex_count_; ++u)
    for (VertexId v : neighbors_[static_cast<size_t>(u)])
      if (u < v) out.push_back({u, v});
  return out;
}

std::vector<Simplex> SimplicialComplex::triangles() const {
  std::set<Simplex> tris;
  for (const auto& m : maximal_) {
    if (m.size() < 3) continue;
    for (size_t a = 0; a < m.size(); ++a)
      for (size_t b = a + 1; b < m.size(); ++b)
        for (size_t c = b + 1; c < m.size(); ++c)
          tris.insert({m[a], m[b], m[c]});
  }
  return {tris.begin(), tris.end()};
}

std::vector<Simplex> SimplicialComplex::all_simplices(int max_dim) const {
  std::set<Simplex> out;
  for (const auto& m : maximal_) {
    for (auto& f : faces_of(m)) {
      if (max_dim >= 0 && dim(f) > max_dim) continue;
      out.insert(std::move(f));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> SimplicialComplex::component_ids() const {
  std::vector<int> comp(static_cast<size_t>(vertex_count_), -1);
  int next = 0;
  for (int s = 0; s < vertex_count_; ++s) {
    if (comp[static_cast<size_t>(s)] != -1) continue;
    std::queue<VertexId> q;
    q.push(s);
    comp[static_cast<size_t>(s)] = next;
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      for (VertexId v : neighbors_[static_cast<size_t>(u)])
        if (comp[static_cast<size_t>(v)] == -1) {
          comp[static_cast<size_t>(v)] = next;
          q.push(v);
        }
    }
    ++next;
  }
  return comp;
}

bool SimplicialComplex::is_connected() const {
  if (vertex_count_ == 0) return true;
  auto comp = component_ids();
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

// ---- closure / star / link ----

static void require_members(const SimplicialComplex& X, const SimplexSet& S) {
  for (const auto& s : S)
    if (!X.contains(s)) throw invalid_input("simplex set member not in complex");
}

SimplexSet closure(const SimplicialComplex& X, const SimplexSet& S) {
  require_members(X, S);
  SimplexSet out;
  for (const auto& s : S)
    for (auto& f : faces_of(s)) out.insert(std::move(f));
  return out;
}

// tau meets s <=> tau contains the face (tau ∩ s) of s.
static bool meets(const Simplex& tau, const Simplex& s) {
  auto it = tau.begin();
  for (VertexId v : s) {
    it = std::lower_bound(it, tau.end(), v);
    if (it == tau.end()) return false;
    if (*it == v) return true;
  }
  return false;
}

static bool meets_any(const Simplex& tau, const SimplexSet& S) {
  for (const auto& s : S)
    if (meets(tau, s)) return true;
  return false;
}

SimplexSet star(const SimplicialComplex& X, const SimplexSet& S) {
  require_members(X, S);
  SimplexSet out;
  for (auto& tau : X.all_simplices())
    if (meets_any(tau, S)) out.insert(std::move(tau));
  return out;
}

SimplexSet link(const SimplicialComplex& X, const SimplexSet& S) {
  SimplexSet st = star(X, S);
  SimplexSet cl_st;
  for (const auto& t : st)
    for (auto& f : faces_of(t)) cl_st.insert(std::move(f));
  SimplexSet st_cl = star(X, closure(X, S));
  SimplexSet out;
  std::set_difference(cl_st.begin(), cl_st.end(), st_cl.begin(), st_cl.end(),
                      std::inserter(out, out.end()));
  return out;
}

SimplexSet closure_in(const std::vector<Simplex>& universe, const SimplexSet& S) {
  (void)universe;  // universe is downward closed, so faces stay inside it
  SimplexSet out;
  for (const auto& s : S)
    for (auto& f : faces_of(s)) out.insert(std::move(f));
  return out;
}

SimplexSet star_in(const std::vector<Simplex>& universe, const SimplexSet& S) {
  SimplexSet out;
  for (const auto& tau : universe)
    if (meets_any(tau, S)) out.insert(tau);
  return out;
}

SimplexSet link_in(const std::vector<Simplex>& universe, const SimplexSet& S) {
  SimplexSet st = star_in(universe, S);
  SimplexSet cl_st = closure_in(universe, st);
  SimplexSet st_cl = star_in(universe, closure_in(universe, S));
  SimplexSet out;
  std::set_difference(cl_st.begin(), cl_st.end(), st_cl.begin(), st_cl.end(),
                      std::inserter(out, out.end()));
  return out;
}

LinkComplex complex_from_simplex_set(const SimplexSet& S) {
  LinkComplex out;
  std::map<VertexId, int> index;
  for (const auto& s : S)
    for (VertexId v : s) index.emplace(v, 0);
  int next = 0;
  for (auto& [v, idx] : index) {
    idx = next++;
    out.vertex_map.push_back(v);
  }
  std::vector<Simplex> renamed;
  renamed.reserve(S.size());
  for (const auto& s : S) {
    Simplex r;
    r.reserve(s.size());
    for (VertexId v : s) r.push_back(index.at(v));
    renamed.push_back(std::move(r));
  }
  out.complex = SimplicialComplex::from_simplices(std::move(renamed), next);
  return out;
}

LinkComplex link_complex(const SimplicialComplex& X, const Simplex& s) {
  return complex_from_simplex_set(link(X, SimplexSet{s}));
}

// ---- flagness ----

namespace {

// Bron-Kerbosch with pivoting; reports maximal cliques.
struct CliqueFinder {
  const SimplicialComplex& X;
  std::vector<std::vector<char>> adj;
  bool ok = true;

  explicit CliqueFinder(const SimplicialComplex& x) : X(x) {
    int n = X.vertex_count();
    adj.assign(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
    for (int u = 0; u < n; ++u)
      for (VertexId v : X.neighbors(u)) adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
  }

  void run() {
    std::vector<VertexId> r, p, x;
    for (int v = 0; v < X.vertex_count(); ++v) p.push_back(v);
    expand(r, p, x);
  }

  void expand(std::vector<VertexId>& r, std::vector<VertexId> p, std::vector<VertexId> x) {
    if (!ok) return;
    if (p.empty() && x.empty()) {
      if (!r.empty()) {
        Simplex clique(r);
        std::sort(clique.begin(), clique.end());
        if (!X.contains(clique)) ok = false;
      }
      return;
    }
    VertexId pivot = -1;
    size_t best = 0;
    for (VertexId u : p) {
      size_t cnt = 0;
      for (VertexId v : p)
        if (adj[static_cast<size_t>(u)][static_cast<size_t>(v)]) ++cnt;
      if (pivot == -1 || cnt > best) { pivot = u; best = cnt; }
    }
    std::vector<VertexId> candidates;
    for (VertexId v : p)
      if (pivot == -1 || !adj[static_cast<size_t>(pivot)][static_cast<size_t>(v)]) candidates.push_back(v);
    for (VertexId v : candidates) {
      std::vector<VertexId> np, nx;
      for (VertexId w : p)
        if (adj[static_cast<size_t>(v)][static_cast<size_t>(w)]) np.push_back(w);
      for (VertexId w : x)
        if (adj[static_cast<size_t>(v)][static_cast<size_t>(w)]) nx.push_back(w);
      r.push_back(v);
      expand(r, np, nx);
      r.pop_back();
      if (!ok) return;
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }
};

}  // namespace

bool is_flag(const SimplicialComplex& X) {
  CliqueFinder f(X);
  f.run();
  return f.ok;
}

// ---- induced cycles ----

std::vector<std::vector<VertexId>> induced_cycles_up_to(const SimplicialComplex& X, int max_len) {
  if (max_len < 4) throw invalid_input("cycle length bound must be at least 4");
  std::vector<std::vector<VertexId>> found;
  std::vector<VertexId> path;
  std::vector<char> in_path(static_cast<size_t>(X.vertex_count()), 0);

  // Paths start at the cycle's minimal vertex; reflection is killed by
  // requiring path[1] < last vertex at close time.
  auto extend = [&](auto&& self, VertexId start) -> void {
    VertexId tail = path.back();
    for (VertexId w : X.neighbors(tail)) {
      if (w <= start || in_path[static_cast<size_t>(w)]) continue;
      if (path.size() >= 2) {
        bool chord = false;
        for (size_t i = 1; i + 1 < path.size(); ++i)
          if (X.adjacent(w, path[i])) { chord = true; break; }
        if (chord) continue;
        if (X.adjacent(w, start)) {
          if (path.size() + 1 >= 4 && path[1] < w) {
            std::vector<VertexId> cycle(path);
            cycle.push_back(w);
            found.push_back(std::move(cycle));
          }
          // any longer cycle through w would carry the chord (w, start)
          continue;
        }
      }
      if (path.size() + 1 >= static_cast<size_t>(max_len)) continue;
      path.push_back(w);
      in_path[static_cast<size_t>(w)] = 1;
      self(self, start);
      in_path[static_cast<size_t>(w)] = 0;
      path.pop_back();
    }
  };

  for (int s = 0; s < X.vertex_count(); ++s) {
    path.assign(1, s);
    in_path.assign(static_cast<size_t>(X.vertex_count()), 0);
    in_path[static_cast<size_t>(s)] = 1;
    extend(extend, s);
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool is_k_large(const SimplicialComplex& X, int k) {
  if (k < 4) throw invalid_input("k-largeness requires k >= 4");
  if (!is_flag(X)) return false;
  if (k == 4) return true;
  return induced_cycles_up_to(X, k - 1).empty();
}

bool is_locally_k_large(const SimplicialComplex& X, int k) {
  for (const auto& s : X.all_simplices()) {
    if (!is_k_large(link_complex(X, s).complex, k)) return false;
  }
  return true;
}

// ---- integral H1 ----

namespace {

// Smith normal form diagonal of a small integer matrix. Entries stay tiny for
// simplicial boundary matrices, but reduce by the smallest pivot anyway.
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
  std::vector<long long> diag;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r0 = 0, c0 = 0;
  while (r0 < rows && c0 < cols) {
    size_t pr = rows, pc = cols;
    long long best = 0;
    for (size_t i = r0; i < rows; ++i)
      for (size_t j = c0; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < std::abs(best))) {
          best = m[i][j];
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(m[r0], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
    bool clean = true;
    for (size_t i = r0 + 1; i < rows; ++i) {
      long long q = m[i][c0] / m[r0][c0];
      if (q != 0)
        for (size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
      if (m[i][c0] != 0) clean = false;
    }
    for (size_t j = c0 + 1; j < cols; ++j) {
      long long q = m[r0][j] / m[r0][c0];
      if (q != 0)
        for (size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
      if (m[r0][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainder left somewhere, pick a new pivot
    diag.push_back(std::abs(m[r0][c0]));
    ++r0;
    ++c0;
  }
  return diag;
}

}  // namespace

H1Summary homology_h1(const SimplicialComplex& X) {
  auto es = X.edges();
  auto ts = X.triangles();
  std::map<Simplex, int> edge_index;
  for (size_t i = 0; i < es.size(); ++i) edge_index[es[i]] = static_cast<int>(i);

  // d1: edges -> vertices, d2: triangles -> edges.
  std::vector<std::vector<long long>> d1(static_cast<size_t>(X.vertex_count()),
                                         std::vector<long long>(es.size(), 0));
  for (size_t j = 0; j < es.size(); ++j) {
    d1[static_cast<size_t>(es[j][0])][j] = -1;
    d1[static_cast<size_t>(es[j][1])][j] = 1;
  }
  std::vector<std::vector<long long>> d2(es.size(), std::vector<long long>(ts.size(), 0));
  for (size_t j = 0; j < ts.size(); ++j) {
    const auto& t = ts[j];
    d2[static_cast<size_t>(edge_index[{t[1], t[2]}])][j] += 1;
    d2[static_cast<size_t>(edge_index[{t[0], t[2]}])][j] -= 1;
    d2[static_cast<size_t>(edge_index[{t[0], t[1]}])][j] += 1;
  }

  auto diag1 = smith_diagonal(std::move(d1));
  auto diag2 = smith_diagonal(d2);
  long long rank1 = static_cast<long long>(diag1.size());
  long long rank2 = static_cast<long long>(diag2.size());

  H1Summary h;
  h.betti1 = static_cast<long long>(es.size()) - rank1 - rank2;
  for (long long f : diag2)
    if (f != 1) h.has_torsion = true;
  return h;
}

// ---- collapsibility ----

bool collapses_to_point(const SimplicialComplex& X, long long budget) {
  std::set<Simplex> cells;
  for (auto& s : X.all_simplices()) cells.insert(std::move(s));
  if (cells.empty()) return false;
  bool progress = true;
  while (progress && cells.size() > 1) {
    progress = false;
    // free face: a cell properly contained in exactly one other cell
    for (auto it = cells.begin(); it != cells.end(); ++it) {
      if (budget <= 0) return false;
      const Simplex* only = nullptr;
      int count = 0;
      for (const auto& t : cells) {
        if (t.size() <= it->size()) continue;
        if (is_subset(*it, t)) {
          ++count;
          only = &t;
          if (count > 1) break;
        }
      }
      if (count == 1) {
        Simplex a = *it, b = *only;
        cells.erase(a);
        cells.erase(b);
        --budget;
        progress = true;
        break;
      }
    }
  }
  return cells.size() == 1 && cells.begin()->size() == 1;
}

// ---- edge-path group reduction ----

// Generators are non-tree edges; relators come from triangles. Budgeted
// Tietze-style elimination: a generator occurring exactly once in some
// relator is substituted away. Trivial group => simply connected.
static bool edge_path_group_trivial(const SimplicialComplex& X, long long& budget) {
  int n = X.vertex_count();
  std::vector<int> parent(static_cast<size_t>(n), -1);
  std::vector<char> visited(static_cast<size_t>(n), 0);
  std::queue<VertexId> q;
  if (n > 0) {
    q.push(0);
    visited[0] = 1;
  }
  std::set<std::pair<VertexId, VertexId>> tree;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId v : X.neighbors(u))
      if (!visited[static_cast<size_t>(v)]) {
        visited[static_cast<size_t>(v)] = 1;
        parent[static_cast<size_t>(v)] = u;
        tree.insert({std::min(u, v), std::max(u, v)});
        q.push(v);
      }
  }

  std::map<std::pair<VertexId, VertexId>, int> gen_of_edge;
  int gen_count = 0;
  for (const auto& e : X.edges()) {
    std::pair<VertexId, VertexId> key{e[0], e[1]};
    if (!tree.count(key)) gen_of_edge[key] = gen_count++;
  }
  if (gen_count == 0) return true;

  // word entries: +-(g+1)
  auto sym = [&](VertexId a, VertexId b) -> int {
    auto it = gen_of_edge.find({std::min(a, b), std::max(a, b)});
    if (it == gen_of_edge.end()) return 0;
    int g = it->second + 1;
    return a < b ? g : -g;
  };

  std::vector<std::vector<int>> relators;
  for (const auto& t : X.triangles()) {
    std::vector<int> w;
    for (int s : {sym(t[0], t[1]), sym(t[1], t[2]), sym(t[2], t[0])})
      if (s != 0) w.push_back(s);
    if (!w.empty()) relators.push_back(std::move(w));
  }

  auto reduce = [&](std::vector<int>& w) {
    bool changed = true;
    while (changed && !w.empty()) {
      changed = false;
      std::vector<int> out;
      for (int s : w) {
        if (!out.empty() && out.back() == -s) {
          out.pop_back();
          changed = true;
        } else {
          out.push_back(s);
        }
      }
      while (out.size() >= 2 && out.front() == -out.back()) {
        out.erase(out.begin());
        out.pop_back();
        changed = true;
      }
      w = std::move(out);
    }
  };

  std::set<int> alive;
  for (int g = 1; g <= gen_count; ++g) alive.insert(g);

  bool progress = true;
  while (progress && !alive.empty()) {
    progress = false;
    for (auto& r : relators) reduce(r);
    relators.erase(std::remove_if(relators.begin(), relators.end(),
                                  [](const std::vector<int>& w) { return w.empty(); }),
                   relators.end());
    for (size_t ri = 0; ri < relators.size() && !progress; ++ri) {
      const auto& r = relators[ri];
      for (size_t i = 0; i < r.size(); ++i) {
        int g = std::abs(r[i]);
        int occurrences = 0;
        for (int s : r)
          if (std::abs(s) == g) ++occurrences;
        if (occurrences != 1) continue;
        // g = inverse of the rest of the cyclic word
        std::vector<int> rest;
        for (size_t j = 1; j < r.size(); ++j) rest.push_back(r[(i + j) % r.size()]);
        std::vector<int> value;  // g equals value
        for (auto it = rest.rbegin(); it != rest.rend(); ++it) value.push_back(-*it);
        if (r[i] < 0)
          for (auto& s : value) s = -s;  // stored g^-1 = value' => invert
        if (r[i] < 0) std::reverse(value.begin(), value.end());
        std::vector<std::vector<int>> next;
        for (size_t rj = 0; rj < relators.size(); ++rj) {
          if (rj == ri) continue;
          std::vector<int> w;
          for (int s : relators[rj]) {
            budget -= 1;
            if (budget <= 0) return false;
            if (std::abs(s) != g) {
              w.push_back(s);
            } else if (s > 0) {
              w.insert(w.end(), value.begin(), value.end());
            } else {
              for (auto it = value.rbegin(); it != value.rend(); ++it) w.push_back(-*it);
            }
          }
          next.push_back(std::move(w));
        }
        relators = std::move(next);
        alive.erase(g);
        progress = true;
        break;
      }
    }
  }
  return alive.empty();
}

bool edge_path_group_trivializes(const SimplicialComplex& X, long long budget) {
  return edge_path_group_trivial(X, budget);
}

bool validate_certificate(const SimplicialComplex& X, Certificate c, long long budget) {
  switch (c) {
    case Certificate::Cone: {
      if (X.maximal_simplices().empty()) return false;
      Simplex common = X.maximal_simplices().front();
      for (const auto& m : X.maximal_simplices()) {
        Simplex next;
        std::set_intersection(common.begin(), common.end(), m.begin(), m.end(),
                              std::back_inserter(next));
        common = std::move(next);
        if (common.empty()) return false;
      }
      return true;
    }
    case Certificate::Disc:
    case Certificate::Ball:
      // validated constructively: both collapse to a point
      return collapses_to_point(X, budget);
  }
  return false;
}

Tri is_simply_connected(const SimplicialComplex& X, long long budget) {
  if (!X.is_connected()) throw invalid_input("simple connectivity requires a connected complex");
  if (X.vertex_count() <= 1) return Tri::True;
  if (X.sc_certificate() && validate_certificate(X, *X.sc_certificate(), std::max<long long>(budget, 10000)))
    return Tri::True;
  if (!homology_h1(X).trivial()) return Tri::False;
  if (budget <= 0) return Tri::Unknown;
  long long half = budget / 2;
  if (collapses_to_point(X, half > 0 ? half : budget)) return Tri::True;
  long long rest = budget - half;
  if (edge_path_group_trivial(X, rest)) return Tri::True;
  return Tri::Unknown;
}

Tri is_k_systolic(const SimplicialComplex& X, int k, long long budget) {
  if (k < 4) throw invalid_input("k-systolic requires k >= 4");
  if (!X.is_connected()) return Tri::False;
  if (!is_locally_k_large(X, k)) return Tri::False;
  return is_simply_connected(X, budget);
}

}  // namespace systolic
