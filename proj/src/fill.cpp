#include <algorithm>
#include <map>
#include <set>

#include "systolic/surface.hpp"

namespace systolic {

SurfaceMap Filling::as_surface_map(const SimplicialComplex&) const {
  SurfaceMap s;
  s.domain = disc.complex();
  s.assignment = assignment;
  s.domain_area = domain_area;
  s.injective_area = injective_area;
  return s;
}

namespace {

using Word = std::vector<VertexId>;

struct Cost {
  int domain = 0;
  int injective = 0;
  friend bool operator<(const Cost& a, const Cost& b) {
    return a.domain != b.domain ? a.domain < b.domain : a.injective < b.injective;
  }
  Cost operator+(const Cost& o) const { return {domain + o.domain, injective + o.injective}; }
};

enum class MoveKind { Close, Apex, Expand };

struct Move {
  MoveKind kind = MoveKind::Close;
  int apex = 0;        // canonical index for Apex
  VertexId image = 0;  // new vertex image for Expand
};

struct Entry {
  int lower_bound = 0;
  bool exact = false;
  Cost cost;
  Move move;
};

// Canonical representative of a cyclic word under rotation and reflection,
// with the index map back into the original word.
struct Canon {
  Word word;
  int rot = 0;
  int dir = 1;  // +1 forward, -1 reversed

  size_t orig_index(size_t i, size_t n) const {
    long long v = dir == 1 ? rot + static_cast<long long>(i) : rot - static_cast<long long>(i);
    return static_cast<size_t>(((v % static_cast<long long>(n)) + static_cast<long long>(n)) %
                               static_cast<long long>(n));
  }
};

Canon canonical_cyclic(const Word& w) {
  const size_t n = w.size();
  Canon best;
  bool have = false;
  Word cand(n);
  for (int dir : {1, -1}) {
    for (size_t r = 0; r < n; ++r) {
      for (size_t i = 0; i < n; ++i) {
        long long v = dir == 1 ? static_cast<long long>(r) + static_cast<long long>(i)
                               : static_cast<long long>(r) - static_cast<long long>(i);
        cand[i] = w[static_cast<size_t>(((v % static_cast<long long>(n)) + static_cast<long long>(n)) %
                                        static_cast<long long>(n))];
      }
      if (!have || cand < best.word) {
        best.word = cand;
        best.rot = static_cast<int>(r);
        best.dir = dir;
        have = true;
      }
    }
  }
  return best;
}

struct Searcher {
  const SimplicialComplex& X;
  std::map<Word, Entry>& memo;

  bool spans_simplex(VertexId a, VertexId b, VertexId c) const {
    Simplex s = normalized_simplex({a, b, c});
    return X.contains(s);
  }

  static int injective_gain(VertexId a, VertexId b, VertexId c) {
    return (a != b && a != c && b != c) ? 1 : 0;
  }

  int lower_bound(const Word& canon) const {
    int lb = static_cast<int>(canon.size()) - 2;
    auto it = memo.find(canon);
    if (it != memo.end()) lb = std::max(lb, it->second.lower_bound);
    return lb;
  }

  // Candidate images for a fresh interior vertex over the peel edge.
  std::vector<VertexId> expand_candidates(VertexId a, VertexId b) const {
    std::set<VertexId> out;
    auto try_add = [&](VertexId w) {
      if (spans_simplex(a, b, w)) out.insert(w);
    };
    try_add(a);
    try_add(b);
    for (VertexId w : X.neighbors(a)) try_add(w);
    if (a != b)
      for (VertexId w : X.neighbors(b)) try_add(w);
    return {out.begin(), out.end()};
  }

  std::optional<Cost> search(const Word& word, int budget) {
    Canon canon = canonical_cyclic(word);
    auto& entry = memo[canon.word];
    if (entry.exact) return entry.cost.domain <= budget ? std::optional<Cost>(entry.cost) : std::nullopt;
    int lb = std::max(entry.lower_bound, static_cast<int>(word.size()) - 2);
    if (lb > budget) {
      entry.lower_bound = std::max(entry.lower_bound, lb);
      return std::nullopt;
    }

    const Word& w = canon.word;
    const int m = static_cast<int>(w.size());
    std::optional<Cost> best;
    Move best_move;

    auto consider = [&](const Cost& c, const Move& mv) {
      if (c.domain > budget) return;
      if (!best || c < *best) {
        best = c;
        best_move = mv;
      }
    };

    if (m == 3) {
      if (spans_simplex(w[0], w[1], w[2]))
        consider({1, injective_gain(w[0], w[1], w[2])}, {MoveKind::Close, 0, 0});
    } else {
      for (int j = 2; j <= m - 1; ++j) {
        if (!spans_simplex(w[0], w[1], w[static_cast<size_t>(j)])) continue;
        Cost tri{1, injective_gain(w[0], w[1], w[static_cast<size_t>(j)])};
        if (j == 2 || j == m - 1) {
          Word rest;
          rest.reserve(static_cast<size_t>(m) - 1);
          for (int i = 0; i < m; ++i)
            if (i != (j == 2 ? 1 : 0)) rest.push_back(w[static_cast<size_t>(i)]);
          auto sub = search(rest, budget - 1);
          if (sub) consider(tri + *sub, {MoveKind::Apex, j, 0});
        } else {
          Word a(w.begin() + 1, w.begin() + j + 1);
          Word b(w.begin() + j, w.end());
          b.push_back(w[0]);
          Canon cb = canonical_cyclic(b);
          auto ca_cost = search(a, budget - 1 - lower_bound(cb.word));
          if (!ca_cost) continue;
          auto cb_cost = search(b, budget - 1 - ca_cost->domain);
          if (!cb_cost) continue;
          consider(tri + *ca_cost + *cb_cost, {MoveKind::Apex, j, 0});
        }
      }
    }

    // grow inward over the peel edge
    if (m - 2 + 1 <= budget) {
      for (VertexId img : expand_candidates(w[0], w[1])) {
        Cost tri{1, injective_gain(w[0], w[1], img)};
        Word grown;
        grown.reserve(static_cast<size_t>(m) + 1);
        grown.push_back(w[0]);
        grown.push_back(img);
        for (int i = 1; i < m; ++i) grown.push_back(w[static_cast<size_t>(i)]);
        auto sub = search(grown, budget - 1);
        if (sub) consider(tri + *sub, {MoveKind::Expand, 0, img});
      }
    }

    if (best) {
      entry.exact = true;
      entry.cost = *best;
      entry.move = best_move;
      return best;
    }
    entry.lower_bound = std::max(entry.lower_bound, budget + 1);
    return std::nullopt;
  }
};

struct Builder {
  const SimplicialComplex& X;
  std::map<Word, Entry>& memo;
  std::vector<Simplex> triangles;
  std::vector<VertexId> assignment;  // domain id -> image
  int injective = 0;

  VertexId fresh(VertexId image) {
    assignment.push_back(image);
    return static_cast<VertexId>(assignment.size() - 1);
  }

  // region: (domain id, image) around the cycle
  void replay(std::vector<std::pair<VertexId, VertexId>> region) {
    Word word;
    word.reserve(region.size());
    for (auto& [d, img] : region) word.push_back(img);
    Canon canon = canonical_cyclic(word);
    const auto& entry = memo.at(canon.word);

    const size_t m = region.size();
    std::vector<std::pair<VertexId, VertexId>> rc(m);
    for (size_t i = 0; i < m; ++i) rc[i] = region[canon.orig_index(i, m)];

    auto add_triangle = [&](VertexId a, VertexId b, VertexId c) {
      triangles.push_back(normalized_simplex({a, b, c}));
      injective += Searcher::injective_gain(assignment[static_cast<size_t>(a)],
                                            assignment[static_cast<size_t>(b)],
                                            assignment[static_cast<size_t>(c)]);
    };

    switch (entry.move.kind) {
      case MoveKind::Close:
        add_triangle(rc[0].first, rc[1].first, rc[2].first);
        return;
      case MoveKind::Apex: {
        const int j = entry.move.apex;
        add_triangle(rc[0].first, rc[1].first, rc[static_cast<size_t>(j)].first);
        if (j == 2 || j == static_cast<int>(m) - 1) {
          std::vector<std::pair<VertexId, VertexId>> rest;
          for (size_t i = 0; i < m; ++i)
            if (i != (j == 2 ? size_t{1} : size_t{0})) rest.push_back(rc[i]);
          replay(std::move(rest));
        } else {
          std::vector<std::pair<VertexId, VertexId>> a(rc.begin() + 1, rc.begin() + j + 1);
          std::vector<std::pair<VertexId, VertexId>> b(rc.begin() + j, rc.end());
          b.push_back(rc[0]);
          replay(std::move(a));
          replay(std::move(b));
        }
        return;
      }
      case MoveKind::Expand: {
        VertexId t = fresh(entry.move.image);
        add_triangle(rc[0].first, rc[1].first, t);
        std::vector<std::pair<VertexId, VertexId>> grown;
        grown.reserve(m + 1);
        grown.push_back(rc[0]);
        grown.push_back({t, entry.move.image});
        for (size_t i = 1; i < m; ++i) grown.push_back(rc[i]);
        replay(std::move(grown));
        return;
      }
    }
  }
};

void validate_cycle(const SimplicialComplex& X, const std::vector<VertexId>& cycle) {
  if (cycle.size() < 3) throw invalid_input("cycle needs at least three vertices");
  std::set<VertexId> seen;
  for (VertexId v : cycle) {
    if (v < 0 || v >= X.vertex_count()) throw invalid_input("cycle vertex out of range");
    if (!seen.insert(v).second) throw invalid_input("cycle vertex repeated");
  }
  for (size_t i = 0; i < cycle.size(); ++i)
    if (!X.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]))
      throw invalid_input("consecutive cycle vertices not adjacent");
}

}  // namespace

struct FillContext::Impl {
  std::map<Word, Entry> memo;
};

FillContext::FillContext(const SimplicialComplex& X, int area_cap)
    : X_(&X), cap_(area_cap), impl_(std::make_shared<Impl>()) {}

std::optional<Filling> FillContext::fill(const std::vector<VertexId>& cycle) {
  validate_cycle(*X_, cycle);
  Searcher searcher{*X_, impl_->memo};
  std::optional<Cost> solved;
  for (int budget = static_cast<int>(cycle.size()) - 2; budget <= cap_; ++budget) {
    solved = searcher.search(cycle, budget);
    if (solved) break;
  }
  if (!solved) return std::nullopt;

  Builder builder{*X_, impl_->memo, {}, {}, 0};
  std::vector<std::pair<VertexId, VertexId>> region;
  for (size_t i = 0; i < cycle.size(); ++i) {
    builder.fresh(cycle[i]);
    region.push_back({static_cast<VertexId>(i), cycle[i]});
  }
  builder.replay(region);

  Filling out;
  out.assignment = builder.assignment;
  out.domain_area = static_cast<int>(builder.triangles.size());
  out.injective_area = builder.injective;
  out.disc = TriangulatedDisc::from_complex(SimplicialComplex::from_simplices(
      builder.triangles, static_cast<int>(builder.assignment.size())));
  return out;
}

std::optional<Filling> fill_cycle_minimal(const SimplicialComplex& X,
                                          const std::vector<VertexId>& cycle, int area_cap) {
  return FillContext(X, area_cap).fill(cycle);
}

}  // namespace systolic
