#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace systolic {

// Vertex ids are dense 0..n-1 within a complex.
using VertexId = int;

// A simplex is a strictly ascending list of vertex ids. Dimension = size - 1.
using Simplex = std::vector<VertexId>;

// Ordered set so every derived sequence is deterministic.
using SimplexSet = std::set<Simplex>;

struct invalid_input : std::invalid_argument {
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

struct no_path : std::runtime_error {
  explicit no_path(const std::string& what) : std::runtime_error(what) {}
};

// Three-valued answer for questions we refuse to fake (simple connectivity).
enum class Tri { False = 0, True = 1, Unknown = 2 };

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "unknown";
  }
}

inline Simplex make_simplex(std::initializer_list<VertexId> vs) {
  Simplex s(vs);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline Simplex normalized_simplex(Simplex s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool is_strictly_ascending(const Simplex& s) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

// a \subseteq b, both strictly ascending.
inline bool is_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline int dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

// All nonempty subsets of a simplex (its faces, including itself).
std::vector<Simplex> faces_of(const Simplex& s);

}  // namespace systolic
