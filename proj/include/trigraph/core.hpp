#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trigraph {

using Vertex = int;

/// Tri-valued adjacency: every unordered pair of distinct vertices is
/// strongly adjacent (+1), semiadjacent (0), or strongly antiadjacent (-1).
enum class Adjacency : std::int8_t {
  StrongAnti = -1,
  Semi = 0,
  Strong = 1,
};

inline Adjacency negated(Adjacency a) {
  return static_cast<Adjacency>(-static_cast<int>(a));
}
inline bool adjacent(Adjacency a) { return a != Adjacency::StrongAnti; }
inline bool antiadjacent(Adjacency a) { return a != Adjacency::Strong; }
inline bool strongly_adjacent(Adjacency a) { return a == Adjacency::Strong; }
inline bool strongly_antiadjacent(Adjacency a) {
  return a == Adjacency::StrongAnti;
}

inline const char* to_string(Adjacency a) {
  switch (a) {
    case Adjacency::Strong: return "strong";
    case Adjacency::Semi: return "semi";
    case Adjacency::StrongAnti: return "strong-anti";
  }
  return "?";
}

/// Structural rejection: disconnected or degenerate input, or a merge /
/// contraction step that found the input outside the algorithm's domain.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Brute-force enumerators refuse inputs above their configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sorted duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> xs) : v_(xs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> xs) : v_(std::move(xs)) {
    normalize();
  }

  static VertexSet full(int n) {
    std::vector<Vertex> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    VertexSet s;
    s.v_ = std::move(v);
    return s;
  }

  bool contains(Vertex x) const {
    return std::binary_search(v_.begin(), v_.end(), x);
  }
  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  Vertex operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<Vertex>& items() const { return v_; }

  bool operator==(const VertexSet& o) const { return v_ == o.v_; }
  bool operator!=(const VertexSet& o) const { return v_ != o.v_; }
  bool operator<(const VertexSet& o) const { return v_ < o.v_; }

  bool intersects(const VertexSet& o) const {
    auto i = v_.begin();
    auto j = o.v_.begin();
    while (i != v_.end() && j != o.v_.end()) {
      if (*i < *j)
        ++i;
      else if (*j < *i)
        ++j;
      else
        return true;
    }
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
  }

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(),
                   std::back_inserter(r.v_));
    return r;
  }
  friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(),
                          std::back_inserter(r.v_));
    return r;
  }
  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(),
                        std::back_inserter(r.v_));
    return r;
  }

  /// All vertices of 0..n-1 not in this set.
  VertexSet complement_in(int n) const {
    VertexSet r;
    auto it = v_.begin();
    for (Vertex x = 0; x < n; ++x) {
      if (it != v_.end() && *it == x)
        ++it;
      else
        r.v_.push_back(x);
    }
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v_[i]);
    }
    return s;
  }

 private:
  void normalize() {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }
  std::vector<Vertex> v_;
};

struct PairValue {
  Vertex u;
  Vertex v;
  Adjacency value;
};

/// Immutable trigraph on vertices 0..n-1.  Stores the adjacency both as a
/// dense symmetric matrix (constant-time theta queries) and as per-vertex
/// strong-neighbour lists plus the unique semiadjacent partner, if any
/// (linear-time neighbourhood scans).  Semiadjacent pairs form a matching;
/// constructing anything else throws.
class Trigraph {
 public:
  explicit Trigraph(int n, const std::vector<PairValue>& pairs = {})
      : n_(n),
        theta_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1),
        strong_(static_cast<std::size_t>(n)),
        semi_partner_(static_cast<std::size_t>(n), -1),
        m_(0) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    std::vector<char> seen(theta_.size(), 0);
    for (const auto& p : pairs) {
      check_vertex(p.u);
      check_vertex(p.v);
      if (p.u == p.v)
        throw std::invalid_argument("self-pair " + std::to_string(p.u));
      const auto idx = cell(p.u, p.v);
      if (seen[idx])
        throw std::invalid_argument("duplicate pair " + std::to_string(p.u) +
                                    " " + std::to_string(p.v));
      seen[idx] = seen[cell(p.v, p.u)] = 1;
      if (p.value == Adjacency::Semi) {
        if (semi_partner_[static_cast<std::size_t>(p.u)] != -1 ||
            semi_partner_[static_cast<std::size_t>(p.v)] != -1)
          throw std::invalid_argument(
              "semiedges must form a matching: vertex " +
              std::to_string(semi_partner_[static_cast<std::size_t>(p.u)] != -1
                                 ? p.u
                                 : p.v) +
              " has two semiadjacent partners");
        semi_partner_[static_cast<std::size_t>(p.u)] = p.v;
        semi_partner_[static_cast<std::size_t>(p.v)] = p.u;
      }
      theta_[cell(p.u, p.v)] = theta_[cell(p.v, p.u)] =
          static_cast<std::int8_t>(p.value);
      if (p.value != Adjacency::StrongAnti) ++m_;
      if (p.value == Adjacency::Strong) {
        strong_[static_cast<std::size_t>(p.u)].push_back(p.v);
        strong_[static_cast<std::size_t>(p.v)].push_back(p.u);
      }
    }
    for (auto& lst : strong_) std::sort(lst.begin(), lst.end());
  }

  int vertex_count() const { return n_; }

  /// Number of adjacent (strong or semi) unordered pairs.
  int adjacent_pair_count() const { return m_; }

  Adjacency theta(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw std::invalid_argument("theta is undefined on the self-pair " +
                                  std::to_string(u));
    return static_cast<Adjacency>(theta_[cell(u, v)]);
  }

  const std::vector<Vertex>& strong_neighbors(Vertex v) const {
    check_vertex(v);
    return strong_[static_cast<std::size_t>(v)];
  }

  /// The unique semiadjacent partner of v, or -1.
  Vertex semi_partner(Vertex v) const {
    check_vertex(v);
    return semi_partner_[static_cast<std::size_t>(v)];
  }

  /// Strong and semi neighbours, ascending.
  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> r = strong_neighbors(v);
    const Vertex sp = semi_partner(v);
    if (sp != -1) {
      r.insert(std::upper_bound(r.begin(), r.end(), sp), sp);
    }
    return r;
  }

  int degree(Vertex v) const {
    return static_cast<int>(strong_neighbors(v).size()) +
           (semi_partner(v) != -1 ? 1 : 0);
  }

  std::vector<PairValue> pairs() const {
    std::vector<PairValue> r;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) {
        const auto a = static_cast<Adjacency>(theta_[cell(u, v)]);
        if (a != Adjacency::StrongAnti) r.push_back({u, v, a});
      }
    return r;
  }

  bool operator==(const Trigraph& o) const {
    return n_ == o.n_ && theta_ == o.theta_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range 0.." + std::to_string(n_ - 1));
  }
  std::size_t cell(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  int n_;
  std::vector<std::int8_t> theta_;
  std::vector<std::vector<Vertex>> strong_;
  std::vector<Vertex> semi_partner_;
  int m_;
};

inline Trigraph complement(const Trigraph& g) {
  const int n = g.vertex_count();
  std::vector<PairValue> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const Adjacency a = negated(g.theta(u, v));
      if (a != Adjacency::StrongAnti) pairs.push_back({u, v, a});
    }
  return Trigraph(n, pairs);
}

/// Subtrigraph induced by S, vertices renumbered 0..|S|-1 in ascending
/// original order.  Second element maps new indices back to originals.
inline std::pair<Trigraph, std::vector<Vertex>> induced(const Trigraph& g,
                                                        const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("induced: empty vertex set");
  std::vector<Vertex> back(s.begin(), s.end());
  const int k = static_cast<int>(back.size());
  std::vector<PairValue> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const Adjacency a =
          g.theta(back[static_cast<std::size_t>(i)],
                  back[static_cast<std::size_t>(j)]);
      if (a != Adjacency::StrongAnti) pairs.push_back({i, j, a});
    }
  return {Trigraph(k, pairs), back};
}

inline bool is_connected(const Trigraph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("is_connected requires n >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.strong_neighbors(v))
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++count;
        stack.push_back(u);
      }
    const Vertex sp = g.semi_partner(v);
    if (sp != -1 && !seen[static_cast<std::size_t>(sp)]) {
      seen[static_cast<std::size_t>(sp)] = 1;
      ++count;
      stack.push_back(sp);
    }
  }
  return count == n;
}

inline bool is_strong_clique(const Trigraph& g, const VertexSet& s) {
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (!strongly_adjacent(g.theta(s[i], s[j]))) return false;
  return true;
}

inline bool is_strong_stable(const Trigraph& g, const VertexSet& s) {
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (!strongly_antiadjacent(g.theta(s[i], s[j]))) return false;
  return true;
}

inline bool vertex_strongly_complete(const Trigraph& g, Vertex v,
                                     const VertexSet& s) {
  for (Vertex x : s)
    if (x != v && !strongly_adjacent(g.theta(v, x))) return false;
  return true;
}

inline bool vertex_strongly_anticomplete(const Trigraph& g, Vertex v,
                                         const VertexSet& s) {
  for (Vertex x : s)
    if (x != v && !strongly_antiadjacent(g.theta(v, x))) return false;
  return true;
}

inline bool sets_strongly_complete(const Trigraph& g, const VertexSet& a,
                                   const VertexSet& b) {
  for (Vertex x : a)
    if (!vertex_strongly_complete(g, x, b)) return false;
  return true;
}

inline bool sets_strongly_anticomplete(const Trigraph& g, const VertexSet& a,
                                       const VertexSet& b) {
  for (Vertex x : a)
    if (!vertex_strongly_anticomplete(g, x, b)) return false;
  return true;
}

}  // namespace trigraph
