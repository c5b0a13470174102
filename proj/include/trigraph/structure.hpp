#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trigraph/core.hpp"

namespace trigraph {

/// Ordered pair (A, B) of disjoint nonempty vertex sets.
class CliquePair {
 public:
  CliquePair(VertexSet a, VertexSet b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty() || b_.empty())
      throw std::invalid_argument("clique pair parts must be nonempty");
    if (a_.intersects(b_))
      throw std::invalid_argument("clique pair parts must be disjoint");
  }

  const VertexSet& a() const { return a_; }
  const VertexSet& b() const { return b_; }
  CliquePair swapped() const { return CliquePair(b_, a_); }
  VertexSet both() const { return set_union(a_, b_); }
  int size() const { return a_.size() + b_.size(); }

  bool operator==(const CliquePair& o) const {
    return a_ == o.a_ && b_ == o.b_;
  }
  bool operator<(const CliquePair& o) const {
    return a_ < o.a_ || (a_ == o.a_ && b_ < o.b_);
  }

  /// (A,B) contained in (A',B') part-wise, allowing a role swap.
  bool contained_in(const CliquePair& o) const {
    return (a_.is_subset_of(o.a_) && b_.is_subset_of(o.b_)) ||
           (a_.is_subset_of(o.b_) && b_.is_subset_of(o.a_));
  }

  std::string to_string() const {
    return "A=" + a_.to_string() + " B=" + b_.to_string();
  }

 private:
  VertexSet a_;
  VertexSet b_;
};

/// v1v2v3v4 in cyclic order: both diagonals antiadjacent, the four cycle
/// pairs adjacent.
inline bool is_square(const Trigraph& g, Vertex v1, Vertex v2, Vertex v3,
                      Vertex v4) {
  if (v1 == v2 || v1 == v3 || v1 == v4 || v2 == v3 || v2 == v4 || v3 == v4)
    throw std::invalid_argument("square vertices must be distinct");
  return antiadjacent(g.theta(v1, v3)) && antiadjacent(g.theta(v2, v4)) &&
         adjacent(g.theta(v1, v2)) && adjacent(g.theta(v2, v3)) &&
         adjacent(g.theta(v3, v4)) && adjacent(g.theta(v4, v1));
}

/// Least square inside S under ascending (v1,v2,v3,v4) with v1 the minimum
/// vertex of the square and v2 < v4.
inline std::optional<std::array<Vertex, 4>> contains_square(
    const Trigraph& g, const VertexSet& s) {
  const int k = s.size();
  for (int i1 = 0; i1 < k; ++i1)
    for (int i2 = i1 + 1; i2 < k; ++i2)
      for (int i3 = i1 + 1; i3 < k; ++i3) {
        if (i3 == i2) continue;
        for (int i4 = i1 + 1; i4 < k; ++i4) {
          if (i4 == i2 || i4 == i3 || s[i4] < s[i2]) continue;
          if (is_square(g, s[i1], s[i2], s[i3], s[i4]))
            return std::array<Vertex, 4>{s[i1], s[i2], s[i3], s[i4]};
        }
      }
  return std::nullopt;
}

/// 2 <= |X| < n and every outside vertex strongly complete or strongly
/// anticomplete to X.
inline bool is_homogeneous_set(const Trigraph& g, const VertexSet& x) {
  const int n = g.vertex_count();
  if (x.size() < 2 || x.size() >= n) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (x.contains(v)) continue;
    if (!vertex_strongly_complete(g, v, x) &&
        !vertex_strongly_anticomplete(g, v, x))
      return false;
  }
  return true;
}

/// Homogeneous pair of strong cliques: A and B strong cliques, not both
/// singletons, every vertex outside A u B strongly complete or strongly
/// anticomplete to each part.  A u B covering all of V is allowed (the
/// outside condition is then vacuous).
inline bool is_hposc(const Trigraph& g, const CliquePair& p) {
  if (p.a().size() == 1 && p.b().size() == 1) return false;
  if (!is_strong_clique(g, p.a()) || !is_strong_clique(g, p.b()))
    return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (p.a().contains(v) || p.b().contains(v)) continue;
    if (!vertex_strongly_complete(g, v, p.a()) &&
        !vertex_strongly_anticomplete(g, v, p.a()))
      return false;
    if (!vertex_strongly_complete(g, v, p.b()) &&
        !vertex_strongly_anticomplete(g, v, p.b()))
      return false;
  }
  return true;
}

/// HPOSC whose union contains a square and in which no vertex of either part
/// is strongly complete or strongly anticomplete to the other part.
inline bool is_deletion_minimal(const Trigraph& g, const CliquePair& p) {
  if (!is_hposc(g, p)) return false;
  if (!contains_square(g, p.both())) return false;
  for (Vertex v : p.a())
    if (vertex_strongly_complete(g, v, p.b()) ||
        vertex_strongly_anticomplete(g, v, p.b()))
      return false;
  for (Vertex v : p.b())
    if (vertex_strongly_complete(g, v, p.a()) ||
        vertex_strongly_anticomplete(g, v, p.a()))
      return false;
  return true;
}

namespace detail {

struct DisjointSet {
  explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); }
  std::vector<int> parent;
};

}  // namespace detail

/// Every bipartition of A (and of B) into nonempty halves is crossed by a
/// square inside A u B.  Checked as connectivity of each part under the
/// relation "two members lie in a common square of A u B", which is
/// equivalent: an uncrossed bipartition is exactly a separation of that
/// relation, and vice versa.
inline bool is_square_connected(const Trigraph& g, const CliquePair& p) {
  if (!is_hposc(g, p))
    throw std::invalid_argument(
        "is_square_connected requires a homogeneous pair of strong cliques");
  const VertexSet& a = p.a();
  const VertexSet& b = p.b();
  // Any square inside two strong cliques has exactly two vertices per part,
  // cycle-adjacent within the part.
  detail::DisjointSet da(a.size());
  detail::DisjointSet db(b.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      for (int k = 0; k < b.size(); ++k)
        for (int l = 0; l < b.size(); ++l) {
          if (k == l) continue;
          // cyclic order a_i, a_j, b_l, b_k
          if (antiadjacent(g.theta(a[i], b[l])) &&
              antiadjacent(g.theta(a[j], b[k])) &&
              adjacent(g.theta(a[j], b[l])) &&
              adjacent(g.theta(a[i], b[k]))) {
            da.unite(i, j);
            db.unite(k, l);
          }
        }
  for (int i = 1; i < a.size(); ++i)
    if (da.find(i) != da.find(0)) return false;
  for (int k = 1; k < b.size(); ++k)
    if (db.find(k) != db.find(0)) return false;
  return true;
}

/// A part of one pair intersects both parts of the other.
inline bool have_skew_intersection(const CliquePair& p, const CliquePair& q) {
  return (p.a().intersects(q.a()) && p.a().intersects(q.b())) ||
         (p.b().intersects(q.a()) && p.b().intersects(q.b())) ||
         (q.a().intersects(p.a()) && q.a().intersects(p.b())) ||
         (q.b().intersects(p.a()) && q.b().intersects(p.b()));
}

}  // namespace trigraph
