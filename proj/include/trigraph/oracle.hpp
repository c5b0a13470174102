#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "trigraph/core.hpp"
#include "trigraph/structure.hpp"
#include "trigraph/thickening.hpp"

namespace trigraph {
namespace oracle {

enum class HposcKind { All, DeletionMinimal, SquareConnected };

namespace detail {

inline void check_cap(const char* what, int n, int cap) {
  if (n > cap)
    throw CapExceeded(std::string(what) + ": n=" + std::to_string(n) +
                      " exceeds cap=" + std::to_string(cap));
}

}  // namespace detail

/// Every homogeneous pair of strong cliques, by exhaustive assignment of
/// each vertex to A, B, or outside.  Each unordered pair is reported once,
/// oriented so the minimum vertex of A u B lies in A; the list is sorted.
inline std::vector<CliquePair> enumerate_hposcs(const Trigraph& g,
                                                HposcKind kind = HposcKind::All,
                                                int cap = 14) {
  detail::check_cap("enumerate_hposcs", g.vertex_count(), cap);
  const int n = g.vertex_count();
  std::vector<CliquePair> out;
  std::vector<Vertex> a, b, rest;

  auto leaf = [&]() {
    if (a.empty() || b.empty()) return;
    if (a.size() == 1 && b.size() == 1) return;
    for (Vertex w : rest) {
      int sa = 0, sb = 0, ta = 0, tb = 0;
      for (Vertex x : a) {
        const Adjacency t = g.theta(w, x);
        sa += strongly_adjacent(t);
        ta += strongly_antiadjacent(t);
      }
      for (Vertex x : b) {
        const Adjacency t = g.theta(w, x);
        sb += strongly_adjacent(t);
        tb += strongly_antiadjacent(t);
      }
      if (sa != static_cast<int>(a.size()) && ta != static_cast<int>(a.size()))
        return;
      if (sb != static_cast<int>(b.size()) && tb != static_cast<int>(b.size()))
        return;
    }
    CliquePair p{VertexSet(a), VertexSet(b)};
    if (kind == HposcKind::DeletionMinimal && !is_deletion_minimal(g, p))
      return;
    if (kind == HposcKind::SquareConnected && !is_square_connected(g, p))
      return;
    out.push_back(std::move(p));
  };

  auto rec = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      leaf();
      return;
    }
    rest.push_back(v);
    self(self, v + 1);
    rest.pop_back();

    bool ok = true;
    for (Vertex x : a)
      if (!strongly_adjacent(g.theta(v, x))) {
        ok = false;
        break;
      }
    if (ok) {
      a.push_back(v);
      self(self, v + 1);
      a.pop_back();
    }
    if (a.empty()) return;  // min vertex of A u B must sit in A
    ok = true;
    for (Vertex x : b)
      if (!strongly_adjacent(g.theta(v, x))) {
        ok = false;
        break;
      }
    if (ok) {
      b.push_back(v);
      self(self, v + 1);
      b.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff some square of g contains both u and v.  Strongly adjacent
/// vertices can only appear cycle-adjacent in a square.
inline bool square_through(const Trigraph& g, Vertex u, Vertex v) {
  if (!adjacent(g.theta(u, v))) return false;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (x == u || x == v) continue;
    if (!adjacent(g.theta(u, x)) || !antiadjacent(g.theta(v, x))) continue;
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
      if (y == u || y == v || y == x) continue;
      // cyclic order u, v, y, x
      if (antiadjacent(g.theta(u, y)) && adjacent(g.theta(v, y)) &&
          adjacent(g.theta(x, y)))
        return true;
    }
  }
  return false;
}

/// The unique smallest homogeneous pair of strong cliques with the strongly
/// adjacent seed {a0, a1} inside A.  Defined exactly when a square passes
/// through the seed and at least one pair contains it; the minimum then
/// exists and its union contains the seed square.  A missing minimum would
/// falsify the growth algorithm, so it is reported loudly.
inline std::optional<CliquePair> minimal_hposc_containing(const Trigraph& g,
                                                          Vertex a0, Vertex a1,
                                                          int cap = 14) {
  if (!strongly_adjacent(g.theta(a0, a1)))
    throw std::invalid_argument("seed vertices must be strongly adjacent");
  if (!square_through(g, a0, a1)) return std::nullopt;
  std::vector<CliquePair> candidates;
  for (const CliquePair& p : enumerate_hposcs(g, HposcKind::All, cap)) {
    if (p.a().contains(a0) && p.a().contains(a1))
      candidates.push_back(p);
    else if (p.b().contains(a0) && p.b().contains(a1))
      candidates.push_back(p.swapped());
  }
  if (candidates.empty()) return std::nullopt;
  for (const CliquePair& m : candidates) {
    bool minimum = true;
    for (const CliquePair& p : candidates)
      if (!(m.a().is_subset_of(p.a()) && m.b().is_subset_of(p.b()))) {
        minimum = false;
        break;
      }
    if (minimum) return m;
  }
  throw StructuralError("no inclusion-minimum pair containing the seed");
}

inline bool laminar_by_enumeration(const Trigraph& g, int cap = 14) {
  return enumerate_hposcs(g, HposcKind::SquareConnected, cap).empty();
}

/// All partitions of V into strong cliques whose pairwise relations form a
/// valid quotient trigraph: uniformly strong, uniformly strong-anti, or
/// mixed, with mixed part pairs forming a matching over parts.  Each entry
/// is the quotient with its thickening map back to g.
inline std::vector<std::pair<Trigraph, ThickeningMap>> enumerate_antithickenings(
    const Trigraph& g, int cap = 8) {
  detail::check_cap("enumerate_antithickenings", g.vertex_count(), cap);
  const int n = g.vertex_count();
  std::vector<std::pair<Trigraph, ThickeningMap>> out;
  std::vector<std::vector<Vertex>> blocks;

  auto leaf = [&]() {
    const int k = static_cast<int>(blocks.size());
    std::vector<PairValue> qpairs;
    std::vector<int> mixed_degree(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        int strong = 0, anti = 0, total = 0;
        for (Vertex x : blocks[static_cast<std::size_t>(i)])
          for (Vertex y : blocks[static_cast<std::size_t>(j)]) {
            const Adjacency t = g.theta(x, y);
            strong += strongly_adjacent(t);
            anti += strongly_antiadjacent(t);
            ++total;
          }
        if (strong == total) {
          qpairs.push_back({i, j, Adjacency::Strong});
        } else if (anti == total) {
          // strong-anti pairs stay implicit
        } else {
          if (++mixed_degree[static_cast<std::size_t>(i)] > 1 ||
              ++mixed_degree[static_cast<std::size_t>(j)] > 1)
            return;
          qpairs.push_back({i, j, Adjacency::Semi});
        }
      }
    std::vector<VertexSet> parts;
    parts.reserve(static_cast<std::size_t>(k));
    for (const auto& blk : blocks) parts.emplace_back(blk);
    out.emplace_back(Trigraph(k, qpairs), ThickeningMap(n, std::move(parts)));
  };

  auto rec = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      leaf();
      return;
    }
    // index-based: deeper levels append to and shrink the block vector
    const std::size_t limit = blocks.size();
    for (std::size_t bi = 0; bi < limit; ++bi) {
      bool ok = true;
      for (Vertex x : blocks[bi])
        if (!strongly_adjacent(g.theta(v, x))) {
          ok = false;
          break;
        }
      if (ok) {
        blocks[bi].push_back(v);
        self(self, v + 1);
        blocks[bi].pop_back();
      }
    }
    blocks.emplace_back(1, v);
    self(self, v + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  return out;
}

/// Exact isomorphism of the tri-valued adjacency, by backtracking with
/// (strong degree, semi degree) signatures.
inline bool are_isomorphic(const Trigraph& g1, const Trigraph& g2,
                           int cap = 10) {
  if (g1.vertex_count() != g2.vertex_count()) return false;
  const int n = g1.vertex_count();
  detail::check_cap("are_isomorphic", n, cap);
  auto signature = [](const Trigraph& g, Vertex v) {
    return std::pair<int, int>(
        static_cast<int>(g.strong_neighbors(v).size()),
        g.semi_partner(v) != -1 ? 1 : 0);
  };
  {
    std::vector<std::pair<int, int>> s1, s2;
    for (Vertex v = 0; v < n; ++v) {
      s1.push_back(signature(g1, v));
      s2.push_back(signature(g2, v));
    }
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (signature(g1, v) != signature(g2, w)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v; ++u)
        if (g1.theta(u, v) != g2.theta(image[static_cast<std::size_t>(u)], w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (self(self, v + 1)) return true;
      used[static_cast<std::size_t>(w)] = 0;
      image[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Visits every connected trigraph on n vertices (semiedges forming a
/// matching), enumerating all valid adjacency assignments.
template <class F>
inline void for_each_connected_trigraph(int n, F&& fn) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<PairValue> pairs;
  std::vector<char> has_semi(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == slots.size()) {
      Trigraph g(n, pairs);
      if (is_connected(g)) fn(g);
      return;
    }
    const auto [i, j] = slots[idx];
    self(self, idx + 1);  // strong-anti: leave unlisted
    pairs.push_back({i, j, Adjacency::Strong});
    self(self, idx + 1);
    pairs.pop_back();
    if (!has_semi[static_cast<std::size_t>(i)] &&
        !has_semi[static_cast<std::size_t>(j)]) {
      has_semi[static_cast<std::size_t>(i)] =
          has_semi[static_cast<std::size_t>(j)] = 1;
      pairs.push_back({i, j, Adjacency::Semi});
      self(self, idx + 1);
      pairs.pop_back();
      has_semi[static_cast<std::size_t>(i)] =
          has_semi[static_cast<std::size_t>(j)] = 0;
    }
  };
  rec(rec, 0);
}

/// Seeded random trigraph with roughly 40% strong / 10% semi pairs; semi
/// draws that would break the matching fall back to strong-anti.  Bit-exact
/// across platforms (raw engine draws, no distribution objects).
inline Trigraph sample_trigraph(int n, std::mt19937_64& rng) {
  std::vector<PairValue> pairs;
  std::vector<char> has_semi(static_cast<std::size_t>(n), 0);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      const std::uint64_t r = rng() % 10;
      if (r < 4) {
        pairs.push_back({i, j, Adjacency::Strong});
      } else if (r == 4 && !has_semi[static_cast<std::size_t>(i)] &&
                 !has_semi[static_cast<std::size_t>(j)]) {
        has_semi[static_cast<std::size_t>(i)] =
            has_semi[static_cast<std::size_t>(j)] = 1;
        pairs.push_back({i, j, Adjacency::Semi});
      }
    }
  return Trigraph(n, pairs);
}

}  // namespace oracle
}  // namespace trigraph
