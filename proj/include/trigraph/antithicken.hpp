#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigraph/classify.hpp"
#include "trigraph/core.hpp"
#include "trigraph/schposc.hpp"
#include "trigraph/structure.hpp"
#include "trigraph/thickening.hpp"

namespace trigraph {

/// First square-connected pair hit by the seed scan, or nullopt when the
/// trigraph is laminar.  Seeds iterate in ascending lexicographic order.
inline std::optional<CliquePair> find_square_connected_pair(const Trigraph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.strong_neighbors(u)) {
      if (v <= u) continue;
      auto r = schposc(g, u, v);
      if (r) return r;
    }
  return std::nullopt;
}

/// No square-connected homogeneous pair of strong cliques.
inline bool is_laminar(const Trigraph& g) {
  return !find_square_connected_pair(g).has_value();
}

namespace detail {

/// Union-find over vertices carrying a side bit per vertex relative to its
/// root, so a pair can merge into another with the roles swapped.  Roots own
/// the two member lists and the discovery index of their earliest pair.
class PairMerger {
 public:
  explicit PairMerger(int n)
      : parent_(static_cast<std::size_t>(n), -1),
        side_(static_cast<std::size_t>(n), 0),
        side0_(static_cast<std::size_t>(n)),
        side1_(static_cast<std::size_t>(n)),
        discovery_(static_cast<std::size_t>(n), -1) {}

  void add_pair(const Trigraph& g, const CliquePair& p, int index) {
    int target = -1;
    int flip = 0;  // p's A corresponds to target side 0 xor flip
    auto visit = [&](Vertex v, int want) {
      if (parent_[static_cast<std::size_t>(v)] == -1) return;
      auto [r, s] = find(v);
      const int f = s ^ want;
      if (target == -1) {
        target = r;
        flip = f;
      } else if (r == target) {
        if (f != flip)
          throw StructuralError(
              "degenerate structure: skew intersection while merging "
              "square-connected pairs");
      } else {
        const int rel = f ^ flip;  // parity between r's sides and target's
        const int survivor = unite(g, target, r, rel);
        if (survivor != target) flip ^= rel;
        target = survivor;
      }
    };
    for (Vertex v : p.a()) visit(v, 0);
    for (Vertex v : p.b()) visit(v, 1);

    if (target == -1) {
      Vertex root = p.a()[0];
      for (Vertex v : p.a()) attach(root, v, 0);
      for (Vertex v : p.b()) attach(root, v, 1);
      side0_[static_cast<std::size_t>(root)].assign(p.a().begin(), p.a().end());
      side1_[static_cast<std::size_t>(root)].assign(p.b().begin(), p.b().end());
      discovery_[static_cast<std::size_t>(root)] = index;
      return;
    }
    for (Vertex v : p.a()) add_member(g, target, v, 0 ^ flip);
    for (Vertex v : p.b()) add_member(g, target, v, 1 ^ flip);
  }

  std::vector<CliquePair> finalize() const {
    std::vector<std::pair<int, Vertex>> roots;
    for (Vertex v = 0; v < static_cast<int>(parent_.size()); ++v)
      if (parent_[static_cast<std::size_t>(v)] == v)
        roots.emplace_back(discovery_[static_cast<std::size_t>(v)], v);
    std::sort(roots.begin(), roots.end());
    std::vector<CliquePair> out;
    out.reserve(roots.size());
    for (const auto& [d, r] : roots)
      out.emplace_back(VertexSet(side0_[static_cast<std::size_t>(r)]),
                       VertexSet(side1_[static_cast<std::size_t>(r)]));
    return out;
  }

 private:
  std::pair<int, int> find(Vertex v) {
    int s = 0;
    Vertex r = v;
    while (parent_[static_cast<std::size_t>(r)] != r) {
      s ^= side_[static_cast<std::size_t>(r)];
      r = parent_[static_cast<std::size_t>(r)];
    }
    // path compression, re-accumulating parities
    Vertex x = v;
    int sx = s;
    while (parent_[static_cast<std::size_t>(x)] != x) {
      const Vertex next = parent_[static_cast<std::size_t>(x)];
      const int snext = sx ^ side_[static_cast<std::size_t>(x)];
      parent_[static_cast<std::size_t>(x)] = r;
      side_[static_cast<std::size_t>(x)] = static_cast<char>(sx);
      x = next;
      sx = snext;
    }
    return {r, s};
  }

  void attach(Vertex root, Vertex v, int side) {
    parent_[static_cast<std::size_t>(v)] = root;
    side_[static_cast<std::size_t>(v)] =
        static_cast<char>(v == root ? 0 : side);
  }

  void add_member(const Trigraph& g, Vertex root, Vertex v, int side) {
    if (parent_[static_cast<std::size_t>(v)] != -1) return;  // already merged
    auto& dest = side ? side1_[static_cast<std::size_t>(root)]
                      : side0_[static_cast<std::size_t>(root)];
    require_strong_to_all(g, v, dest);
    parent_[static_cast<std::size_t>(v)] = root;
    side_[static_cast<std::size_t>(v)] = static_cast<char>(side);
    dest.push_back(v);
  }

  int unite(const Trigraph& g, Vertex ra, Vertex rb, int rel) {
    const std::size_t sa = side0_[static_cast<std::size_t>(ra)].size() +
                           side1_[static_cast<std::size_t>(ra)].size();
    const std::size_t sb = side0_[static_cast<std::size_t>(rb)].size() +
                           side1_[static_cast<std::size_t>(rb)].size();
    const Vertex big = sa >= sb ? ra : rb;
    const Vertex small = sa >= sb ? rb : ra;
    auto& b0 = side0_[static_cast<std::size_t>(big)];
    auto& b1 = side1_[static_cast<std::size_t>(big)];
    auto& s0 = side0_[static_cast<std::size_t>(small)];
    auto& s1 = side1_[static_cast<std::size_t>(small)];
    auto& into0 = rel ? s1 : s0;  // small-side landing in big side 0
    auto& into1 = rel ? s0 : s1;
    const std::size_t old0 = b0.size(), old1 = b1.size();
    for (Vertex v : into0) require_strong_to_all(g, v, b0, old0);
    for (Vertex v : into1) require_strong_to_all(g, v, b1, old1);
    b0.insert(b0.end(), into0.begin(), into0.end());
    b1.insert(b1.end(), into1.begin(), into1.end());
    s0.clear();
    s1.clear();
    parent_[static_cast<std::size_t>(small)] = big;
    side_[static_cast<std::size_t>(small)] = static_cast<char>(rel);
    discovery_[static_cast<std::size_t>(big)] =
        std::min(discovery_[static_cast<std::size_t>(big)],
                 discovery_[static_cast<std::size_t>(small)]);
    return big;
  }

  void require_strong_to_all(const Trigraph& g, Vertex v,
                             const std::vector<Vertex>& members,
                             std::size_t limit = static_cast<std::size_t>(-1)) {
    const std::size_t end = std::min(limit, members.size());
    for (std::size_t i = 0; i < end; ++i)
      if (!strongly_adjacent(g.theta(v, members[i])))
        throw StructuralError(
            "degenerate structure: merged side is not a strong clique");
  }

  std::vector<int> parent_;
  std::vector<char> side_;
  std::vector<std::vector<Vertex>> side0_, side1_;
  std::vector<int> discovery_;
};

}  // namespace detail

/// Runs the seed growth for every strongly adjacent pair and merges
/// intersecting results, yielding pairwise disjoint square-connected pairs
/// that absorb every square-connected pair of the input.
inline std::vector<CliquePair> collect_maximal_schposcs(const Trigraph& g) {
  detail::PairMerger merger(g.vertex_count());
  int index = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.strong_neighbors(u)) {
      if (v <= u) continue;
      auto r = schposc(g, u, v);
      if (r) merger.add_pair(g, *r, index++);
    }
  return merger.finalize();
}

/// Contracts each pair (A_i, B_i) to a semiedge a_i b_i.  Untouched vertices
/// come first in ascending original order, then a_1, b_1, a_2, b_2, ... in
/// pair order.
inline std::pair<Trigraph, ThickeningMap> contract_pairs(
    const Trigraph& g, const std::vector<CliquePair>& pairs) {
  const int n = g.vertex_count();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (Vertex v : pairs[i].both()) {
      if (owner[static_cast<std::size_t>(v)] != -1)
        throw StructuralError("contracted pairs must be pairwise disjoint");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    if (!is_hposc(g, pairs[i]))
      throw StructuralError(
          "contraction requires homogeneous pairs of strong cliques");
  }

  std::vector<Vertex> untouched;
  for (Vertex v = 0; v < n; ++v)
    if (owner[static_cast<std::size_t>(v)] == -1) untouched.push_back(v);

  const int u_count = static_cast<int>(untouched.size());
  const int n_reduced = u_count + 2 * static_cast<int>(pairs.size());

  std::vector<VertexSet> parts;
  parts.reserve(static_cast<std::size_t>(n_reduced));
  for (Vertex v : untouched) parts.push_back(VertexSet{v});
  for (const auto& p : pairs) {
    parts.push_back(p.a());
    parts.push_back(p.b());
  }

  // Uniform relation of a whole part to one outside vertex.  The pair
  // property forbids any third case; a semiedge leaving a part has no image
  // under the contraction.
  auto part_to_vertex = [&](const VertexSet& part, Vertex w) {
    const Adjacency val = g.theta(part[0], w);
    if (val == Adjacency::Semi)
      throw StructuralError("semiedge crossing a contracted part boundary");
    for (Vertex x : part)
      if (g.theta(x, w) != val)
        throw StructuralError(
            "contracted part has a mixed relation to vertex " +
            std::to_string(w));
    return val;
  };
  auto part_to_part = [&](const VertexSet& p, const VertexSet& q) {
    const Adjacency val = part_to_vertex(p, q[0]);
    for (Vertex y : q)
      if (part_to_vertex(p, y) != val)
        throw StructuralError("contracted parts have a mixed cross relation");
    return val;
  };

  std::vector<PairValue> out;
  for (int i = 0; i < n_reduced; ++i)
    for (int j = i + 1; j < n_reduced; ++j) {
      Adjacency val;
      const bool i_part = i >= u_count, j_part = j >= u_count;
      if (!i_part && !j_part) {
        val = g.theta(untouched[static_cast<std::size_t>(i)],
                      untouched[static_cast<std::size_t>(j)]);
      } else if (i_part && j_part) {
        if ((i - u_count) / 2 == (j - u_count) / 2) {
          val = Adjacency::Semi;  // the contracted pair itself
        } else {
          val = part_to_part(parts[static_cast<std::size_t>(i)],
                             parts[static_cast<std::size_t>(j)]);
        }
      } else {
        const int pi = i_part ? i : j;
        const Vertex w = untouched[static_cast<std::size_t>(i_part ? j : i)];
        val = part_to_vertex(parts[static_cast<std::size_t>(pi)], w);
      }
      if (val != Adjacency::StrongAnti)
        out.push_back({i, j, val});
    }

  Trigraph reduced(n_reduced, out);
  ThickeningMap map(n, std::move(parts));
  if (!verify_thickening(reduced, map, g))
    throw StructuralError("contraction produced an invalid thickening");
  return {std::move(reduced), std::move(map)};
}

struct AntithickeningResult {
  Trigraph reduced;
  ThickeningMap map;
  std::vector<CliquePair> contracted_pairs;
};

struct AntithickenOptions {
  bool force = false;    // run on degenerate input anyway
  bool recheck = true;   // re-verify laminarity of the output
};

/// Contracts every maximal square-connected homogeneous pair of strong
/// cliques to a semiedge.  On connected non-degenerate input the result is
/// the unique laminar antithickening with the maximum number of vertices.
inline AntithickeningResult optimal_antithickening(
    const Trigraph& g, const AntithickenOptions& opts = {}) {
  if (!is_connected(g)) throw StructuralError("connected input required");
  if (!opts.force) {
    const Classification c = classify(g);
    if (c.degenerate)
      throw StructuralError("input is degenerate; rerun with force\n" +
                            classification_report(g, c));
  }
  std::vector<CliquePair> pairs = collect_maximal_schposcs(g);
  auto [reduced, map] = contract_pairs(g, pairs);
  if (opts.recheck && !is_laminar(reduced))
    throw StructuralError("reduction output is not laminar");
  return {std::move(reduced), std::move(map), std::move(pairs)};
}

}  // namespace trigraph
