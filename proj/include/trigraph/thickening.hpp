#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trigraph/core.hpp"

namespace trigraph {

/// Assigns every vertex of a reduced trigraph a nonempty part of the
/// original vertex set.  Whether the parts actually witness a thickening is
/// decided by verify_thickening.
class ThickeningMap {
 public:
  ThickeningMap(int target_n, std::vector<VertexSet> parts)
      : target_n_(target_n), parts_(std::move(parts)) {
    if (target_n_ < 0) throw std::invalid_argument("negative target size");
    for (const auto& p : parts_) {
      if (p.empty())
        throw std::invalid_argument("thickening parts must be nonempty");
      for (Vertex v : p)
        if (v < 0 || v >= target_n_)
          throw std::invalid_argument("part vertex " + std::to_string(v) +
                                      " outside target 0.." +
                                      std::to_string(target_n_ - 1));
    }
  }

  static ThickeningMap identity(int n) {
    std::vector<VertexSet> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) parts.push_back(VertexSet{v});
    return ThickeningMap(n, std::move(parts));
  }

  int source_size() const { return static_cast<int>(parts_.size()); }
  int target_size() const { return target_n_; }
  const VertexSet& part(Vertex v) const {
    if (v < 0 || v >= source_size())
      throw std::invalid_argument("no part for vertex " + std::to_string(v));
    return parts_[static_cast<std::size_t>(v)];
  }
  const std::vector<VertexSet>& parts() const { return parts_; }

  bool operator==(const ThickeningMap& o) const {
    return target_n_ == o.target_n_ && parts_ == o.parts_;
  }

 private:
  int target_n_;
  std::vector<VertexSet> parts_;
};

/// G is a thickening of Gp under I iff the parts are disjoint strong cliques
/// covering V(G) and every pair of Gp maps to the matching cross relation:
/// strong to strongly complete, strong-anti to strongly anticomplete, semi
/// to neither.
inline bool verify_thickening(const Trigraph& gp, const ThickeningMap& i,
                              const Trigraph& g) {
  if (i.source_size() != gp.vertex_count() ||
      i.target_size() != g.vertex_count())
    throw std::invalid_argument("thickening arity mismatch");
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < gp.vertex_count(); ++v) {
    const VertexSet& part = i.part(v);
    for (Vertex x : part) {
      if (covered[static_cast<std::size_t>(x)]) return false;
      covered[static_cast<std::size_t>(x)] = 1;
    }
    if (!is_strong_clique(g, part)) return false;
  }
  for (char c : covered)
    if (!c) return false;
  for (Vertex u = 0; u < gp.vertex_count(); ++u)
    for (Vertex v = u + 1; v < gp.vertex_count(); ++v) {
      const bool comp = sets_strongly_complete(g, i.part(u), i.part(v));
      const bool anti = sets_strongly_anticomplete(g, i.part(u), i.part(v));
      switch (gp.theta(u, v)) {
        case Adjacency::Strong:
          if (!comp) return false;
          break;
        case Adjacency::StrongAnti:
          if (!anti) return false;
          break;
        case Adjacency::Semi:
          if (comp || anti) return false;
          break;
      }
    }
  return true;
}

/// Composition: i1 maps G'' to G', i2 maps G' to G; the result maps G'' to G.
inline ThickeningMap compose_thickenings(const ThickeningMap& i1,
                                         const ThickeningMap& i2) {
  if (i1.target_size() != i2.source_size())
    throw std::invalid_argument("thickening composition arity mismatch");
  std::vector<VertexSet> parts;
  parts.reserve(static_cast<std::size_t>(i1.source_size()));
  for (Vertex v = 0; v < i1.source_size(); ++v) {
    VertexSet acc;
    for (Vertex w : i1.part(v)) acc = set_union(acc, i2.part(w));
    parts.push_back(std::move(acc));
  }
  return ThickeningMap(i2.target_size(), std::move(parts));
}

}  // namespace trigraph
