#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "trigraph/antithicken.hpp"
#include "trigraph/classify.hpp"
#include "trigraph/core.hpp"
#include "trigraph/thickening.hpp"

namespace trigraph {
namespace gen {

/// Cross relation for one thickened semiedge: rows index the lower vertex's
/// part, columns the higher vertex's part.  Entries are strong or
/// strong-anti; a mixed matrix is required (all-strong or all-anti would
/// collapse the semiedge into a settled relation).
struct CrossPattern {
  std::vector<std::vector<Adjacency>> cells;

  int rows() const { return static_cast<int>(cells.size()); }
  int cols() const {
    return cells.empty() ? 0 : static_cast<int>(cells[0].size());
  }

  /// Contains the crossed 2x2 submatrix that thickens into a square.
  bool has_square() const {
    for (int i = 0; i < rows(); ++i)
      for (int j = i + 1; j < rows(); ++j)
        for (int k = 0; k < cols(); ++k)
          for (int l = 0; l < cols(); ++l) {
            if (k == l) continue;
            if (cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] ==
                    Adjacency::Strong &&
                cells[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] ==
                    Adjacency::Strong &&
                cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] ==
                    Adjacency::StrongAnti &&
                cells[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] ==
                    Adjacency::StrongAnti)
              return true;
          }
    return false;
  }

  static CrossPattern crossed2x2() {
    return CrossPattern{{{Adjacency::Strong, Adjacency::StrongAnti},
                         {Adjacency::StrongAnti, Adjacency::Strong}}};
  }
};

struct ThickenSpec {
  std::vector<int> part_sizes;
  std::map<std::pair<Vertex, Vertex>, CrossPattern> semi_patterns;
};

struct ThickenOutput {
  Trigraph g;
  ThickeningMap map;
  // per semiedge of the base (lower vertex first): thickened pair contains
  // a square
  std::vector<std::pair<std::pair<Vertex, Vertex>, bool>> semiedge_squares;
};

/// Expands each vertex of the base into a strong clique.  Strong and
/// strong-anti pairs become uniformly complete or anticomplete; each
/// semiedge between expanded parts takes its supplied cross pattern, and a
/// semiedge between two singleton parts stays a semiedge.
inline ThickenOutput thicken(const Trigraph& gp, const ThickenSpec& spec) {
  const int k = gp.vertex_count();
  if (static_cast<int>(spec.part_sizes.size()) != k)
    throw std::invalid_argument("thicken: one part size per vertex required");
  for (int s : spec.part_sizes)
    if (s < 1) throw std::invalid_argument("thicken: part sizes must be >= 1");

  std::vector<int> offset(static_cast<std::size_t>(k), 0);
  int n = 0;
  for (Vertex v = 0; v < k; ++v) {
    offset[static_cast<std::size_t>(v)] = n;
    n += spec.part_sizes[static_cast<std::size_t>(v)];
  }

  std::vector<std::pair<Vertex, Vertex>> semiedges;
  for (Vertex u = 0; u < k; ++u) {
    const Vertex sp = gp.semi_partner(u);
    if (sp > u) semiedges.emplace_back(u, sp);
  }
  for (const auto& [key, pat] : spec.semi_patterns) {
    if (key.first >= key.second)
      throw std::invalid_argument("thicken: pattern key must be ordered");
    if (gp.theta(key.first, key.second) != Adjacency::Semi)
      throw std::invalid_argument(
          "thicken: cross pattern given for a non-semiedge");
    (void)pat;
  }

  auto size_of = [&](Vertex v) {
    return spec.part_sizes[static_cast<std::size_t>(v)];
  };

  std::vector<PairValue> pairs;
  for (Vertex v = 0; v < k; ++v)
    for (int i = 0; i < size_of(v); ++i)
      for (int j = i + 1; j < size_of(v); ++j)
        pairs.push_back({offset[static_cast<std::size_t>(v)] + i,
                         offset[static_cast<std::size_t>(v)] + j,
                         Adjacency::Strong});

  std::vector<std::pair<std::pair<Vertex, Vertex>, bool>> flags;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) {
      const Adjacency t = gp.theta(u, v);
      if (t == Adjacency::Strong) {
        for (int i = 0; i < size_of(u); ++i)
          for (int j = 0; j < size_of(v); ++j)
            pairs.push_back({offset[static_cast<std::size_t>(u)] + i,
                             offset[static_cast<std::size_t>(v)] + j,
                             Adjacency::Strong});
      } else if (t == Adjacency::Semi) {
        const auto it = spec.semi_patterns.find({u, v});
        if (size_of(u) * size_of(v) == 1) {
          if (it != spec.semi_patterns.end())
            throw std::invalid_argument(
                "thicken: a semiedge between singleton parts keeps the "
                "semiedge; no pattern applies");
          pairs.push_back({offset[static_cast<std::size_t>(u)],
                           offset[static_cast<std::size_t>(v)],
                           Adjacency::Semi});
          flags.push_back({{u, v}, false});
          continue;
        }
        if (it == spec.semi_patterns.end())
          throw std::invalid_argument(
              "thicken: expanded semiedge needs a cross pattern");
        const CrossPattern& pat = it->second;
        if (pat.rows() != size_of(u) || pat.cols() != size_of(v))
          throw std::invalid_argument("thicken: cross pattern shape mismatch");
        int strong = 0, anti = 0;
        for (const auto& row : pat.cells)
          for (Adjacency c : row) {
            if (c == Adjacency::Semi)
              throw std::invalid_argument(
                  "thicken: cross pattern entries must be strongly decided");
            strong += c == Adjacency::Strong;
            anti += c == Adjacency::StrongAnti;
          }
        if (anti == 0 || strong == 0)
          throw std::invalid_argument(
              "thicken: cross pattern must be neither all-strong nor "
              "all-strong-anti");
        for (int i = 0; i < size_of(u); ++i)
          for (int j = 0; j < size_of(v); ++j) {
            const Adjacency c = pat.cells[static_cast<std::size_t>(i)]
                                         [static_cast<std::size_t>(j)];
            if (c == Adjacency::Strong)
              pairs.push_back({offset[static_cast<std::size_t>(u)] + i,
                               offset[static_cast<std::size_t>(v)] + j,
                               Adjacency::Strong});
          }
        flags.push_back({{u, v}, pat.has_square()});
      }
    }

  std::vector<VertexSet> parts;
  parts.reserve(static_cast<std::size_t>(k));
  for (Vertex v = 0; v < k; ++v) {
    std::vector<Vertex> members;
    for (int i = 0; i < size_of(v); ++i)
      members.push_back(offset[static_cast<std::size_t>(v)] + i);
    parts.emplace_back(std::move(members));
  }
  return {Trigraph(n, pairs), ThickeningMap(n, std::move(parts)),
          std::move(flags)};
}

/// Two strong cliques of size k joined by a perfect matching of strong
/// edges; all other cross pairs strongly antiadjacent.  Vertices 0..k-1 form
/// one clique, k..2k-1 the other, with i matched to k+i.
inline Trigraph gen_cliques_matching(int k) {
  if (k < 2) throw std::invalid_argument("gen_cliques_matching requires k >= 2");
  std::vector<PairValue> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      pairs.push_back({i, j, Adjacency::Strong});
      pairs.push_back({k + i, k + j, Adjacency::Strong});
    }
  for (int i = 0; i < k; ++i) pairs.push_back({i, k + i, Adjacency::Strong});
  return Trigraph(2 * k, pairs);
}

namespace detail {

inline Trigraph cycle(int n, std::optional<std::pair<Vertex, Vertex>> semi) {
  std::vector<PairValue> pairs;
  for (int i = 0; i < n; ++i) {
    const Vertex u = i, v = (i + 1) % n;
    const Vertex lo = std::min(u, v), hi = std::max(u, v);
    const bool is_semi = semi && semi->first == lo && semi->second == hi;
    pairs.push_back({lo, hi, is_semi ? Adjacency::Semi : Adjacency::Strong});
  }
  return Trigraph(n, pairs);
}

}  // namespace detail

/// Named fixtures used throughout the tests and the command line.
///   C4S       strong 4-cycle
///   C6S       strong 6-cycle
///   C6SEMI    strong 6-cycle with pair (0,1) semiadjacent
///   T8        C6SEMI with its semiedge thickened by the crossed 2x2 pattern
///   DM8       two 4-cliques whose cross relation admits two parallel
///             squares but no crossing square
///   C4_JOIN_C5  strong 4-cycle strongly complete to a strong 5-cycle
///   TRI       strong triangle
inline Trigraph gen_named(const std::string& name) {
  if (name == "C4S") return detail::cycle(4, std::nullopt);
  if (name == "C6S") return detail::cycle(6, std::nullopt);
  if (name == "C6SEMI") return detail::cycle(6, std::make_pair(0, 1));
  if (name == "TRI") return detail::cycle(3, std::nullopt);
  if (name == "T8") {
    ThickenSpec spec;
    spec.part_sizes = {2, 2, 1, 1, 1, 1};
    spec.semi_patterns[{0, 1}] = CrossPattern::crossed2x2();
    return thicken(detail::cycle(6, std::make_pair(0, 1)), spec).g;
  }
  if (name == "DM8") {
    std::vector<PairValue> pairs;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        pairs.push_back({i, j, Adjacency::Strong});
        pairs.push_back({4 + i, 4 + j, Adjacency::Strong});
      }
    const int cross[4][4] = {{1, 0, 0, 0},
                             {0, 1, 0, 0},
                             {1, 1, 1, 0},
                             {1, 1, 0, 1}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (cross[i][j]) pairs.push_back({i, 4 + j, Adjacency::Strong});
    return Trigraph(8, pairs);
  }
  if (name == "C4_JOIN_C5") {
    std::vector<PairValue> pairs;
    for (int i = 0; i < 4; ++i)
      pairs.push_back({std::min(i, (i + 1) % 4), std::max(i, (i + 1) % 4),
                       Adjacency::Strong});
    for (int i = 0; i < 5; ++i)
      pairs.push_back({std::min(4 + i, 4 + (i + 1) % 5),
                       std::max(4 + i, 4 + (i + 1) % 5), Adjacency::Strong});
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j)
        pairs.push_back({i, 4 + j, Adjacency::Strong});
    return Trigraph(9, pairs);
  }
  throw std::invalid_argument("unknown fixture name: " + name);
}

/// Rejection-samples a connected, non-degenerate, laminar trigraph: a strong
/// cycle through a random vertex order, a few extra strong chords, and at
/// most n/4 semiedges on leftover pairs.  Deterministic for fixed (n, seed).
inline Trigraph gen_random_laminar_base(int n, std::uint64_t seed) {
  if (n < 4)
    throw std::invalid_argument("gen_random_laminar_base requires n >= 4");
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
  constexpr int kBudget = 20000;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);

    std::map<std::pair<Vertex, Vertex>, Adjacency> edges;
    auto key = [](Vertex u, Vertex v) {
      return std::make_pair(std::min(u, v), std::max(u, v));
    };
    for (int i = 0; i < n; ++i)
      edges[key(perm[static_cast<std::size_t>(i)],
                perm[static_cast<std::size_t>((i + 1) % n)])] =
          Adjacency::Strong;
    const int chords = static_cast<int>(rng() % 3);
    for (int c = 0; c < chords; ++c) {
      const Vertex u = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
      const Vertex v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
      if (u != v && !edges.count(key(u, v)))
        edges[key(u, v)] = Adjacency::Strong;
    }
    std::vector<char> has_semi(static_cast<std::size_t>(n), 0);
    const int semis = static_cast<int>(rng() % static_cast<std::uint64_t>(n / 4 + 1));
    for (int s = 0; s < semis; ++s) {
      const Vertex u = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
      const Vertex v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
      if (u == v || edges.count(key(u, v))) continue;
      if (has_semi[static_cast<std::size_t>(u)] ||
          has_semi[static_cast<std::size_t>(v)])
        continue;
      has_semi[static_cast<std::size_t>(u)] =
          has_semi[static_cast<std::size_t>(v)] = 1;
      edges[key(u, v)] = Adjacency::Semi;
    }

    std::vector<PairValue> pairs;
    pairs.reserve(edges.size());
    for (const auto& [k2, val] : edges) pairs.push_back({k2.first, k2.second, val});
    Trigraph g(n, pairs);
    if (!is_connected(g)) continue;
    if (classify(g).degenerate) continue;
    if (!is_laminar(g)) continue;
    return g;
  }
  throw StructuralError("gen_random_laminar_base: sampling budget of " +
                        std::to_string(kBudget) + " attempts exhausted (n=" +
                        std::to_string(n) + ", seed=" + std::to_string(seed) +
                        ")");
}

}  // namespace gen
}  // namespace trigraph
