#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigraph/core.hpp"

namespace trigraph {

struct Classification {
  bool connected = false;
  bool claw_free = false;
  bool quasi_line = false;
  bool cobipartite = false;
  bool alpha_ge_3 = false;
  bool degenerate = false;
  std::optional<bool> laminar;  // filled on demand by the reduction pipeline
};

namespace detail {

/// Two strong cliques cover `verts` iff the auxiliary graph whose edges are
/// the not-strongly-adjacent pairs of `verts` is bipartite (each colour class
/// is then a strong clique, and a cover can always be made a partition).
inline bool coverable_by_two_strong_cliques(const Trigraph& g,
                                            const std::vector<Vertex>& verts) {
  const int k = static_cast<int>(verts.size());
  std::vector<int> color(static_cast<std::size_t>(k), -1);
  std::vector<int> stack;
  for (int s = 0; s < k; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        if (strongly_adjacent(g.theta(verts[static_cast<std::size_t>(i)],
                                      verts[static_cast<std::size_t>(j)])))
          continue;
        if (color[static_cast<std::size_t>(j)] == -1) {
          color[static_cast<std::size_t>(j)] =
              1 - color[static_cast<std::size_t>(i)];
          stack.push_back(j);
        } else if (color[static_cast<std::size_t>(j)] ==
                   color[static_cast<std::size_t>(i)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

/// Some three vertices pairwise antiadjacent (semi counts).
inline bool has_stable_triple(const Trigraph& g) {
  const int n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!antiadjacent(g.theta(a, b))) continue;
      for (Vertex c = b + 1; c < n; ++c)
        if (antiadjacent(g.theta(a, c)) && antiadjacent(g.theta(b, c)))
          return true;
    }
  return false;
}

/// No vertex has three pairwise antiadjacent neighbours.
inline bool is_claw_free(const Trigraph& g) {
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    const std::vector<Vertex> nb = g.neighbors(v);
    const int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (!antiadjacent(g.theta(nb[static_cast<std::size_t>(i)],
                                  nb[static_cast<std::size_t>(j)])))
          continue;
        for (int k = j + 1; k < d; ++k)
          if (antiadjacent(g.theta(nb[static_cast<std::size_t>(i)],
                                   nb[static_cast<std::size_t>(k)])) &&
              antiadjacent(g.theta(nb[static_cast<std::size_t>(j)],
                                   nb[static_cast<std::size_t>(k)])))
            return false;
      }
  }
  return true;
}

inline bool is_cobipartite(const Trigraph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i)
    all[static_cast<std::size_t>(i)] = i;
  return detail::coverable_by_two_strong_cliques(g, all);
}

/// Every neighbourhood coverable by two strong cliques.
inline bool is_quasi_line(const Trigraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!detail::coverable_by_two_strong_cliques(g, g.neighbors(v)))
      return false;
  return true;
}

inline Classification classify(const Trigraph& g) {
  Classification c;
  c.connected = is_connected(g);
  c.claw_free = is_claw_free(g);
  c.quasi_line = is_quasi_line(g);
  c.cobipartite = is_cobipartite(g);
  c.alpha_ge_3 = has_stable_triple(g);
  c.degenerate = !((c.quasi_line && !c.cobipartite) ||
                   (c.claw_free && c.alpha_ge_3));
  return c;
}

inline std::string classification_report(const Trigraph& g,
                                         const Classification& c) {
  std::string s;
  s += "n: " + std::to_string(g.vertex_count()) + "\n";
  s += "m: " + std::to_string(g.adjacent_pair_count()) + "\n";
  auto flag = [&](const char* k, bool v) {
    s += std::string(k) + ": " + (v ? "true" : "false") + "\n";
  };
  flag("connected", c.connected);
  flag("claw_free", c.claw_free);
  flag("quasi_line", c.quasi_line);
  flag("cobipartite", c.cobipartite);
  flag("alpha_ge_3", c.alpha_ge_3);
  flag("degenerate", c.degenerate);
  if (c.laminar) flag("laminar", *c.laminar);
  return s;
}

}  // namespace trigraph
