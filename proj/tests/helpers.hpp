#pragma once

// Shared test utilities: independent re-implementations used as oracles for
// the fast paths, vertex relabelling, and a small process runner for the
// command-line binary.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "trigraph/core.hpp"
#include "trigraph/structure.hpp"

namespace testutil {

using namespace trigraph;

inline Trigraph relabel(const Trigraph& g, const std::vector<Vertex>& perm) {
  std::vector<PairValue> pairs;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      const Adjacency t = g.theta(u, v);
      if (t != Adjacency::StrongAnti)
        pairs.push_back({perm[static_cast<std::size_t>(u)],
                         perm[static_cast<std::size_t>(v)], t});
    }
  return Trigraph(g.vertex_count(), pairs);
}

inline Trigraph reversed(const Trigraph& g) {
  std::vector<Vertex> perm;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    perm.push_back(g.vertex_count() - 1 - v);
  return relabel(g, perm);
}

inline VertexSet map_set(const VertexSet& s, const std::vector<Vertex>& perm) {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(perm[static_cast<std::size_t>(v)]);
  return VertexSet(out);
}

/// Direct transcription of square-connectivity: every bipartition of A and
/// of B into nonempty halves is crossed by a square inside A u B.
inline bool square_connected_by_bipartitions(const Trigraph& g,
                                             const CliquePair& p) {
  std::vector<std::array<Vertex, 4>> squares;
  const VertexSet& a = p.a();
  const VertexSet& b = p.b();
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      for (int k = 0; k < b.size(); ++k)
        for (int l = 0; l < b.size(); ++l) {
          if (k == l) continue;
          if (antiadjacent(g.theta(a[i], b[l])) &&
              antiadjacent(g.theta(a[j], b[k])) &&
              adjacent(g.theta(a[j], b[l])) && adjacent(g.theta(a[i], b[k])))
            squares.push_back({a[i], a[j], b[k], b[l]});
        }
  auto part_ok = [&](const VertexSet& part, bool a_side) {
    const int sz = part.size();
    if (sz < 2) return true;
    for (unsigned mask = 1; mask + 1 < (1u << sz); ++mask) {
      bool crossed = false;
      for (const auto& sq : squares) {
        const Vertex x = a_side ? sq[0] : sq[2];
        const Vertex y = a_side ? sq[1] : sq[3];
        int ix = -1, iy = -1;
        for (int i = 0; i < sz; ++i) {
          if (part[i] == x) ix = i;
          if (part[i] == y) iy = i;
        }
        const bool x_in = (mask >> ix) & 1u;
        const bool y_in = (mask >> iy) & 1u;
        if (x_in != y_in) {
          crossed = true;
          break;
        }
      }
      if (!crossed) return false;
    }
    return true;
  };
  return part_ok(a, true) && part_ok(b, false);
}

/// Claw scan written independently of the library path: some vertex with
/// three pairwise antiadjacent neighbours.
inline bool has_claw_direct(const Trigraph& g) {
  const int n = g.vertex_count();
  for (Vertex w = 0; w < n; ++w)
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y)
        for (Vertex z = y + 1; z < n; ++z) {
          if (x == w || y == w || z == w) continue;
          if (adjacent(g.theta(w, x)) && adjacent(g.theta(w, y)) &&
              adjacent(g.theta(w, z)) && antiadjacent(g.theta(x, y)) &&
              antiadjacent(g.theta(x, z)) && antiadjacent(g.theta(y, z)))
            return true;
        }
  return false;
}

struct CliRun {
  int exit_code;
  std::string out;
};

/// Runs the built binary with the given arguments, capturing stdout; stderr
/// is dropped.
inline CliRun run_cli(const std::string& cli_path, const std::string& args) {
  const std::string cmd = cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

inline std::string read_file_text(const std::string& path) {
  FILE* f = fopen(path.c_str(), "rb");
  if (!f) return {};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  fclose(f);
  return out;
}

}  // namespace testutil
