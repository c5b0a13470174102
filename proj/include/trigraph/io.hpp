#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "trigraph/core.hpp"
#include "trigraph/thickening.hpp"

namespace trigraph {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

namespace detail {

// Content lines with their 1-based numbers; '#' starts a comment.
inline std::vector<std::pair<int, std::string>> content_lines(
    const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) out.emplace_back(no, line);
  }
  return out;
}

inline long parse_int(const std::string& tok, int line, const char* what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok +
                               "'");
  }
}

}  // namespace detail

/// Format: header `trigraph <n>`, then one line `<u> <v> strong|semi` per
/// non-strongly-antiadjacent pair, 0-based.  Unlisted pairs are strongly
/// antiadjacent.  Comments (#) and blank lines are ignored.
inline Trigraph parse_trigraph(const std::string& text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'trigraph <n>' header");

  {
    std::istringstream head(lines[0].second);
    std::string kw;
    head >> kw;
    if (kw != "trigraph")
      throw ParseError(lines[0].first, "expected 'trigraph <n>' header");
  }
  std::istringstream head(lines[0].second);
  std::string kw, ntok, extra;
  head >> kw >> ntok;
  if (ntok.empty())
    throw ParseError(lines[0].first, "expected vertex count after 'trigraph'");
  if (head >> extra)
    throw ParseError(lines[0].first, "trailing tokens after header");
  const long n = detail::parse_int(ntok, lines[0].first, "vertex count");
  if (n < 0) throw ParseError(lines[0].first, "negative vertex count");

  std::vector<PairValue> pairs;
  std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                         0);
  std::vector<char> has_semi(static_cast<std::size_t>(n), 0);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const int lno = lines[li].first;
    std::istringstream in(lines[li].second);
    std::string ut, vt, kind, rest;
    if (!(in >> ut >> vt >> kind))
      throw ParseError(lno, "expected '<u> <v> strong|semi'");
    if (in >> rest) throw ParseError(lno, "trailing tokens after pair");
    const long u = detail::parse_int(ut, lno, "vertex index");
    const long v = detail::parse_int(vt, lno, "vertex index");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(lno, "vertex index out of range 0.." +
                                std::to_string(n - 1));
    if (u == v) throw ParseError(lno, "self-loop on vertex " + ut);
    const std::size_t idx = static_cast<std::size_t>(u) *
                                static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(v);
    const std::size_t xdi = static_cast<std::size_t>(v) *
                                static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(u);
    if (seen[idx]) throw ParseError(lno, "duplicate pair " + ut + " " + vt);
    seen[idx] = seen[xdi] = 1;
    Adjacency val;
    if (kind == "strong") {
      val = Adjacency::Strong;
    } else if (kind == "semi") {
      if (has_semi[static_cast<std::size_t>(u)] ||
          has_semi[static_cast<std::size_t>(v)])
        throw ParseError(lno, "semiedges must form a matching");
      has_semi[static_cast<std::size_t>(u)] =
          has_semi[static_cast<std::size_t>(v)] = 1;
      val = Adjacency::Semi;
    } else {
      throw ParseError(lno, "unknown pair kind '" + kind + "'");
    }
    pairs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), val});
  }
  return Trigraph(static_cast<int>(n), pairs);
}

inline std::string serialize_trigraph(const Trigraph& g) {
  std::string out = "trigraph " + std::to_string(g.vertex_count()) + "\n";
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      const Adjacency t = g.theta(u, v);
      if (t == Adjacency::StrongAnti) continue;
      out += std::to_string(u) + " " + std::to_string(v) + " " +
             (t == Adjacency::Strong ? "strong" : "semi") + "\n";
    }
  return out;
}

/// Format: header `thickening <n_reduced> <n_original>`, then one line
/// `<v'>: <v1> <v2> ...` per reduced vertex, ascending.
inline ThickeningMap parse_thickening_map(const std::string& text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty())
    throw ParseError(1, "missing 'thickening <n_reduced> <n_original>' header");
  std::istringstream head(lines[0].second);
  std::string kw, rt, ot, extra;
  head >> kw >> rt >> ot;
  if (kw != "thickening" || ot.empty())
    throw ParseError(lines[0].first,
                     "expected 'thickening <n_reduced> <n_original>' header");
  if (head >> extra)
    throw ParseError(lines[0].first, "trailing tokens after header");
  const long nr = detail::parse_int(rt, lines[0].first, "reduced vertex count");
  const long no = detail::parse_int(ot, lines[0].first, "original vertex count");
  if (nr < 0 || no < 0)
    throw ParseError(lines[0].first, "negative vertex count");
  if (static_cast<long>(lines.size()) - 1 != nr)
    throw ParseError(lines.empty() ? 1 : lines.back().first,
                     "expected exactly " + std::to_string(nr) +
                         " part lines, got " +
                         std::to_string(lines.size() - 1));

  std::vector<VertexSet> parts;
  for (long v = 0; v < nr; ++v) {
    const int lno = lines[static_cast<std::size_t>(v) + 1].first;
    std::istringstream in(lines[static_cast<std::size_t>(v) + 1].second);
    std::string label;
    in >> label;
    if (label != std::to_string(v) + ":")
      throw ParseError(lno, "expected part line '" + std::to_string(v) +
                                ": ...', got '" + label + "'");
    std::vector<Vertex> members;
    std::string tok;
    while (in >> tok) {
      const long x = detail::parse_int(tok, lno, "vertex index");
      if (x < 0 || x >= no)
        throw ParseError(lno, "part vertex out of range 0.." +
                                  std::to_string(no - 1));
      members.push_back(static_cast<Vertex>(x));
    }
    if (members.empty()) throw ParseError(lno, "empty part");
    parts.emplace_back(std::move(members));
  }
  return ThickeningMap(static_cast<int>(no), std::move(parts));
}

inline std::string serialize_thickening_map(const ThickeningMap& map) {
  std::string out = "thickening " + std::to_string(map.source_size()) + " " +
                    std::to_string(map.target_size()) + "\n";
  for (Vertex v = 0; v < map.source_size(); ++v) {
    out += std::to_string(v) + ":";
    for (Vertex x : map.part(v)) out += " " + std::to_string(x);
    out += "\n";
  }
  return out;
}

}  // namespace trigraph
