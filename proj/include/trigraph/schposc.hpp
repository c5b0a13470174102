#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "trigraph/core.hpp"
#include "trigraph/structure.hpp"

namespace trigraph {

/// Least (b0, b1) such that a0 a1 b1 b0 is a square with b0, b1 strongly
/// adjacent, scanning strongly adjacent pairs (least b0 first, then least
/// b1).  A square whose fourth side is a semiedge can never extend to a
/// homogeneous pair of strong cliques containing the seed, so restricting
/// the scan to strong pairs does not change any outcome of the growth.
inline std::optional<std::pair<Vertex, Vertex>> find_seed_square(
    const Trigraph& g, Vertex a0, Vertex a1,
    std::uint64_t* probe_count = nullptr) {
  if (!strongly_adjacent(g.theta(a0, a1)))
    throw std::invalid_argument("seed vertices must be strongly adjacent");
  std::uint64_t probes = 0;
  for (Vertex b0 = 0; b0 < g.vertex_count(); ++b0) {
    if (b0 == a0 || b0 == a1) continue;
    ++probes;
    if (!adjacent(g.theta(b0, a0)) || !antiadjacent(g.theta(b0, a1))) continue;
    for (Vertex b1 : g.strong_neighbors(b0)) {
      if (b1 == a0 || b1 == a1) continue;
      ++probes;
      if (antiadjacent(g.theta(a0, b1)) && adjacent(g.theta(a1, b1))) {
        if (probe_count) *probe_count += probes;
        return std::make_pair(b0, b1);
      }
    }
  }
  if (probe_count) *probe_count += probes;
  return std::nullopt;
}

struct SchposcResult {
  std::optional<CliquePair> pair;
  std::uint64_t steps = 0;  // bookkeeping touches, for scaling checks
};

namespace detail {

/// The growth keeps every vertex in exactly one class.  Outside vertices are
/// split by their relation to the current parts: forced-into-A (mixed on B),
/// forced-into-B (mixed on A), and the four settled classes.
enum class GrowClass : std::uint8_t {
  InA,
  InB,
  PendingA,       // neither strongly complete nor strongly anticomplete to B
  PendingB,       // same, with respect to A
  CompleteA,      // strongly complete to A, strongly anticomplete to B
  CompleteB,      // strongly complete to B, strongly anticomplete to A
  CompleteBoth,   // strongly complete to A u B
  Anticomplete,   // strongly anticomplete to A u B
};

class SchposcRun {
 public:
  SchposcRun(const Trigraph& g, bool validate)
      : g_(g),
        n_(g.vertex_count()),
        cls_(static_cast<std::size_t>(n_), GrowClass::Anticomplete),
        strong_a_(static_cast<std::size_t>(n_), 0),
        strong_b_(static_cast<std::size_t>(n_), 0),
        in_a_(static_cast<std::size_t>(n_), 0),
        in_b_(static_cast<std::size_t>(n_), 0),
        nxt_(static_cast<std::size_t>(n_), -1),
        prv_(static_cast<std::size_t>(n_), -1),
        validate_(validate) {}

  SchposcResult run(Vertex a0, Vertex a1) {
    auto seed = find_seed_square(g_, a0, a1, &steps_);
    if (!seed) return {std::nullopt, steps_};
    const Vertex b0 = seed->first, b1 = seed->second;

    a_ = {a0, a1};
    b_ = {b0, b1};
    for (Vertex w : a_) {
      in_a_[static_cast<std::size_t>(w)] = 1;
      cls_[static_cast<std::size_t>(w)] = GrowClass::InA;
      for (Vertex u : g_.strong_neighbors(w))
        ++strong_a_[static_cast<std::size_t>(u)];
    }
    for (Vertex w : b_) {
      in_b_[static_cast<std::size_t>(w)] = 1;
      cls_[static_cast<std::size_t>(w)] = GrowClass::InB;
      for (Vertex u : g_.strong_neighbors(w))
        ++strong_b_[static_cast<std::size_t>(u)];
    }

    for (Vertex u = 0; u < n_; ++u) {
      if (in_a_[static_cast<std::size_t>(u)] ||
          in_b_[static_cast<std::size_t>(u)])
        continue;
      ++steps_;
      const bool ca = complete_a(u), aa = anticomplete_a(u);
      const bool cb = complete_b(u), ab = anticomplete_b(u);
      const bool mixed_a = !ca && !aa, mixed_b = !cb && !ab;
      if (mixed_a && mixed_b) return {std::nullopt, steps_};
      if (mixed_a) {
        set_pending_b(u);
      } else if (mixed_b) {
        set_pending_a(u);
      } else if (ca && cb) {
        set_class_list(u, GrowClass::CompleteBoth, head_both_);
      } else if (ca && ab) {
        set_class_list(u, GrowClass::CompleteA, head_a_);
      } else if (cb && aa) {
        set_class_list(u, GrowClass::CompleteB, head_b_);
      } else {
        cls_[static_cast<std::size_t>(u)] = GrowClass::Anticomplete;
      }
    }
    if (validate_ && !validate_state()) throw std::logic_error("schposc state");

    while (!pending_b_.empty() || !pending_a_.empty()) {
      if (!pending_b_.empty()) {
        const Vertex v = *pending_b_.begin();
        pending_b_.erase(pending_b_.begin());
        if (!insert_into_b(v)) return {std::nullopt, steps_};
      } else {
        const Vertex v = *pending_a_.begin();
        pending_a_.erase(pending_a_.begin());
        if (!insert_into_a(v)) return {std::nullopt, steps_};
      }
      if (validate_ && !validate_state())
        throw std::logic_error("schposc state");
    }
    return {CliquePair(VertexSet(a_), VertexSet(b_)), steps_};
  }

 private:
  bool complete_a(Vertex u) const {
    return strong_a_[static_cast<std::size_t>(u)] ==
           static_cast<int>(a_.size());
  }
  bool anticomplete_a(Vertex u) const {
    if (strong_a_[static_cast<std::size_t>(u)] != 0) return false;
    const Vertex sp = g_.semi_partner(u);
    return sp == -1 || !in_a_[static_cast<std::size_t>(sp)];
  }
  bool complete_b(Vertex u) const {
    return strong_b_[static_cast<std::size_t>(u)] ==
           static_cast<int>(b_.size());
  }
  bool anticomplete_b(Vertex u) const {
    if (strong_b_[static_cast<std::size_t>(u)] != 0) return false;
    const Vertex sp = g_.semi_partner(u);
    return sp == -1 || !in_b_[static_cast<std::size_t>(sp)];
  }

  void list_insert(Vertex v, Vertex& head) {
    nxt_[static_cast<std::size_t>(v)] = head;
    prv_[static_cast<std::size_t>(v)] = -1;
    if (head != -1) prv_[static_cast<std::size_t>(head)] = v;
    head = v;
  }
  void list_remove(Vertex v, Vertex& head) {
    const Vertex p = prv_[static_cast<std::size_t>(v)];
    const Vertex q = nxt_[static_cast<std::size_t>(v)];
    if (p != -1)
      nxt_[static_cast<std::size_t>(p)] = q;
    else
      head = q;
    if (q != -1) prv_[static_cast<std::size_t>(q)] = p;
  }
  Vertex& head_of(GrowClass c) {
    return c == GrowClass::CompleteBoth ? head_both_
           : c == GrowClass::CompleteA  ? head_a_
                                        : head_b_;
  }
  void set_class_list(Vertex u, GrowClass c, Vertex& head) {
    cls_[static_cast<std::size_t>(u)] = c;
    list_insert(u, head);
  }
  void leave_list(Vertex u) {
    const GrowClass c = cls_[static_cast<std::size_t>(u)];
    if (c == GrowClass::CompleteBoth || c == GrowClass::CompleteA ||
        c == GrowClass::CompleteB)
      list_remove(u, head_of(c));
  }
  void set_pending_a(Vertex u) {
    cls_[static_cast<std::size_t>(u)] = GrowClass::PendingA;
    pending_a_.insert(u);
  }
  void set_pending_b(Vertex u) {
    cls_[static_cast<std::size_t>(u)] = GrowClass::PendingB;
    pending_b_.insert(u);
  }

  // Transition a touched outside vertex after A grew.  Returns false on a
  // forced contradiction (the vertex would have to enter B but is strongly
  // anticomplete to it, or it is forced into both parts).
  bool react_to_a_growth(Vertex u) {
    ++steps_;
    switch (cls_[static_cast<std::size_t>(u)]) {
      case GrowClass::InA:
      case GrowClass::InB:
      case GrowClass::PendingB:
        return true;
      case GrowClass::PendingA:
      case GrowClass::CompleteA:
        return complete_a(u);
      case GrowClass::CompleteBoth:
        if (!complete_a(u)) {
          list_remove(u, head_both_);
          set_pending_b(u);
        }
        return true;
      case GrowClass::CompleteB:
        if (!complete_a(u)) {
          list_remove(u, head_b_);
          set_pending_b(u);
        }
        return true;
      case GrowClass::Anticomplete:
        // only reached when u became adjacent to the new member
        return false;
    }
    return true;
  }

  bool react_to_b_growth(Vertex u) {
    ++steps_;
    switch (cls_[static_cast<std::size_t>(u)]) {
      case GrowClass::InA:
      case GrowClass::InB:
      case GrowClass::PendingA:
        return true;
      case GrowClass::PendingB:
      case GrowClass::CompleteB:
        return complete_b(u);
      case GrowClass::CompleteBoth:
        if (!complete_b(u)) {
          list_remove(u, head_both_);
          set_pending_a(u);
        }
        return true;
      case GrowClass::CompleteA:
        if (!complete_b(u)) {
          list_remove(u, head_a_);
          set_pending_a(u);
        }
        return true;
      case GrowClass::Anticomplete:
        return false;
    }
    return true;
  }

  bool insert_into_a(Vertex v) {
    ++steps_;
    if (!complete_a(v)) return false;  // part would stop being a strong clique
    cls_[static_cast<std::size_t>(v)] = GrowClass::InA;
    in_a_[static_cast<std::size_t>(v)] = 1;
    a_.push_back(v);
    for (Vertex u : g_.strong_neighbors(v)) {
      ++strong_a_[static_cast<std::size_t>(u)];
      if (!react_to_a_growth(u)) return false;
    }
    const Vertex sp = g_.semi_partner(v);
    if (sp != -1 && !react_to_a_growth(sp)) return false;
    // Vertices strongly complete to the old A and antiadjacent to v: every
    // one of them left standing after this scan is strongly adjacent to v,
    // so the wasted inspections charge to edges at v.
    for (Vertex u = head_both_; u != -1;) {
      ++steps_;
      const Vertex next = nxt_[static_cast<std::size_t>(u)];
      if (!strongly_adjacent(g_.theta(u, v))) {
        list_remove(u, head_both_);
        set_pending_b(u);
      }
      u = next;
    }
    for (Vertex u = head_a_; u != -1; u = nxt_[static_cast<std::size_t>(u)]) {
      ++steps_;
      if (!strongly_adjacent(g_.theta(u, v))) return false;
    }
    return true;
  }

  bool insert_into_b(Vertex v) {
    ++steps_;
    if (!complete_b(v)) return false;
    cls_[static_cast<std::size_t>(v)] = GrowClass::InB;
    in_b_[static_cast<std::size_t>(v)] = 1;
    b_.push_back(v);
    for (Vertex u : g_.strong_neighbors(v)) {
      ++strong_b_[static_cast<std::size_t>(u)];
      if (!react_to_b_growth(u)) return false;
    }
    const Vertex sp = g_.semi_partner(v);
    if (sp != -1 && !react_to_b_growth(sp)) return false;
    for (Vertex u = head_both_; u != -1;) {
      ++steps_;
      const Vertex next = nxt_[static_cast<std::size_t>(u)];
      if (!strongly_adjacent(g_.theta(u, v))) {
        list_remove(u, head_both_);
        set_pending_a(u);
      }
      u = next;
    }
    for (Vertex u = head_b_; u != -1; u = nxt_[static_cast<std::size_t>(u)]) {
      ++steps_;
      if (!strongly_adjacent(g_.theta(u, v))) return false;
    }
    return true;
  }

  // Recomputes every class tag from scratch and compares.  Test hook.  A
  // vertex mixed on both parts may be tagged with either pending class: the
  // contradiction is detected no later than its drain.
  bool validate_state() const {
    for (Vertex u = 0; u < n_; ++u) {
      int sa = 0, sb = 0;
      bool semi_a = false, semi_b = false;
      for (Vertex w : a_) {
        if (w == u) continue;
        const Adjacency t = g_.theta(u, w);
        if (strongly_adjacent(t)) ++sa;
        if (t == Adjacency::Semi) semi_a = true;
      }
      for (Vertex w : b_) {
        if (w == u) continue;
        const Adjacency t = g_.theta(u, w);
        if (strongly_adjacent(t)) ++sb;
        if (t == Adjacency::Semi) semi_b = true;
      }
      if (strong_a_[static_cast<std::size_t>(u)] != sa ||
          strong_b_[static_cast<std::size_t>(u)] != sb)
        return false;
      if (in_a_[static_cast<std::size_t>(u)] ||
          in_b_[static_cast<std::size_t>(u)])
        continue;
      const bool mixed_a = !(sa == static_cast<int>(a_.size())) &&
                           !(sa == 0 && !semi_a);
      const bool mixed_b = !(sb == static_cast<int>(b_.size())) &&
                           !(sb == 0 && !semi_b);
      const GrowClass c = cls_[static_cast<std::size_t>(u)];
      if (mixed_a && mixed_b) {
        if (c != GrowClass::PendingA && c != GrowClass::PendingB) return false;
      } else if (mixed_a) {
        if (c != GrowClass::PendingB) return false;
      } else if (mixed_b) {
        if (c != GrowClass::PendingA) return false;
      } else {
        const bool ca = sa == static_cast<int>(a_.size());
        const bool cb = sb == static_cast<int>(b_.size());
        GrowClass expect;
        if (ca && cb)
          expect = GrowClass::CompleteBoth;
        else if (ca)
          expect = GrowClass::CompleteA;
        else if (cb)
          expect = GrowClass::CompleteB;
        else
          expect = GrowClass::Anticomplete;
        if (c != expect) return false;
      }
    }
    return true;
  }

  const Trigraph& g_;
  int n_;
  std::vector<GrowClass> cls_;
  std::vector<int> strong_a_, strong_b_;
  std::vector<char> in_a_, in_b_;
  std::vector<Vertex> nxt_, prv_;
  Vertex head_both_ = -1, head_a_ = -1, head_b_ = -1;
  std::vector<Vertex> a_, b_;
  std::set<Vertex> pending_a_, pending_b_;
  std::uint64_t steps_ = 0;
  bool validate_;
};

}  // namespace detail

/// Grows the unique smallest homogeneous pair of strong cliques with the
/// strongly adjacent seed {a0, a1} inside A, starting from a seed square.
/// Returns the pair (always square-connected) or nullopt when none exists.
/// Forced vertices drain into B before A, each in ascending index order;
/// the result itself is independent of that order.
inline SchposcResult schposc_run(const Trigraph& g, Vertex a0, Vertex a1,
                                 bool validate_state = false) {
  if (!strongly_adjacent(g.theta(a0, a1)))
    throw std::invalid_argument("seed vertices must be strongly adjacent");
  detail::SchposcRun run(g, validate_state);
  return run.run(a0, a1);
}

inline std::optional<CliquePair> schposc(const Trigraph& g, Vertex a0,
                                         Vertex a1) {
  return schposc_run(g, a0, a1).pair;
}

}  // namespace trigraph
