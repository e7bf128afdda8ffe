#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtop/constants.hpp"
#include "qtop/cyclotomic.hpp"
#include "qtop/diagram.hpp"
#include "qtop/error.hpp"
#include "qtop/framed_link.hpp"

namespace qtop {

// Planar diagram code. Each crossing lists its four edge labels counterclockwise
// starting at the incoming under-edge; e[2] is the outgoing under-edge and
// over_in (1 or 3) marks the incoming over-edge. Every label occurs at exactly
// two darts: once entering a crossing, once leaving one.
struct PDCrossing {
  std::array<int, 4> e{};
  int over_in = 1;
  int over_out() const { return e[over_in == 1 ? 3 : 1]; }
  friend auto operator<=>(const PDCrossing&, const PDCrossing&) = default;
};

struct PDLink {
  std::vector<PDCrossing> x;
  int free_loops = 0;  // crossingless circles
};

/// Planar diagram code of a closed slice diagram.
inline PDLink to_pd(const SliceDiagram& d) {
  if (!d.closed()) throw DomainError("skein evaluation needs a closed diagram");
  // occurrence ids per (level, position)
  std::vector<std::size_t> offset(d.level_count() + 1, 0);
  for (std::size_t l = 0; l < d.level_count(); ++l) offset[l + 1] = offset[l] + d.orientations(l).size();
  std::vector<std::size_t> parent(offset.back());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto join = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  auto occ = [&](std::size_t l, std::size_t p) { return offset[l] + p; };

  for (std::size_t s = 0; s < d.slices().size(); ++s) {
    const auto& g = d.slices()[s];
    const std::size_t n = d.orientations(s).size(), p = g.position;
    switch (g.kind) {
      case GeneratorKind::Identity:
        for (std::size_t i = 0; i < n; ++i) join(occ(s, i), occ(s + 1, i));
        break;
      case GeneratorKind::PositiveCrossing:
      case GeneratorKind::NegativeCrossing:
        for (std::size_t i = 0; i < n; ++i)
          if (i != p && i != p + 1) join(occ(s, i), occ(s + 1, i));
        break;
      case GeneratorKind::Cup:
        for (std::size_t i = 0; i < n; ++i) join(occ(s, i), occ(s + 1, i < p ? i : i + 2));
        join(occ(s + 1, p), occ(s + 1, p + 1));
        break;
      case GeneratorKind::Cap:
        for (std::size_t i = 0; i < n; ++i)
          if (i != p && i != p + 1) join(occ(s, i), occ(s + 1, i < p ? i : i - 2));
        join(occ(s, p), occ(s, p + 1));
        break;
    }
  }

  std::map<std::size_t, int> label;
  auto lab = [&](std::size_t o) {
    const auto root = find(o);
    auto it = label.find(root);
    if (it != label.end()) return it->second;
    const int id = static_cast<int>(label.size());
    label.emplace(root, id);
    return id;
  };
  PDLink pd;
  for (std::size_t s = 0; s < d.slices().size(); ++s) {
    const auto& g = d.slices()[s];
    if (!g.is_crossing()) continue;
    const std::size_t p = g.position;
    const auto& o = d.orientations(s);
    const auto& above = d.orientations(s + 1);
    // counterclockwise: bottom-left, bottom-right, top-right, top-left
    const std::array<int, 4> ccw{lab(occ(s, p)), lab(occ(s, p + 1)), lab(occ(s + 1, p + 1)), lab(occ(s + 1, p))};
    const std::array<bool, 4> incoming{o[p] == kUp, o[p + 1] == kUp, above[p + 1] == kDown, above[p] == kDown};
    // slash strand: ccw 0 and 2; backslash strand: ccw 1 and 3
    const bool slash_over = over_slash(g.sign(), o[p], o[p + 1]);
    const int under_in = slash_over ? (incoming[1] ? 1 : 3) : (incoming[0] ? 0 : 2);
    PDCrossing c;
    for (int i = 0; i < 4; ++i) c.e[i] = ccw[(under_in + i) % 4];
    c.over_in = incoming[(under_in + 1) % 4] ? 1 : 3;
    pd.x.push_back(c);
  }
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    bool has_crossing = false;
    for (std::size_t s = 0; s < d.slices().size() && !has_crossing; ++s) {
      const auto& g = d.slices()[s];
      if (g.is_crossing() && (d.labels(s)[g.position] == c || d.labels(s)[g.position + 1] == c)) has_crossing = true;
    }
    if (!has_crossing) ++pd.free_loops;
  }
  return pd;
}

namespace detail {

// Endpoints of every edge label: dart (crossing, slot) where it enters and leaves.
struct Darts {
  std::vector<std::pair<int, int>> head, tail;
};

inline bool is_incoming(const PDCrossing& c, int slot) { return slot == 0 || slot == c.over_in; }

inline Darts darts_of(const PDLink& d, int labels) {
  Darts out;
  out.head.assign(labels, {-1, -1});
  out.tail.assign(labels, {-1, -1});
  for (int c = 0; c < static_cast<int>(d.x.size()); ++c)
    for (int i = 0; i < 4; ++i) (is_incoming(d.x[c], i) ? out.head : out.tail)[d.x[c].e[i]] = {c, i};
  return out;
}

// Relabel edges to 0..E-1 in order of first occurrence.
inline int compact(PDLink& d) {
  std::map<int, int> m;
  for (auto& c : d.x)
    for (int& v : c.e) {
      auto [it, fresh] = m.emplace(v, static_cast<int>(m.size()));
      v = it->second;
      (void)fresh;
    }
  return static_cast<int>(m.size());
}

// Remove crossings and glue edge ends: each pair in `joins` becomes one edge.
// Closed curves left without crossings become free loops.
inline PDLink remove_and_join(const PDLink& d, const std::vector<int>& removed,
                              const std::vector<std::pair<int, int>>& joins) {
  std::map<int, int> parent;
  auto find = [&](int a) {
    if (!parent.count(a)) parent[a] = a;
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [a, b] : joins) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  PDLink out;
  out.free_loops = d.free_loops;
  std::vector<bool> gone(d.x.size(), false);
  for (int c : removed) gone[c] = true;
  std::map<int, bool> alive;  // class root -> still meets a crossing
  for (auto& [a, unused] : parent) {
    (void)unused;
    alive[find(a)] = false;
  }
  for (std::size_t c = 0; c < d.x.size(); ++c) {
    if (gone[c]) continue;
    PDCrossing n = d.x[c];
    for (int& v : n.e)
      if (parent.count(v)) {
        v = find(v);
        alive[v] = true;
      }
    out.x.push_back(n);
  }
  for (auto& [root, meets] : alive)
    if (!meets) ++out.free_loops;
  compact(out);
  return out;
}

}  // namespace detail

/// Switch the crossing: the over strand becomes the under strand.
inline PDLink switch_crossing(const PDLink& d, int c) {
  PDLink out = d;
  const auto& o = d.x[c];
  PDCrossing n;
  const int start = o.over_in;  // the old incoming over-edge becomes the incoming under-edge
  for (int i = 0; i < 4; ++i) n.e[i] = o.e[(start + i) % 4];
  n.over_in = start == 1 ? 3 : 1;  // the old e[0] sits at slot 3 (start 1) or slot 1 (start 3)
  out.x[c] = n;
  return out;
}

/// Oriented smoothing: under-in joins over-out and over-in joins under-out.
inline PDLink smooth_crossing(const PDLink& d, int c) {
  const auto& o = d.x[c];
  return detail::remove_and_join(d, {c}, {{o.e[0], o.over_out()}, {o.e[o.over_in], o.e[2]}});
}

/// Number of closed components (free loops included).
inline int pd_component_count(const PDLink& d) {
  const int labels = static_cast<int>(2 * d.x.size());
  if (labels == 0) return d.free_loops;
  const auto darts = detail::darts_of(d, labels);
  std::vector<bool> seen(labels, false);
  int comps = 0;
  for (int s = 0; s < labels; ++s) {
    if (seen[s]) continue;
    ++comps;
    for (int e = s; !seen[e];) {
      seen[e] = true;
      const auto [c, i] = darts.head[e];
      e = d.x[c].e[(i + 2) % 4];
    }
  }
  return comps + d.free_loops;
}

enum class SkeinHeuristic {
  FixedBase,    // base point: smallest edge label of each component; order by that label
  MinimizeBad,  // base points and component order chosen to minimize bad crossings
};

struct SkeinStats {
  std::size_t nodes = 0;
  std::size_t memo_hits = 0;
  std::size_t memo_size = 0;
};

/// Recursive evaluation of the skein invariant
///   I(L+) + I(L-) = sqrt2 I(L0),  I(unknot) = 1,  I(unknot u K) = sqrt2 I(K).
/// A connected diagram is first reduced by R1 (one-edge faces) and R2 (bigon
/// faces with one strand over at both corners). The recursion then switches
/// toward the descending diagram for a base point per component and a
/// component order: I(D) = sqrt2 I(D0) - I(D'), where D' keeps the base and
/// has one bad crossing fewer and D0 has one crossing fewer. Descending
/// diagrams are unlinks. Split pieces factor as I(A u B) = sqrt2 I(A) I(B).
class SkeinEngine {
 public:
  explicit SkeinEngine(SkeinHeuristic h = SkeinHeuristic::MinimizeBad, std::size_t node_budget = 20'000'000)
      : heuristic_(h), budget_(node_budget), sqrt2_(sqrt2_16()) {}

  CycNum evaluate(const SliceDiagram& d) { return evaluate(to_pd(d)); }

  CycNum evaluate(const PDLink& d) {
    PDLink c = d;
    detail::compact(c);
    return general(c);
  }

  const SkeinStats& stats() const noexcept { return stats_; }

 private:
  using Base = std::vector<int>;  // ordered start edges, one per component

  CycNum sqrt2_pow(long k) const { return power(ExactField{}, sqrt2_, k); }

  CycNum general(const PDLink& d) {
    // split into crossing-connected pieces
    const int n = static_cast<int>(d.x.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::map<int, int> first_at;
    for (int c = 0; c < n; ++c)
      for (int v : d.x[c].e) {
        auto [it, fresh] = first_at.emplace(v, c);
        if (!fresh) parent[find(c)] = find(it->second);
      }
    std::map<int, PDLink> pieces;
    for (int c = 0; c < n; ++c) pieces[find(c)].x.push_back(d.x[c]);

    const long units = static_cast<long>(pieces.size()) + d.free_loops;
    CycNum value = units == 0 ? sqrt2_.inv() : sqrt2_pow(units - 1);
    for (auto& [root, piece] : pieces) {
      (void)root;
      detail::compact(piece);
      value = value * connected(piece, std::nullopt);
    }
    return value;
  }

  // One R1 or R2 reduction, if any applies.
  std::optional<PDLink> reduce_once(const PDLink& d) const {
    for (int c = 0; c < static_cast<int>(d.x.size()); ++c) {
      const auto& e = d.x[c].e;
      for (int i = 0; i < 4; ++i)
        if (e[i] == e[(i + 1) % 4]) return detail::remove_and_join(d, {c}, {{e[(i + 2) % 4], e[(i + 3) % 4]}});
    }
    // bigon faces: dart (c,i) -> other end of its edge -> next slot counterclockwise
    const int labels = static_cast<int>(2 * d.x.size());
    const auto darts = detail::darts_of(d, labels);
    auto partner = [&](int c, int i) {
      const int v = d.x[c].e[i];
      return detail::is_incoming(d.x[c], i) ? darts.tail[v] : darts.head[v];
    };
    for (int c = 0; c < static_cast<int>(d.x.size()); ++c)
      for (int i = 0; i < 4; ++i) {
        const auto [c1, i1] = partner(c, i);
        if (c1 == c) continue;
        const int j1 = (i1 + 1) % 4;
        const auto [c2, i2] = partner(c1, j1);
        if (c2 != c || (i2 + 1) % 4 != i) continue;
        // edges d.x[c].e[i] (slots i, i1) and d.x[c1].e[j1] (slots j1, i2) bound a bigon
        if ((i % 2) != (i1 % 2)) continue;  // the strand must be over (or under) at both corners
        const auto& a = d.x[c].e;
        const auto& b = d.x[c1].e;
        return detail::remove_and_join(d, {c, c1}, {{a[(i + 2) % 4], b[(i1 + 2) % 4]}, {a[(i2 + 2) % 4], b[(j1 + 2) % 4]}});
      }
    return std::nullopt;
  }

  // Canonical code: minimum over start edges of the traversal relabeling.
  std::string canonical(const PDLink& d) const {
    const int labels = static_cast<int>(2 * d.x.size());
    const auto darts = detail::darts_of(d, labels);
    std::string best;
    for (int start = 0; start < labels; ++start) {
      std::vector<int> id(labels, -1);
      std::vector<int> crossing_order;
      std::vector<bool> crossing_seen(d.x.size(), false);
      int next = 0;
      auto walk = [&](int s) {
        for (int e = s; id[e] < 0;) {
          id[e] = next++;
          const auto [c, i] = darts.head[e];
          if (!crossing_seen[c]) crossing_seen[c] = true, crossing_order.push_back(c);
          e = d.x[c].e[(i + 2) % 4];
        }
      };
      walk(start);
      for (std::size_t k = 0; k < crossing_order.size(); ++k) {
        const auto& c = d.x[crossing_order[k]];
        // the strand not yet walked enters at slot 0 or at over_in
        for (int slot : {0, c.over_in})
          if (id[c.e[slot]] < 0) walk(c.e[slot]);
      }
      std::vector<std::array<int, 5>> code;
      for (const auto& c : d.x) code.push_back({id[c.e[0]], id[c.e[1]], id[c.e[2]], id[c.e[3]], c.over_in});
      std::sort(code.begin(), code.end());
      std::string s;
      for (const auto& t : code)
        for (int v : t) s += std::to_string(v) + ',';
      if (best.empty() || s < best) best = std::move(s);
    }
    return best;
  }

  // Components as edge sequences in traversal order from a start edge.
  std::vector<std::vector<int>> components(const PDLink& d) const {
    const int labels = static_cast<int>(2 * d.x.size());
    const auto darts = detail::darts_of(d, labels);
    std::vector<bool> seen(labels, false);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < labels; ++s) {
      if (seen[s]) continue;
      out.emplace_back();
      for (int e = s; !seen[e];) {
        seen[e] = true;
        out.back().push_back(e);
        const auto [c, i] = darts.head[e];
        e = d.x[c].e[(i + 2) % 4];
      }
    }
    return out;
  }

  // Crossings first met on the under strand, in traversal order.
  std::vector<int> bad_crossings(const PDLink& d, const Base& base) const {
    const int labels = static_cast<int>(2 * d.x.size());
    const auto darts = detail::darts_of(d, labels);
    std::vector<bool> met(d.x.size(), false);
    std::vector<int> bad;
    for (int s : base) {
      int e = s;
      do {
        const auto [c, i] = darts.head[e];
        if (!met[c]) {
          met[c] = true;
          if (i == 0) bad.push_back(c);
        }
        e = d.x[c].e[(i + 2) % 4];
      } while (e != s);
    }
    return bad;
  }

  Base choose_base(const PDLink& d) const {
    auto comps = components(d);
    if (heuristic_ == SkeinHeuristic::FixedBase) {
      Base b;
      for (auto& c : comps) b.push_back(*std::min_element(c.begin(), c.end()));
      std::sort(b.begin(), b.end());
      return b;
    }
    // per component: start minimizing bad self-crossings
    Base starts;
    for (const auto& comp : comps) {
      int best = comp.front();
      std::size_t best_bad = static_cast<std::size_t>(-1);
      for (int s : comp) {
        const auto bad = bad_self(d, s);
        if (bad < best_bad) best_bad = bad, best = s;
      }
      starts.push_back(best);
    }
    // order: exhaustive for few components, else greedy by pairwise bad counts
    std::vector<int> order(comps.size());
    std::iota(order.begin(), order.end(), 0);
    auto cost = [&](const std::vector<int>& ord) {
      Base b;
      for (int k : ord) b.push_back(starts[k]);
      return bad_crossings(d, b).size();
    };
    if (comps.size() <= 6) {
      auto best = order;
      std::size_t best_cost = cost(order);
      while (std::next_permutation(order.begin(), order.end())) {
        const auto c = cost(order);
        if (c < best_cost) best_cost = c, best = order;
      }
      order = best;
    }
    Base b;
    for (int k : order) b.push_back(starts[k]);
    return b;
  }

  std::size_t bad_self(const PDLink& d, int start) const {
    const int labels = static_cast<int>(2 * d.x.size());
    const auto darts = detail::darts_of(d, labels);
    // crossings the component meets twice
    std::map<int, int> count;
    int e = start;
    do {
      const auto [c, i] = darts.head[e];
      ++count[c];
      e = d.x[c].e[(i + 2) % 4];
    } while (e != start);
    std::vector<bool> met(d.x.size(), false);
    std::size_t bad = 0;
    e = start;
    do {
      const auto [c, i] = darts.head[e];
      if (count[c] == 2 && !met[c]) {
        met[c] = true;
        if (i == 0) ++bad;
      }
      e = d.x[c].e[(i + 2) % 4];
    } while (e != start);
    return bad;
  }

  CycNum connected(PDLink d, std::optional<Base> inherited) {
    if (++stats_.nodes > budget_)
      throw DomainError("skein recursion exceeded its budget of " + std::to_string(budget_) + " nodes");
    if (auto r = reduce_once(d)) return general(*r);

    const std::string key = canonical(d);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    const Base base = inherited ? *inherited : choose_base(d);
    const auto bad = bad_crossings(d, base);
    CycNum value;
    if (bad.empty()) {
      value = sqrt2_pow(static_cast<long>(base.size()) - 1);
    } else {
      const int c = bad.front();
      value = sqrt2_ * general(smooth_crossing(d, c)) - connected(switch_crossing(d, c), base);
    }
    memo_.emplace(key, value);
    stats_.memo_size = memo_.size();
    return value;
  }

  SkeinHeuristic heuristic_;
  std::size_t budget_;
  CycNum sqrt2_;
  std::map<std::string, CycNum> memo_;
  SkeinStats stats_;
};

inline CycNum skein_I(const SliceDiagram& d, SkeinHeuristic h = SkeinHeuristic::MinimizeBad) {
  SkeinEngine engine(h);
  return engine.evaluate(d);
}

inline CycNum skein_I(const FramedLink& l, SkeinHeuristic h = SkeinHeuristic::MinimizeBad) {
  return skein_I(l.diagram, h);
}

enum class ArfStatus { Proper, NonProper, ConventionAnomaly };

struct ArfResult {
  CycNum I;
  std::size_t components = 0;
  ArfStatus status = ArfStatus::ConventionAnomaly;
  int epsilon = 0;             // meaningful when proper
  bool proper_by_linking = false;  // every component has even total linking with the rest
};

inline bool proper_by_linking(const LinkingMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    long total = 0;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != i) total += m.entries[i][j];
    if (total % 2 != 0) return false;
  }
  return true;
}

/// Arf invariant read off I: I = (-1)^eps sqrt2^{n-1} for proper links, 0 otherwise.
inline ArfResult arf(const SliceDiagram& d) {
  ArfResult r;
  r.I = skein_I(d);
  r.components = d.component_count();
  r.proper_by_linking = proper_by_linking(linking_matrix(d, std::vector<long>(d.component_count(), 0)));
  const CycNum unit = r.components == 0 ? sqrt2_16().inv()
                                        : power(ExactField{}, sqrt2_16(), static_cast<long>(r.components) - 1);
  if (r.I.is_zero()) {
    r.status = ArfStatus::NonProper;
  } else if (r.I == unit) {
    r.status = ArfStatus::Proper, r.epsilon = 0;
  } else if (r.I == unit * -1L) {
    r.status = ArfStatus::Proper, r.epsilon = 1;
  } else {
    r.status = ArfStatus::ConventionAnomaly;
  }
  return r;
}

/// J at all colors 2 via J_L = t^{3 L.L} sqrt2 I(L), t = e^{2 pi i/16}.
inline CycNum jones_from_skein(const FramedLink& l, SkeinEngine& engine) {
  const auto k = constants(4);
  const long ll = linking_matrix(l).total();
  return power(ExactField{}, k.t_bridge, 3 * ll) * k.sqrt2 * engine.evaluate(l.diagram);
}

inline CycNum jones_from_skein(const FramedLink& l) {
  SkeinEngine engine;
  return jones_from_skein(l, engine);
}

struct CablingTerm {
  std::vector<std::size_t> multiplicity;  // n - 2j
  long coefficient = 0;                   // (-1)^|j| prod C(n_i - j_i, j_i)
  long self_linking = 0;                  // L.L of the cabled link
  CycNum I;
  CycNum J;
};

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

/// J_{L,k} = sum_{0 <= j <= n/2} (-1)^{|j|} prod_i C(n_i - j_i, j_i) J(L^{n - 2j}), n = k - 1,
/// each J(L^m) taken from the skein engine on the blackboard cable.
inline CycNum colored_via_cabling(const FramedLink& l, const std::vector<int>& colors, std::vector<CablingTerm>* trace = nullptr,
                                  SkeinEngine* shared = nullptr) {
  if (colors.size() != l.component_count())
    throw DomainError("coloring has " + std::to_string(colors.size()) + " entries, link has " +
                      std::to_string(l.component_count()) + " components");
  for (int k : colors)
    if (k < 1 || k > 3) throw DomainError("color " + std::to_string(k) + " outside 1..3 at level 4");
  SkeinEngine local;
  SkeinEngine& engine = shared ? *shared : local;
  const std::size_t n = colors.size();
  std::vector<long> top(n), j(n, 0);
  for (std::size_t i = 0; i < n; ++i) top[i] = colors[i] - 1;
  const SliceDiagram base = materialize(l);
  const FramedLink framed = blackboard(base);

  CycNum total = CycNum::zero(16);
  while (true) {
    CablingTerm term;
    term.coefficient = 1;
    long parity = 0;
    for (std::size_t i = 0; i < n; ++i) {
      term.multiplicity.push_back(static_cast<std::size_t>(top[i] - 2 * j[i]));
      term.coefficient *= binomial(top[i] - j[i], j[i]);
      parity += j[i];
    }
    if (parity % 2) term.coefficient = -term.coefficient;
    const FramedLink cabled = cable(framed, term.multiplicity);
    term.self_linking = linking_matrix(cabled).total();
    term.I = engine.evaluate(cabled.diagram);
    const auto k = constants(4);
    term.J = power(ExactField{}, k.t_bridge, 3 * term.self_linking) * k.sqrt2 * term.I;
    total = total + term.J * term.coefficient;
    if (trace) trace->push_back(term);

    std::size_t i = 0;
    while (i < n && j[i] == top[i] / 2) j[i++] = 0;
    if (i == n) break;
    ++j[i];
  }
  return total;
}

}  // namespace qtop
