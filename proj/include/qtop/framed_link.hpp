#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "qtop/diagram.hpp"
#include "qtop/error.hpp"
#include "qtop/rational.hpp"

namespace qtop {

/// A closed diagram plus an integer framing per component. The framing is
/// absolute (it is the self-linking); blackboard framing equals the writhe.
struct FramedLink {
  SliceDiagram diagram;
  std::vector<long> framing;

  std::size_t component_count() const { return diagram.component_count(); }
};

inline FramedLink make_framed(SliceDiagram d, std::vector<long> framing) {
  if (!d.closed()) throw DomainError("a framed link needs a closed diagram");
  if (framing.size() != d.component_count())
    throw DomainError("framing vector has " + std::to_string(framing.size()) + " entries, link has " +
                      std::to_string(d.component_count()) + " components");
  return {std::move(d), std::move(framing)};
}

/// The diagram's own blackboard framing.
inline FramedLink blackboard(SliceDiagram d) {
  auto w = d.writhes();
  return make_framed(std::move(d), std::move(w));
}

inline FramedLink with_framing(const FramedLink& l, std::vector<long> framing) {
  return make_framed(l.diagram, std::move(framing));
}

/// Slices of a curl on the strand at position p with the given orientation;
/// the curl's crossing is a self-crossing of sign `sign`.
inline std::vector<Generator> kink_slices(std::size_t p, int orientation, int sign) {
  if (orientation == kUp)
    return {Generator::cup(p + 1, Direction::RightToLeft), Generator::crossing(p, sign),
            Generator::cap(p + 1, Direction::LeftToRight)};
  return {Generator::cup(p + 1, Direction::LeftToRight), Generator::crossing(p, sign),
          Generator::cap(p + 1, Direction::RightToLeft)};
}

inline SliceDiagram insert_slices(const SliceDiagram& d, std::size_t level, const std::vector<Generator>& extra) {
  if (level >= d.level_count()) throw DomainError("level " + std::to_string(level) + " out of range");
  std::vector<Generator> w = d.slices();
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(level), extra.begin(), extra.end());
  return SliceDiagram(d.bottom(), std::move(w));
}

/// Insert `count` curls of sign `sign` on strand `position` at `level`.
inline SliceDiagram add_kinks(const SliceDiagram& d, std::size_t level, std::size_t position, long count, int sign) {
  const auto& o = d.orientations(level);
  if (position >= o.size()) throw DomainError("no strand " + std::to_string(position) + " at level " + std::to_string(level));
  std::vector<Generator> extra;
  for (long i = 0; i < count; ++i) {
    auto k = kink_slices(position, o[position], sign);
    extra.insert(extra.end(), k.begin(), k.end());
  }
  return insert_slices(d, level, extra);
}

/// First (level, position) at which component c is present.
inline std::pair<std::size_t, std::size_t> first_site(const SliceDiagram& d, std::size_t c) {
  for (std::size_t l = 0; l < d.level_count(); ++l) {
    const auto& lab = d.labels(l);
    for (std::size_t p = 0; p < lab.size(); ++p)
      if (lab[p] == c) return {l, p};
  }
  throw DomainError("component " + std::to_string(c) + " does not exist");
}

/// Blackboard diagram realizing the framing: curls are added so that each
/// component's writhe equals its framing.
inline SliceDiagram materialize(const FramedLink& l) {
  SliceDiagram d = l.diagram;
  const auto w = d.writhes();
  for (std::size_t c = 0; c < l.framing.size(); ++c) {
    const long delta = l.framing[c] - w[c];
    if (delta == 0) continue;
    const auto [level, pos] = first_site(d, c);
    d = add_kinks(d, level, pos, std::labs(delta), delta > 0 ? 1 : -1);
  }
  return d;
}

struct LinkingMatrix {
  std::vector<std::vector<long>> entries;

  std::size_t size() const { return entries.size(); }
  /// L.L: the sum of all entries.
  long total() const {
    long s = 0;
    for (const auto& row : entries)
      for (long v : row) s += v;
    return s;
  }
  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
};

/// Off-diagonal: linking numbers (half the signed count of mixed crossings);
/// diagonal: the given self-linkings.
inline LinkingMatrix linking_matrix(const SliceDiagram& d, const std::vector<long>& diagonal) {
  const std::size_t n = d.component_count();
  std::vector<std::vector<long>> twice(n, std::vector<long>(n, 0));
  for (std::size_t s = 0; s < d.slices().size(); ++s) {
    const auto& g = d.slices()[s];
    if (!g.is_crossing()) continue;
    const auto a = d.labels(s)[g.position], b = d.labels(s)[g.position + 1];
    if (a == b) continue;
    twice[a][b] += g.sign();
    twice[b][a] += g.sign();
  }
  LinkingMatrix m;
  m.entries.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m.entries[i][i] = diagonal.at(i);
        continue;
      }
      if (twice[i][j] % 2 != 0) throw DomainError("odd mixed crossing count: diagram is not closed");
      m.entries[i][j] = twice[i][j] / 2;
    }
  return m;
}

inline LinkingMatrix linking_matrix(const FramedLink& l) { return linking_matrix(l.diagram, l.framing); }

/// Signature by congruence diagonalization over Q.
inline long signature(const std::vector<std::vector<long>>& entries) {
  const std::size_t n = entries.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw DomainError("signature needs a square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = entries[i][j];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j] != a[j][i]) throw DomainError("signature needs a symmetric matrix");

  long sig = 0;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // pivot: a remaining nonzero diagonal entry, else make one from an off-diagonal pair
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && sgn(a[i][i]) != 0) p = i;
    if (p == n) {
      std::size_t u = n, v = n;
      for (std::size_t i = 0; i < n && u == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && sgn(a[i][j]) != 0) {
            u = i, v = j;
            break;
          }
      if (u == n) break;  // the remaining block is zero
      // row/col u += row/col v: a[u][u] becomes 2 a[u][v] (a[v][v] = 0)
      for (std::size_t k = 0; k < n; ++k) a[u][k] += a[v][k];
      for (std::size_t k = 0; k < n; ++k) a[k][u] += a[k][v];
      p = u;
    }
    const Rational piv = a[p][p];
    sig += sgn(piv) > 0 ? 1 : -1;
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(a[i][p]) == 0) continue;
      const Rational f = a[i][p] / piv;
      for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
      for (std::size_t k = 0; k < n; ++k) a[k][i] -= f * a[k][p];
    }
  }
  return sig;
}

inline long signature(const LinkingMatrix& m) { return signature(m.entries); }

/// Replace every strand of component c by multiplicity[c] parallel copies in
/// the blackboard framing; multiplicity 0 deletes the component.
inline SliceDiagram cable_diagram(const SliceDiagram& d, const std::vector<std::size_t>& multiplicity) {
  if (multiplicity.size() != d.component_count())
    throw DomainError("cable: " + std::to_string(multiplicity.size()) + " multiplicities for " +
                      std::to_string(d.component_count()) + " components");
  auto expanded_position = [&](std::size_t level, std::size_t p) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < p; ++i) pos += multiplicity[d.labels(level)[i]];
    return pos;
  };
  std::vector<int> bottom;
  for (std::size_t i = 0; i < d.bottom().size(); ++i)
    bottom.insert(bottom.end(), multiplicity[d.labels(0)[i]], d.bottom()[i]);

  std::vector<Generator> w;
  for (std::size_t s = 0; s < d.slices().size(); ++s) {
    const auto& g = d.slices()[s];
    const auto& lab = d.labels(s);
    if (g.kind == GeneratorKind::Identity) continue;
    const std::size_t base = expanded_position(s, g.position);
    if (g.is_crossing()) {
      const std::size_t m = multiplicity[lab[g.position]], n = multiplicity[lab[g.position + 1]];
      for (std::size_t i = m; i-- > 0;)
        for (std::size_t j = 0; j < n; ++j) w.push_back(Generator::crossing(base + i + j, g.sign()));
    } else if (g.kind == GeneratorKind::Cup) {
      // the cup's strands are not yet present at level s; label them from level s+1
      const std::size_t m = multiplicity[d.labels(s + 1)[g.position]];
      for (std::size_t k = 0; k < m; ++k) w.push_back(Generator::cup(base + k, g.direction));
    } else {
      const std::size_t m = multiplicity[lab[g.position]];
      for (std::size_t k = m; k-- > 0;) w.push_back(Generator::cap(base + k, g.direction));
    }
  }
  return SliceDiagram(std::move(bottom), std::move(w));
}

inline FramedLink cable(const FramedLink& l, const std::vector<std::size_t>& multiplicity) {
  return blackboard(cable_diagram(materialize(l), multiplicity));
}

enum class ResolveMode { Switch, Smooth };

/// Switch flips the sign of the k-th crossing; smooth replaces it by the
/// oriented smoothing (two vertical strands for parallel strands, a cap over a
/// cup for antiparallel ones).
inline SliceDiagram resolve(const SliceDiagram& d, std::size_t crossing_index, ResolveMode mode) {
  const std::size_t s = d.crossing_slice(crossing_index);
  std::vector<Generator> w = d.slices();
  const auto g = w[s];
  if (mode == ResolveMode::Switch) {
    w[s] = Generator::crossing(g.position, -g.sign());
    return SliceDiagram(d.bottom(), std::move(w));
  }
  const auto& o = d.orientations(s);
  const int left = o[g.position], right = o[g.position + 1];
  if (left == right) {
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(s));
  } else {
    const Direction cap_dir = left == kUp ? Direction::LeftToRight : Direction::RightToLeft;
    // above the crossing the orientations read (right, left)
    const Direction cup_dir = right == kUp ? Direction::RightToLeft : Direction::LeftToRight;
    w[s] = Generator::cap(g.position, cap_dir);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(s) + 1, Generator::cup(g.position, cup_dir));
  }
  return SliceDiagram(d.bottom(), std::move(w));
}

enum class MoveKind { R0KinkPair, R2, R3, BlowUpPositive, BlowUpNegative };

struct MoveSite {
  std::size_t level = 0;     // R0/R2: level to insert at; R3: slice index of the first crossing
  std::size_t position = 0;  // R0: strand; R2: left strand of the pair
  bool flip = false;         // R0: order of the two curls; R2: which strand goes over
};

/// True when slices i, i+1, i+2 form a third Reidemeister configuration.
inline bool r3_applicable(const SliceDiagram& d, std::size_t i) {
  const auto& w = d.slices();
  if (i + 2 >= w.size()) return false;
  const auto &a = w[i], &b = w[i + 1], &c = w[i + 2];
  if (!a.is_crossing() || !b.is_crossing() || !c.is_crossing()) return false;
  if (a.position != c.position) return false;
  if (b.position != a.position + 1 && b.position + 1 != a.position) return false;
  const bool ta = over_slash(a.sign(), d.orientations(i)[a.position], d.orientations(i)[a.position + 1]);
  const bool tb = over_slash(b.sign(), d.orientations(i + 1)[b.position], d.orientations(i + 1)[b.position + 1]);
  const bool tc = over_slash(c.sign(), d.orientations(i + 2)[c.position], d.orientations(i + 2)[c.position + 1]);
  // one strand over both others and one under both: fails exactly for (s, -s, s)
  return ta != tc || (ta == tb && tb == tc);
}

inline SliceDiagram apply_move(const SliceDiagram& d, MoveKind move, const MoveSite& site) {
  switch (move) {
    case MoveKind::R0KinkPair: {
      const auto& o = d.orientations(site.level);
      if (site.position >= o.size()) throw DomainError("R0: no strand at the requested site");
      auto first = kink_slices(site.position, o[site.position], site.flip ? -1 : 1);
      auto second = kink_slices(site.position, o[site.position], site.flip ? 1 : -1);
      first.insert(first.end(), second.begin(), second.end());
      return insert_slices(d, site.level, first);
    }
    case MoveKind::R2: {
      if (site.level >= d.level_count()) throw DomainError("R2: level out of range");
      const auto& o = d.orientations(site.level);
      if (site.position + 1 >= o.size()) throw DomainError("R2: needs two strands at the requested site");
      const int s1 = sign_for(!site.flip, o[site.position], o[site.position + 1]);
      // above the first crossing the pair is swapped; undo with the opposite geometry
      const int s2 = sign_for(site.flip, o[site.position + 1], o[site.position]);
      return insert_slices(d, site.level, {Generator::crossing(site.position, s1), Generator::crossing(site.position, s2)});
    }
    case MoveKind::R3: {
      const std::size_t i = site.level;
      if (!r3_applicable(d, i)) throw DomainError("R3: pattern not present at slice " + std::to_string(i));
      const auto& w = d.slices();
      const bool ta = over_slash(w[i].sign(), d.orientations(i)[w[i].position], d.orientations(i)[w[i].position + 1]);
      const bool tb =
          over_slash(w[i + 1].sign(), d.orientations(i + 1)[w[i + 1].position], d.orientations(i + 1)[w[i + 1].position + 1]);
      const bool tc =
          over_slash(w[i + 2].sign(), d.orientations(i + 2)[w[i + 2].position], d.orientations(i + 2)[w[i + 2].position + 1]);
      const std::size_t p = w[i].position, q = w[i + 1].position;
      // new word: positions (q, p, q), geometric types (tc, tb, ta)
      std::vector<int> o = d.orientations(i);
      std::vector<Generator> repl;
      for (auto [pos, type] : {std::pair{q, tc}, std::pair{p, tb}, std::pair{q, ta}}) {
        repl.push_back(Generator::crossing(pos, sign_for(type, o[pos], o[pos + 1])));
        std::swap(o[pos], o[pos + 1]);
      }
      std::vector<Generator> out = w;
      std::copy(repl.begin(), repl.end(), out.begin() + static_cast<std::ptrdiff_t>(i));
      return SliceDiagram(d.bottom(), std::move(out));
    }
    default:
      throw DomainError("blow-ups act on framed links, not bare diagrams");
  }
}

inline SliceDiagram unknot_diagram() {
  return SliceDiagram({}, {Generator::cup(0, Direction::LeftToRight), Generator::cap(0, Direction::RightToLeft)});
}

/// R0, R2, R3 keep the framing; a blow-up adjoins a disjoint +-1-framed unknot.
inline FramedLink apply_move(const FramedLink& l, MoveKind move, const MoveSite& site) {
  if (move == MoveKind::BlowUpPositive || move == MoveKind::BlowUpNegative) {
    const long f = move == MoveKind::BlowUpPositive ? 1 : -1;
    auto framing = l.framing;
    framing.push_back(f);
    return make_framed(tensor(l.diagram, unknot_diagram()), std::move(framing));
  }
  return make_framed(apply_move(l.diagram, move, site), l.framing);
}

/// Reverse the orientation of component c, keeping every crossing's geometry.
inline SliceDiagram reverse_component(const SliceDiagram& d, std::size_t c) {
  if (c >= d.component_count()) throw DomainError("no component " + std::to_string(c));
  auto flipped = [&](std::size_t level) {
    std::vector<int> o = d.orientations(level);
    for (std::size_t i = 0; i < o.size(); ++i)
      if (d.labels(level)[i] == c) o[i] = -o[i];
    return o;
  };
  std::vector<Generator> w;
  for (std::size_t s = 0; s < d.slices().size(); ++s) {
    auto g = d.slices()[s];
    if (g.is_crossing()) {
      const auto& old = d.orientations(s);
      const bool type = over_slash(g.sign(), old[g.position], old[g.position + 1]);
      const auto now = flipped(s);
      g = Generator::crossing(g.position, sign_for(type, now[g.position], now[g.position + 1]));
    } else if (g.kind == GeneratorKind::Cup || g.kind == GeneratorKind::Cap) {
      const std::size_t lvl = g.kind == GeneratorKind::Cup ? s + 1 : s;
      if (d.labels(lvl)[g.position] == c)
        g.direction = g.direction == Direction::LeftToRight ? Direction::RightToLeft : Direction::LeftToRight;
    }
    w.push_back(g);
  }
  return SliceDiagram(flipped(0), std::move(w));
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"unknot", "unknot_kink_pos", "unlink2", "hopf", "trefoil", "whitehead"};
  return names;
}

/// Named presentations, returned in their blackboard framing.
///   unknot           counterclockwise circle
///   unknot_kink_pos  the circle with one positive curl (framing +1)
///   unlink2          two circles side by side
///   hopf             closure of sigma_1^2, linking number +1
///   trefoil          closure of sigma_1^3 (right-handed), writhe 3
///   whitehead        closure of sigma_1 sigma_2^-1 sigma_1 sigma_2^-2 with a
///                    positive curl on the first component: both components
///                    unknotted, linking number 0, framing (0, 0)
inline FramedLink builtin(const std::string& name) {
  if (name == "unknot") return blackboard(unknot_diagram());
  if (name == "unknot_kink_pos") return blackboard(add_kinks(unknot_diagram(), 1, 0, 1, 1));
  if (name == "unlink2") return blackboard(tensor(unknot_diagram(), unknot_diagram()));
  if (name == "hopf") return blackboard(braid_closure(2, {1, 1}));
  if (name == "trefoil") return blackboard(braid_closure(2, {1, 1, 1}));
  if (name == "whitehead") {
    auto d = braid_closure(3, {1, -2, 1, -2, -2});
    d = add_kinks(d, 1, 0, 1, 1);
    return blackboard(std::move(d));
  }
  throw DomainError("unknown builtin '" + name + "'");
}

}  // namespace qtop
