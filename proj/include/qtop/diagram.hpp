#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qtop/error.hpp"

namespace qtop {

enum class GeneratorKind { Identity, PositiveCrossing, NegativeCrossing, Cup, Cap };

// For cups and caps: the sense in which the orientation runs along the arc.
// cup lr: left strand points down, right strand points up.
// cup rl: left strand points up, right strand points down.
// cap lr: left strand points up, right strand points down.
// cap rl: left strand points down, right strand points up.
enum class Direction { LeftToRight, RightToLeft };

// Strand orientation signs.
inline constexpr int kUp = +1;
inline constexpr int kDown = -1;

struct Generator {
  GeneratorKind kind = GeneratorKind::Identity;
  std::size_t position = 0;
  Direction direction = Direction::LeftToRight;

  static Generator identity() { return {}; }
  static Generator crossing(std::size_t p, int sign) {
    return {sign > 0 ? GeneratorKind::PositiveCrossing : GeneratorKind::NegativeCrossing, p, Direction::LeftToRight};
  }
  static Generator cup(std::size_t p, Direction d) { return {GeneratorKind::Cup, p, d}; }
  static Generator cap(std::size_t p, Direction d) { return {GeneratorKind::Cap, p, d}; }

  bool is_crossing() const {
    return kind == GeneratorKind::PositiveCrossing || kind == GeneratorKind::NegativeCrossing;
  }
  int sign() const { return kind == GeneratorKind::PositiveCrossing ? 1 : (kind == GeneratorKind::NegativeCrossing ? -1 : 0); }

  friend bool operator==(const Generator& a, const Generator& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == GeneratorKind::Identity) return true;
    if (a.position != b.position) return false;
    return !(a.kind == GeneratorKind::Cup || a.kind == GeneratorKind::Cap) || a.direction == b.direction;
  }
};

/// Crossing geometry: true when the strand entering bottom-left and leaving
/// top-right passes over. A positive crossing on parallel strands (both up or
/// both down) is of this type; on antiparallel strands the sign flips.
inline bool over_slash(int sign, int left_orientation, int right_orientation) {
  const bool parallel = left_orientation == right_orientation;
  return (sign > 0) == parallel;
}

inline int sign_for(bool over_slash_type, int left_orientation, int right_orientation) {
  const bool parallel = left_orientation == right_orientation;
  return (over_slash_type == parallel) ? 1 : -1;
}

/// A framed oriented tangle diagram as a word of slices read bottom to top,
/// one generator per slice. Level i sits below slice i; level slices().size()
/// is the top boundary. Every strand at every level carries an orientation
/// and a component label; components are numbered by first appearance
/// scanning levels bottom to top, strands left to right.
class SliceDiagram {
 public:
  SliceDiagram() { build(); }
  SliceDiagram(std::vector<int> bottom, std::vector<Generator> slices)
      : bottom_(std::move(bottom)), slices_(std::move(slices)) {
    build();
  }

  const std::vector<int>& bottom() const noexcept { return bottom_; }
  const std::vector<int>& top() const noexcept { return orient_.back(); }
  const std::vector<Generator>& slices() const noexcept { return slices_; }
  std::size_t level_count() const noexcept { return orient_.size(); }
  const std::vector<int>& orientations(std::size_t level) const { return orient_.at(level); }
  const std::vector<std::size_t>& labels(std::size_t level) const { return label_.at(level); }
  std::size_t component_count() const noexcept { return components_; }
  bool closed() const { return bottom_.empty() && top().empty(); }

  std::size_t max_width() const {
    std::size_t w = 0;
    for (const auto& o : orient_) w = std::max(w, o.size());
    return w;
  }

  std::size_t crossing_count() const {
    return static_cast<std::size_t>(std::count_if(slices_.begin(), slices_.end(), [](const Generator& g) { return g.is_crossing(); }));
  }

  /// Slice index of the k-th crossing (bottom to top).
  std::size_t crossing_slice(std::size_t k) const {
    std::size_t seen = 0;
    for (std::size_t s = 0; s < slices_.size(); ++s)
      if (slices_[s].is_crossing() && seen++ == k) return s;
    throw DomainError("no crossing with index " + std::to_string(k) + " (diagram has " + std::to_string(seen) +
                      ")");
  }

  /// False for arcs that reach the bottom or top boundary.
  bool component_is_closed(std::size_t c) const {
    for (std::size_t l : {std::size_t{0}, orient_.size() - 1})
      for (std::size_t x : label_[l])
        if (x == c) return false;
    return true;
  }

  /// Writhe of each component (sum of signs of its self-crossings).
  std::vector<long> writhes() const {
    std::vector<long> w(components_, 0);
    for (std::size_t s = 0; s < slices_.size(); ++s) {
      const auto& g = slices_[s];
      if (!g.is_crossing()) continue;
      const auto a = label_[s][g.position], b = label_[s][g.position + 1];
      if (a == b) w[a] += g.sign();
    }
    return w;
  }

  /// Identity slices dropped.
  SliceDiagram normalized() const {
    std::vector<Generator> out;
    for (const auto& g : slices_)
      if (g.kind != GeneratorKind::Identity) out.push_back(g);
    return SliceDiagram(bottom_, std::move(out));
  }

  friend bool operator==(const SliceDiagram& a, const SliceDiagram& b) {
    if (a.bottom_ != b.bottom_) return false;
    const auto na = a.normalized(), nb = b.normalized();
    return na.slices_ == nb.slices_;
  }

 private:
  void build() {
    for (int o : bottom_)
      if (o != kUp && o != kDown) throw ValidationError("orientation sign must be +1 or -1", 0);

    // segment ids with union-find; cups create one segment for both new strands
    std::vector<std::size_t> parent;
    auto fresh = [&]() {
      parent.push_back(parent.size());
      return parent.size() - 1;
    };
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };

    std::vector<int> o = bottom_;
    std::vector<std::size_t> seg;
    for (std::size_t i = 0; i < o.size(); ++i) seg.push_back(fresh());
    std::vector<std::vector<std::size_t>> segs{seg};
    orient_.assign(1, o);

    for (std::size_t s = 0; s < slices_.size(); ++s) {
      const auto& g = slices_[s];
      const std::size_t p = g.position;
      switch (g.kind) {
        case GeneratorKind::Identity:
          break;
        case GeneratorKind::PositiveCrossing:
        case GeneratorKind::NegativeCrossing:
          if (p + 1 >= o.size())
            throw ValidationError("crossing at position " + std::to_string(p) + " needs two strands, have " +
                                      std::to_string(o.size()),
                                  s);
          std::swap(o[p], o[p + 1]);
          std::swap(seg[p], seg[p + 1]);
          break;
        case GeneratorKind::Cup: {
          if (p > o.size())
            throw ValidationError("cup at position " + std::to_string(p) + " beyond " + std::to_string(o.size()) +
                                      " strands",
                                  s);
          const int left = g.direction == Direction::LeftToRight ? kDown : kUp;
          const auto id = fresh();
          o.insert(o.begin() + static_cast<std::ptrdiff_t>(p), {left, -left});
          seg.insert(seg.begin() + static_cast<std::ptrdiff_t>(p), {id, id});
          break;
        }
        case GeneratorKind::Cap: {
          if (p + 1 >= o.size())
            throw ValidationError("cap at position " + std::to_string(p) + " needs two strands, have " +
                                      std::to_string(o.size()),
                                  s);
          if (o[p] == o[p + 1]) throw ValidationError("cap joins two strands with the same orientation", s);
          const Direction d = o[p] == kUp ? Direction::LeftToRight : Direction::RightToLeft;
          if (d != g.direction)
            throw ValidationError(std::string("cap direction ") +
                                      (g.direction == Direction::LeftToRight ? "lr" : "rl") +
                                      " disagrees with strand orientations",
                                  s);
          const auto a = find(seg[p]), b = find(seg[p + 1]);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
          o.erase(o.begin() + static_cast<std::ptrdiff_t>(p), o.begin() + static_cast<std::ptrdiff_t>(p) + 2);
          seg.erase(seg.begin() + static_cast<std::ptrdiff_t>(p), seg.begin() + static_cast<std::ptrdiff_t>(p) + 2);
          break;
        }
      }
      orient_.push_back(o);
      segs.push_back(seg);
    }

    // every segment lives on at least one level, so scanning levels numbers all components
    std::vector<std::size_t> number(parent.size(), static_cast<std::size_t>(-1));
    components_ = 0;
    label_.clear();
    for (const auto& level : segs) {
      std::vector<std::size_t> lab;
      lab.reserve(level.size());
      for (auto x : level) {
        const auto root = find(x);
        if (number[root] == static_cast<std::size_t>(-1)) number[root] = components_++;
        lab.push_back(number[root]);
      }
      label_.push_back(std::move(lab));
    }
  }

  std::vector<int> bottom_;
  std::vector<Generator> slices_;
  std::vector<std::vector<int>> orient_;
  std::vector<std::vector<std::size_t>> label_;
  std::size_t components_ = 0;
};

/// Concatenate: t first (below), then s. Requires top(t) == bottom(s).
inline SliceDiagram compose(const SliceDiagram& s, const SliceDiagram& t) {
  if (t.top() != s.bottom())
    throw DomainError("compose: top boundary of the lower diagram (" + std::to_string(t.top().size()) +
                      " strands) does not match the bottom of the upper one (" + std::to_string(s.bottom().size()) +
                      " strands) or orientations differ");
  std::vector<Generator> w = t.slices();
  w.insert(w.end(), s.slices().begin(), s.slices().end());
  return SliceDiagram(t.bottom(), std::move(w));
}

/// Side by side: s on the left, t on the right; realized as (s (x) id) then (id (x) t).
inline SliceDiagram tensor(const SliceDiagram& s, const SliceDiagram& t) {
  std::vector<int> bottom = s.bottom();
  bottom.insert(bottom.end(), t.bottom().begin(), t.bottom().end());
  std::vector<Generator> w = s.slices();
  const std::size_t shift = s.top().size();
  for (auto g : t.slices()) {
    if (g.kind != GeneratorKind::Identity) g.position += shift;
    w.push_back(g);
  }
  return SliceDiagram(std::move(bottom), std::move(w));
}

inline SliceDiagram identity_diagram(std::vector<int> orientations) { return SliceDiagram(std::move(orientations), {}); }

/// Closure of a braid word on n upward strands: nested cups on the right,
/// the braid, then nested caps. Letters are +-(i+1) for sigma_i^{+-1}.
inline SliceDiagram braid_closure(std::size_t n, const std::vector<int>& word) {
  std::vector<Generator> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(Generator::cup(i, Direction::RightToLeft));
  for (int letter : word) {
    const auto idx = static_cast<std::size_t>(std::abs(letter));
    if (letter == 0 || idx >= n) throw DomainError("braid letter " + std::to_string(letter) + " out of range");
    w.push_back(Generator::crossing(idx - 1, letter > 0 ? 1 : -1));
  }
  for (std::size_t i = n; i-- > 0;) w.push_back(Generator::cap(i, Direction::LeftToRight));
  return SliceDiagram({}, std::move(w));
}

}  // namespace qtop
