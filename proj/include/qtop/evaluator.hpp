#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "qtop/diagram.hpp"
#include "qtop/error.hpp"
#include "qtop/framed_link.hpp"
#include "qtop/matrix.hpp"
#include "qtop/quantum_algebra.hpp"

namespace qtop {

using Coloring = std::vector<int>;

struct ColoredDiagram {
  SliceDiagram diagram;
  Coloring colors;  // one per component
};

namespace detail {

// Apply `op` to the tensor factor range of dimension in_dim sitting between a
// left block of dimension `left` and a right block of dimension `right`.
template <class F>
Matrix<typename F::value_type> apply_local(const F& field, const Matrix<typename F::value_type>& state,
                                           std::size_t left, std::size_t in_dim, std::size_t right,
                                           const Matrix<typename F::value_type>& op) {
  using V = typename F::value_type;
  const std::size_t out_dim = op.rows();
  std::vector<std::vector<std::pair<std::size_t, V>>> column(in_dim);
  for (std::size_t m = 0; m < in_dim; ++m)
    for (std::size_t mo = 0; mo < out_dim; ++mo)
      if (!field.is_zero(op(mo, m))) column[m].emplace_back(mo, op(mo, m));

  auto out = zeros(field, left * out_dim * right, state.cols());
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t m = 0; m < in_dim; ++m) {
      if (column[m].empty()) continue;
      for (std::size_t r = 0; r < right; ++r) {
        const std::size_t row = (l * in_dim + m) * right + r;
        for (std::size_t c = 0; c < state.cols(); ++c) {
          const V& v = state(row, c);
          if (field.is_zero(v)) continue;
          for (const auto& [mo, a] : column[m]) out((l * out_dim + mo) * right + r, c) += a * v;
        }
      }
    }
  return out;
}

inline std::size_t product_of_colors(const Signature& s, std::size_t from, std::size_t to) {
  std::size_t d = 1;
  for (std::size_t i = from; i < to; ++i) d *= static_cast<std::size_t>(s[i].color);
  return d;
}

}  // namespace detail

/// Boundary signature at a level: a downward strand carries V^k, an upward one V^k*.
inline Signature level_signature(const SliceDiagram& d, const Coloring& colors, std::size_t level) {
  Signature s;
  const auto& o = d.orientations(level);
  const auto& lab = d.labels(level);
  for (std::size_t i = 0; i < o.size(); ++i) s.push_back({colors[lab[i]], o[i] == kUp});
  return s;
}

/// The tangle operator, contracted slice by slice from the bottom boundary.
template <class F>
Operator<F> evaluate(const QuantumAlgebra<F>& qa, const SliceDiagram& d, const Coloring& colors) {
  if (colors.size() != d.component_count())
    throw DomainError("coloring has " + std::to_string(colors.size()) + " entries, diagram has " +
                      std::to_string(d.component_count()) + " components");
  for (int k : colors) qa.require_color(k);
  const auto& field = qa.field();

  const Signature domain = level_signature(d, colors, 0);
  auto state = identity(field, signature_dimension(domain));
  Signature cur = domain;
  for (std::size_t s = 0; s < d.slices().size(); ++s) {
    const auto& g = d.slices()[s];
    if (g.kind == GeneratorKind::Identity) continue;
    const std::size_t p = g.position;
    const auto& o = d.orientations(s);
    const Signature next = level_signature(d, colors, s + 1);
    if (g.is_crossing()) {
      const auto& m = over_slash(g.sign(), o[p], o[p + 1]) ? qa.braiding(cur[p], cur[p + 1])
                                                            : qa.braiding_inv(cur[p], cur[p + 1]);
      state = detail::apply_local(field, state, detail::product_of_colors(cur, 0, p),
                                  detail::product_of_colors(cur, p, p + 2),
                                  detail::product_of_colors(cur, p + 2, cur.size()), m);
    } else if (g.kind == GeneratorKind::Cup) {
      const int k = next[p].color;
      const auto op = qa.cupcap(g.direction == Direction::LeftToRight ? CupCapKind::N : CupCapKind::N_check, k);
      state = detail::apply_local(field, state, detail::product_of_colors(cur, 0, p), 1,
                                  detail::product_of_colors(cur, p, cur.size()), op.matrix);
    } else {
      const int k = cur[p].color;
      const auto op = qa.cupcap(g.direction == Direction::LeftToRight ? CupCapKind::E : CupCapKind::E_check, k);
      state = detail::apply_local(field, state, detail::product_of_colors(cur, 0, p), k * k,
                                  detail::product_of_colors(cur, p + 2, cur.size()), op.matrix);
    }
    cur = next;
  }
  return {domain, cur, std::move(state)};
}

template <class F>
Operator<F> evaluate(const QuantumAlgebra<F>& qa, const ColoredDiagram& cd) {
  return evaluate(qa, cd.diagram, cd.colors);
}

/// Scalar J of a closed diagram.
template <class F>
typename F::value_type evaluate_closed(const QuantumAlgebra<F>& qa, const SliceDiagram& d, const Coloring& colors) {
  if (!d.closed()) throw DomainError("scalar evaluation needs a closed diagram");
  return evaluate(qa, d, colors).matrix(0, 0);
}

/// J_{L,k}: evaluation of the framing-materialized diagram.
template <class F>
typename F::value_type evaluate_link(const QuantumAlgebra<F>& qa, const FramedLink& l, const Coloring& colors) {
  return evaluate_closed(qa, materialize(l), colors);
}

/// All colorings in {1..r-1}^n, lexicographic.
inline std::vector<Coloring> all_colorings(std::size_t n, int r) {
  std::vector<Coloring> out;
  Coloring c(n, 1);
  while (true) {
    out.push_back(c);
    std::size_t i = n;
    while (i > 0 && c[i - 1] == r - 1) c[--i] = 1;
    if (i == 0) break;
    ++c[i - 1];
  }
  return out;
}

/// One scalar per coloring; with threads > 1 the colorings are split across
/// workers, each result depending only on its own coloring.
template <class F>
std::map<Coloring, typename F::value_type> evaluate_colored_link_family(const QuantumAlgebra<F>& qa, const FramedLink& l,
                                                                        const std::vector<Coloring>& colorings,
                                                                        unsigned threads = 1) {
  const SliceDiagram d = materialize(l);
  std::vector<typename F::value_type> values(colorings.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < colorings.size(); i += step) values[i] = evaluate_closed(qa, d, colorings[i]);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(colorings.size())));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::map<Coloring, typename F::value_type> out;
  for (std::size_t i = 0; i < colorings.size(); ++i) out.emplace(colorings[i], values[i]);
  return out;
}

}  // namespace qtop
