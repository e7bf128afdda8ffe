#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qtop/constants.hpp"
#include "qtop/cyclotomic.hpp"
#include "qtop/diagram.hpp"
#include "qtop/evaluator.hpp"
#include "qtop/framed_link.hpp"
#include "qtop/matrix.hpp"
#include "qtop/quantum_algebra.hpp"
#include "qtop/skein.hpp"
#include "qtop/tqft.hpp"

namespace qtop {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 20260418;

namespace detail {

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline PropertyResult run_property(const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    return {name, failure.empty(), failure.empty() ? "ok" : failure};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace detail

// ---------------------------------------------------------------- generators

inline CycNum random_cycnum(Rng& rng, long bound, int order = 16) {
  const int d = CycNum::zero(order).degree();
  std::vector<Rational> c(d);
  for (auto& x : c) x = detail::uniform(rng, -bound, bound);
  return CycNum::from_coeffs(order, c);
}

/// Random braid word on n strands; when with_r3 is set it starts with a
/// sigma_1^a sigma_2^b sigma_1^c pattern admitting a third Reidemeister move.
inline std::vector<int> random_braid_word(Rng& rng, std::size_t n, std::size_t length, bool with_r3 = false) {
  std::vector<int> w;
  if (with_r3 && n >= 3) {
    const int a = detail::uniform(rng, 0, 1) ? 1 : -1, b = detail::uniform(rng, 0, 1) ? 1 : -1;
    const int c = detail::uniform(rng, 0, 1) ? a : -a;
    w = {a * 1, b * 2, c * 1};
  }
  while (w.size() < length) {
    const int letter = static_cast<int>(detail::uniform(rng, 1, static_cast<long>(n) - 1));
    w.push_back(detail::uniform(rng, 0, 1) ? letter : -letter);
  }
  return w;
}

inline SliceDiagram random_braid_closure(Rng& rng, std::size_t n, std::size_t length, bool with_r3 = false) {
  return braid_closure(n, random_braid_word(rng, n, length, with_r3));
}

/// Braid-like tangle with random boundary orientations.
inline SliceDiagram random_tangle(Rng& rng, std::size_t width, std::size_t crossings) {
  std::vector<int> bottom(width);
  for (auto& o : bottom) o = detail::uniform(rng, 0, 1) ? kUp : kDown;
  std::vector<Generator> w;
  for (std::size_t i = 0; i < crossings; ++i)
    w.push_back(Generator::crossing(static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<long>(width) - 2)),
                                    detail::uniform(rng, 0, 1) ? 1 : -1));
  return SliceDiagram(std::move(bottom), std::move(w));
}

inline Coloring random_coloring(Rng& rng, std::size_t n, int max_color = 3) {
  Coloring c(n);
  for (auto& k : c) k = static_cast<int>(detail::uniform(rng, 1, max_color));
  return c;
}

// Random move that the diagram admits; returns false when none applies.
inline bool random_move(Rng& rng, const SliceDiagram& d, MoveKind& kind, MoveSite& site) {
  std::vector<std::size_t> r3_sites;
  for (std::size_t i = 0; i + 2 < d.slices().size(); ++i)
    if (r3_applicable(d, i)) r3_sites.push_back(i);
  for (int attempt = 0; attempt < 20; ++attempt) {
    const long pick = detail::uniform(rng, 0, 2);
    if (pick == 2 && !r3_sites.empty()) {
      kind = MoveKind::R3;
      site.level = r3_sites[static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<long>(r3_sites.size()) - 1))];
      return true;
    }
    const std::size_t level = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<long>(d.level_count()) - 1));
    const std::size_t width = d.orientations(level).size();
    if (pick == 0 && width >= 1) {
      kind = MoveKind::R0KinkPair;
      site = {level, static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<long>(width) - 1)), detail::uniform(rng, 0, 1) == 1};
      return true;
    }
    if (pick == 1 && width >= 2) {
      kind = MoveKind::R2;
      site = {level, static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<long>(width) - 2)), detail::uniform(rng, 0, 1) == 1};
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------- numerics

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev;
  for (std::size_t i = 0; i < n; ++i) ev.push_back(a[i][i]);
  return ev;
}

/// Nonzero eigenvalues with algebraic multiplicity, in floating point: the
/// characteristic polynomial (Faddeev-LeVerrier) has a zero root of
/// multiplicity equal to its number of vanishing low-order coefficients.
inline std::size_t float_nonzero_eigenvalue_count(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<double>> mk(n, std::vector<double>(n, 0.0)), prod(n, std::vector<double>(n));
  std::vector<double> coeff(n + 1, 0.0);  // x^n + c[n-1] x^{n-1} + ... + c[0]
  coeff[n] = 1;
  double scale = 1;
  for (const auto& row : m)
    for (double v : row) scale = std::max(scale, std::abs(v));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m[i][l] * mk[l][j];
        prod[i][j] = s + (i == j ? coeff[n - k + 1] : 0.0);
      }
    mk = prod;
    double tr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0;
      for (std::size_t l = 0; l < n; ++l) s += m[i][l] * mk[l][i];
      tr += s;
    }
    coeff[n - k] = -tr / static_cast<double>(k);
  }
  std::size_t zero_roots = 0;
  while (zero_roots < n && std::abs(coeff[zero_roots]) < 1e-9 * std::pow(scale, static_cast<double>(n - zero_roots)))
    ++zero_roots;
  return n - zero_roots;
}

// ---------------------------------------------------------------- suites

inline std::vector<PropertyResult> field_properties(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  Rng rng(seed);
  out.push_back(detail::run_property("field: sqrt2 squares to 2", [] {
    return sqrt2_16() * sqrt2_16() == CycNum::from_integer(16, 2) ? "" : "s*s != 2";
  }));
  out.push_back(detail::run_property("field: axioms on random elements", [&] {
    for (int t = 0; t < 200; ++t) {
      const auto a = random_cycnum(rng, 20), b = random_cycnum(rng, 20), c = random_cycnum(rng, 20);
      if (!((a * b) * c == a * (b * c))) return std::string("associativity");
      if (!((a * (b + c)) == a * b + a * c)) return std::string("distributivity");
      if (!a.is_zero() && !(a * a.inv() == CycNum::one(16))) return std::string("inverse");
      if (!((a * b).conj() == a.conj() * b.conj())) return std::string("conjugation");
    }
    return std::string();
  }));
  out.push_back(detail::run_property("field: approx is a homomorphism on 100-factor products", [&] {
    for (int t = 0; t < 20; ++t) {
      CycNum prod = CycNum::one(16);
      std::complex<double> fprod = 1.0;
      double norm = 1.0;
      for (int i = 0; i < 100; ++i) {
        CycNum a = random_cycnum(rng, 1000);
        if (a.is_zero()) a = CycNum::one(16);
        prod = prod * a;
        fprod *= a.approx();
        norm *= std::abs(a.approx());
      }
      if (std::abs(prod.approx() - fprod) > 1e-10 * norm) return "relative error too large at trial " + std::to_string(t);
    }
    return std::string();
  }));
  return out;
}

inline std::vector<PropertyResult> algebra_properties() {
  std::vector<PropertyResult> out;
  const QuantumAlgebra<ExactField> qa(4);
  const auto& f = qa.field();

  out.push_back(detail::run_property("algebra: module relations", [&] {
    for (int k = 1; k <= 4; ++k)
      for (bool dual : {false, true}) {
        const auto m = qa.module(k, dual);
        const auto q = qa.q();
        if (!equal(f, multiply(f, m.K, m.X), scale(f, multiply(f, m.X, m.K), q))) return "KX != qXK on color " + std::to_string(k);
        if (!equal(f, multiply(f, m.K, m.Y), scale(f, multiply(f, m.Y, m.K), q.inv())))
          return "KY != q^-1 YK on color " + std::to_string(k);
        const auto comm = add(f, multiply(f, m.X, m.Y), scale(f, multiply(f, m.Y, m.X), f.from_integer(-1)));
        const auto rhs = scale(f, add(f, multiply(f, m.K, m.K), scale(f, multiply(f, m.Kinv, m.Kinv), f.from_integer(-1))),
                               (q - q.inv()).inv());
        if (!equal(f, comm, rhs)) return "[X,Y] relation fails on color " + std::to_string(k);
      }
    return std::string();
  }));

  out.push_back(detail::run_property("algebra: Yang-Baxter on V^a V^b V^c, a,b,c <= 3", [&] {
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (int c = 1; c <= 3; ++c)
          for (int duals = 0; duals < 8; ++duals) {
            const BoundaryPoint A{a, (duals & 1) != 0}, B{b, (duals & 2) != 0}, C{c, (duals & 4) != 0};
            auto id = [&](BoundaryPoint p) { return identity(f, static_cast<std::size_t>(p.color)); };
            auto R = [&](BoundaryPoint x, BoundaryPoint y) { return qa.braiding(x, y); };
            const auto lhs = multiply(f, kron(f, R(B, C), id(A)),
                                      multiply(f, kron(f, id(B), R(A, C)), kron(f, R(A, B), id(C))));
            const auto rhs = multiply(f, kron(f, id(C), R(A, B)),
                                      multiply(f, kron(f, R(A, C), id(B)), kron(f, id(A), R(B, C))));
            if (!equal(f, lhs, rhs)) return "fails for colors " + std::to_string(a) + std::to_string(b) + std::to_string(c);
          }
    return std::string();
  }));

  out.push_back(detail::run_property("algebra: quasi-triangularity R D(u) = D^op(u) R", [&] {
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l)
        for (int duals = 0; duals < 4; ++duals) {
          const auto v = qa.module(k, duals & 1), w = qa.module(l, (duals & 2) != 0);
          const auto R = qa.universal_R(v, w);
          for (auto u : {AlgebraGenerator::X, AlgebraGenerator::Y, AlgebraGenerator::K})
            if (!equal(f, multiply(f, R, qa.coproduct(u, v, w)), multiply(f, qa.coproduct_op(u, v, w), R)))
              return "fails on colors " + std::to_string(k) + "," + std::to_string(l);
        }
    return std::string();
  }));

  out.push_back(detail::run_property("algebra: braiding inverse pairs", [&] {
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l) {
        const BoundaryPoint v{k, false}, w{l, false};
        if (!equal(f, multiply(f, qa.braiding_inv(w, v), qa.braiding(v, w)), identity(f, static_cast<std::size_t>(k * l))))
          return "inverse fails on " + std::to_string(k) + "," + std::to_string(l);
      }
    return std::string();
  }));

  out.push_back(detail::run_property("algebra: zig-zag identities and quantum dimension", [&] {
    for (int k = 1; k <= 3; ++k) {
      const auto idv = identity(f, static_cast<std::size_t>(k));
      const auto E = qa.cupcap(CupCapKind::E, k).matrix, N = qa.cupcap(CupCapKind::N, k).matrix;
      const auto Ec = qa.cupcap(CupCapKind::E_check, k).matrix, Nc = qa.cupcap(CupCapKind::N_check, k).matrix;
      // V -> V (x) V* (x) V -> V
      if (!equal(f, multiply(f, kron(f, idv, E), kron(f, N, idv)), idv)) return "(id E)(N id) != id, color " + std::to_string(k);
      // V -> V (x) V* (x) V with the checked pair, V = (V (x) V*) (x) V
      if (!equal(f, multiply(f, kron(f, Ec, idv), kron(f, idv, Nc)), idv)) return "(Ec id)(id Nc) != id, color " + std::to_string(k);
      if (!(multiply(f, Ec, N)(0, 0) == qa.quantum_integer(k))) return "Ec N != [k], color " + std::to_string(k);
    }
    return std::string();
  }));

  out.push_back(detail::run_property("algebra: Clebsch-Gordan weights at r = 4 and 5", [&] {
    for (int r : {4, 5})
      for (int k = 1; k <= r; ++k)
        for (int l = 1; k + l <= r + 1; ++l) {
          std::vector<long> lhs, rhs;
          for (int a = 0; a < k; ++a)
            for (int b = 0; b < l; ++b) lhs.push_back((k - 1 - 2 * a) + (l - 1 - 2 * b));
          std::size_t dim = 0;
          for (int p : clebsch_gordan(k, l, r)) {
            dim += static_cast<std::size_t>(p);
            for (int c = 0; c < p; ++c) rhs.push_back(p - 1 - 2 * c);
          }
          std::sort(lhs.begin(), lhs.end());
          std::sort(rhs.begin(), rhs.end());
          if (dim != static_cast<std::size_t>(k * l) || lhs != rhs)
            return "mismatch at r=" + std::to_string(r) + " (" + std::to_string(k) + "," + std::to_string(l) + ")";
        }
    return std::string();
  }));

  out.push_back(detail::run_property("algebra: color-4 loops vanish at r = 4", [&] {
    if (!evaluate_link(qa, builtin("unknot"), {4}).is_zero()) return std::string("unknot");
    if (!evaluate_link(qa, builtin("unknot_kink_pos"), {4}).is_zero()) return std::string("kinked unknot");
    for (int k = 1; k <= 4; ++k) {
      if (!evaluate_link(qa, builtin("hopf"), {4, k}).is_zero()) return "hopf (4," + std::to_string(k) + ")";
      if (!evaluate_link(qa, builtin("whitehead"), {k, 4}).is_zero()) return "whitehead (" + std::to_string(k) + ",4)";
    }
    return std::string();
  }));
  return out;
}

inline std::vector<PropertyResult> diagram_properties(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);

  out.push_back(detail::run_property("diagrams: linking matrix invariant under R2, R3, double switch", [&] {
    for (int t = 0; t < 40; ++t) {
      const auto d = random_braid_closure(rng, 3, 6, true);
      const std::vector<long> zero(d.component_count(), 0);
      const auto base = linking_matrix(d, zero);
      MoveKind kind;
      MoveSite site;
      if (!random_move(rng, d, kind, site)) continue;
      if (!(linking_matrix(apply_move(d, kind, site), zero) == base)) return std::string("move changed linking matrix");
      if (d.crossing_count() > 0) {
        const auto twice = resolve(resolve(d, 0, ResolveMode::Switch), 0, ResolveMode::Switch);
        if (!(twice == d)) return std::string("double switch is not the identity");
      }
    }
    return std::string();
  }));

  out.push_back(detail::run_property("diagrams: signature matches float eigenvalue signs", [&] {
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = static_cast<std::size_t>(detail::uniform(rng, 1, 6));
      std::vector<std::vector<long>> m(n, std::vector<long>(n));
      std::vector<std::vector<double>> fm(n, std::vector<double>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          // sparse-ish entries so singular cases occur
          const long v = detail::uniform(rng, 0, 2) == 0 ? 0 : detail::uniform(rng, -4, 4);
          m[i][j] = m[j][i] = v;
          fm[i][j] = fm[j][i] = static_cast<double>(v);
        }
      long fsig = 0;
      for (double ev : symmetric_eigenvalues(fm)) fsig += ev > 1e-9 ? 1 : (ev < -1e-9 ? -1 : 0);
      if (signature(m) != fsig) return "trial " + std::to_string(t);
    }
    return std::string();
  }));

  out.push_back(detail::run_property("diagrams: cable of cable multiplies multiplicities", [&] {
    for (const char* name : {"unknot", "hopf"}) {
      const auto l = builtin(name);
      for (std::size_t a = 0; a <= 2; ++a)
        for (std::size_t b = 0; b <= 2; ++b) {
          std::vector<std::size_t> first(l.component_count(), a);
          if (first.size() > 1) first[1] = b;
          const auto c1 = cable(l, first);
          const auto c2 = cable(c1, std::vector<std::size_t>(c1.component_count(), 2));
          std::size_t expect = 0;
          for (auto m : first) expect += 2 * m;
          if (c2.component_count() != expect) return std::string("count mismatch on ") + name;
        }
    }
    return std::string();
  }));

  out.push_back(detail::run_property("diagrams: smoothing changes component count by one", [&] {
    for (int t = 0; t < 40; ++t) {
      const auto d = random_braid_closure(rng, 3, 5);
      const std::size_t k = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<long>(d.crossing_count()) - 1));
      const std::size_t s = d.crossing_slice(k);
      const auto& g = d.slices()[s];
      const bool same = d.labels(s)[g.position] == d.labels(s)[g.position + 1];
      const auto sm = resolve(d, k, ResolveMode::Smooth);
      const long diff = static_cast<long>(sm.component_count()) - static_cast<long>(d.component_count());
      if (same && diff != 1 && diff != -1) return std::string("self crossing smoothing");
      if (!same && diff != -1) return std::string("mixed crossing smoothing must merge");
    }
    return std::string();
  }));
  return out;
}

inline std::vector<PropertyResult> evaluator_properties(std::uint64_t seed, int reidemeister_trials = 100) {
  std::vector<PropertyResult> out;
  Rng rng(seed ^ 0x51ed270b27f1a3c5ULL);
  const QuantumAlgebra<ExactField> qa(4);
  const auto& f = qa.field();

  out.push_back(detail::run_property("evaluator: unknot gives [k], empty diagram gives 1", [&] {
    if (!(evaluate_closed(qa, SliceDiagram(), {}) == CycNum::one(16))) return std::string("empty");
    for (int k = 1; k <= 4; ++k)
      if (!(evaluate_link(qa, builtin("unknot"), {k}) == qa.quantum_integer(k))) return "unknot color " + std::to_string(k);
    return std::string();
  }));

  out.push_back(detail::run_property("evaluator: Reidemeister R0/R2/R3 invariance (" + std::to_string(reidemeister_trials) + " trials)", [&] {
    int done = 0;
    for (int t = 0; done < reidemeister_trials && t < 10 * reidemeister_trials; ++t) {
      const std::size_t strands = static_cast<std::size_t>(detail::uniform(rng, 2, 3));
      const auto d = random_braid_closure(rng, strands, static_cast<std::size_t>(detail::uniform(rng, 2, 5)), strands == 3);
      MoveKind kind;
      MoveSite site;
      if (!random_move(rng, d, kind, site)) continue;
      const auto moved = apply_move(d, kind, site);
      const auto colors = random_coloring(rng, d.component_count());
      if (!(evaluate_closed(qa, d, colors) == evaluate_closed(qa, moved, colors)))
        return "trial " + std::to_string(t) + " move " + std::to_string(static_cast<int>(kind));
      ++done;
    }
    return done == reidemeister_trials ? std::string() : std::string("could not generate enough moves");
  }));

  out.push_back(detail::run_property("evaluator: functoriality of compose and tensor", [&] {
    for (int t = 0; t < 20; ++t) {
      const auto lower = random_tangle(rng, 3, 3);
      const SliceDiagram upper(lower.top(), random_tangle(rng, 3, 3).slices());
      const auto whole = compose(upper, lower);
      // a tangle's components: per-strand colors through the label maps
      const auto colors = random_coloring(rng, whole.component_count());
      auto colors_of = [&](const SliceDiagram& part, std::size_t level_in_whole) {
        Coloring c(part.component_count());
        for (std::size_t i = 0; i < part.labels(0).size(); ++i) c[part.labels(0)[i]] = colors[whole.labels(level_in_whole)[i]];
        return c;
      };
      const auto a = evaluate(qa, lower, colors_of(lower, 0));
      const auto b = evaluate(qa, upper, colors_of(upper, lower.slices().size()));
      const auto ab = evaluate(qa, whole, colors);
      if (!equal(f, compose(f, b, a).matrix, ab.matrix)) return "compose trial " + std::to_string(t);

      const auto s = random_tangle(rng, 2, 2), u = random_tangle(rng, 2, 2);
      const auto st = tensor(s, u);
      const auto cst = random_coloring(rng, st.component_count());
      Coloring cs(s.component_count()), cu(u.component_count());
      for (std::size_t i = 0; i < 2; ++i) cs[s.labels(0)[i]] = cst[st.labels(0)[i]];
      for (std::size_t i = 0; i < 2; ++i) cu[u.labels(0)[i]] = cst[st.labels(0)[i + 2]];
      if (!equal(f, tensor(f, evaluate(qa, s, cs), evaluate(qa, u, cu)).matrix, evaluate(qa, st, cst).matrix))
        return "tensor trial " + std::to_string(t);
    }
    return std::string();
  }));

  out.push_back(detail::run_property("evaluator: closed-component orientation independence", [&] {
    for (int t = 0; t < 15; ++t) {
      const auto d = random_braid_closure(rng, 3, 4);
      const auto colors = random_coloring(rng, d.component_count());
      const std::size_t c = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<long>(d.component_count()) - 1));
      const auto rev = reverse_component(d, c);
      // component numbering is unchanged by reversal (same strands, same order)
      if (!(evaluate_closed(qa, d, colors) == evaluate_closed(qa, rev, colors))) return "trial " + std::to_string(t);
    }
    return std::string();
  }));

  out.push_back(detail::run_property("evaluator: removing a color-1 component", [&] {
    for (const char* name : {"hopf", "whitehead", "unlink2"}) {
      const auto l = builtin(name);
      for (int k = 1; k <= 3; ++k) {
        const auto rest = cable(l, {0, 1});
        if (!(evaluate_link(qa, l, {1, k}) == evaluate_link(qa, rest, {k}))) return std::string(name);
      }
    }
    return std::string();
  }));

  out.push_back(detail::run_property("evaluator: threaded family equals sequential", [&] {
    const auto l = builtin("whitehead");
    const auto cs = all_colorings(2, 4);
    return evaluate_colored_link_family(qa, l, cs, 1) == evaluate_colored_link_family(qa, l, cs, 3) ? "" : "differs";
  }));
  return out;
}

/// Blow-up invariance of Z: Z(L u U(+-1)) = zeta16^k Z(L); reports k.
inline PropertyResult blowup_property() {
  return detail::run_property("rt: blow-up invariance of Z on 5 base links", [] {
    const QuantumAlgebra<ExactField> qa(4);
    for (const char* name : {"unknot", "unlink2", "hopf", "trefoil", "whitehead"}) {
      const auto l = builtin(name);
      const auto z = z_invariant(qa, l);
      for (auto kind : {MoveKind::BlowUpPositive, MoveKind::BlowUpNegative}) {
        const auto blown = apply_move(l, kind, {});
        const auto phase = phase_between(z_invariant(qa, blown), z);
        if (!phase) return std::string("not a root-of-unity multiple on ") + name;
        if (*phase != 0) return std::string("anomaly phase zeta16^") + std::to_string(*phase) + " on " + name;
      }
    }
    return std::string();
  });
}

inline std::vector<PropertyResult> skein_properties(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  Rng rng(seed ^ 0x2545f4914f6cdd1dULL);
  const QuantumAlgebra<ExactField> qa(4);

  out.push_back(detail::run_property("skein: two heuristics agree on 30 diagrams", [&] {
    for (int t = 0; t < 30; ++t) {
      const std::size_t strands = static_cast<std::size_t>(detail::uniform(rng, 2, 4));
      const auto d = random_braid_closure(rng, strands, static_cast<std::size_t>(detail::uniform(rng, 1, 10)));
      if (!(skein_I(d, SkeinHeuristic::FixedBase) == skein_I(d, SkeinHeuristic::MinimizeBad)))
        return "trial " + std::to_string(t);
    }
    return std::string();
  }));

  out.push_back(detail::run_property("skein: I is unchanged by kink pairs", [&] {
    for (int t = 0; t < 15; ++t) {
      const auto d = random_braid_closure(rng, 3, 5);
      MoveSite site{static_cast<std::size_t>(detail::uniform(rng, 1, static_cast<long>(d.level_count()) - 2)), 0,
                    detail::uniform(rng, 0, 1) == 1};
      if (!(skein_I(d) == skein_I(apply_move(d, MoveKind::R0KinkPair, site)))) return "trial " + std::to_string(t);
    }
    return std::string();
  }));

  out.push_back(detail::run_property("skein: evaluator color 2 = t^{3 L.L} sqrt2 I over corpus x framings", [&] {
    for (const char* name : {"unknot", "unlink2", "hopf", "trefoil", "whitehead"}) {
      const auto base = builtin(name);
      const std::size_t n = base.component_count();
      std::vector<long> fr(n, -1);
      while (true) {
        const auto l = with_framing(base, fr);
        if (!(evaluate_link(qa, l, Coloring(n, 2)) == jones_from_skein(l))) return std::string("mismatch on ") + name;
        std::size_t i = 0;
        while (i < n && fr[i] == 1) fr[i++] = -1;
        if (i == n) break;
        ++fr[i];
      }
    }
    return std::string();
  }));

  out.push_back(detail::run_property("skein: cabling formula equals evaluator on hopf, whitehead", [&] {
    for (const char* name : {"hopf", "whitehead"}) {
      const auto l = builtin(name);
      SkeinEngine engine;
      for (const auto& k : all_colorings(2, 4))
        if (!(colored_via_cabling(l, k, nullptr, &engine) == evaluate_link(qa, l, k)))
          return std::string(name) + " (" + std::to_string(k[0]) + "," + std::to_string(k[1]) + ")";
    }
    return std::string();
  }));
  return out;
}

inline std::vector<PropertyResult> limit_rank_properties(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  Rng rng(seed ^ 0x853c49e6748fea9bULL);
  const ExactField f;
  auto random_matrix = [&](std::size_t n, long bound) {
    auto m = zeros(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_cycnum(rng, bound);
    return m;
  };
  auto random_invertible = [&](std::size_t n) {
    while (true) {
      auto m = random_matrix(n, 3);
      if (!determinant(f, m).is_zero()) return m;
    }
  };
  // random matrix of prescribed rank: product of n x r and r x n factors
  auto random_of_rank = [&](std::size_t n, std::size_t r) {
    auto a = zeros(f, n, r), b = zeros(f, r, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < r; ++j) a(i, j) = random_cycnum(rng, 3), b(j, i) = random_cycnum(rng, 3);
    return multiply(f, a, b);
  };

  out.push_back(detail::run_property("limit rank: invariant under invertible pre/post-composition", [&] {
    for (int t = 0; t < 20; ++t) {
      const auto m = random_invertible(3);
      const auto a = random_invertible(3), b = random_invertible(3);
      if (limit_rank(f, multiply(f, a, multiply(f, m, b))) != limit_rank(f, m)) return "A M B trial " + std::to_string(t);
      // singular systems: a change of parametrization acts by conjugation
      const auto s = random_of_rank(3, static_cast<std::size_t>(detail::uniform(rng, 0, 2)));
      if (limit_rank(f, multiply(f, a, multiply(f, s, inverse(f, a)))) != limit_rank(f, s))
        return "A S A^-1 trial " + std::to_string(t);
    }
    return std::string();
  }));

  out.push_back(detail::run_property("limit rank: nilpotent gives 0, identity gives full", [&] {
    auto nil = zeros(f, 2, 2);
    nil(0, 1) = f.one();
    if (limit_rank(f, nil) != 0) return std::string("[[0,1],[0,0]]");
    if (limit_rank(f, identity(f, 3)) != 3) return std::string("identity");
    for (int t = 0; t < 10; ++t) {
      auto u = zeros(f, 4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) u(i, j) = random_cycnum(rng, 5);
      const auto a = random_invertible(4);
      if (limit_rank(f, multiply(f, a, multiply(f, u, inverse(f, a)))) != 0) return "conjugated nilpotent " + std::to_string(t);
    }
    return std::string();
  }));

  out.push_back(detail::run_property("limit rank: factoring through a line gives <= 1", [&] {
    for (int t = 0; t < 20; ++t)
      if (limit_rank(f, random_of_rank(3, 1)) > 1) return "trial " + std::to_string(t);
    return std::string();
  }));

  out.push_back(detail::run_property("limit rank: equals float count of nonzero eigenvalues", [&] {
    for (int t = 0; t < 50; ++t) {
      auto m = zeros(f, 3, 3);
      std::vector<std::vector<double>> fm(3, std::vector<double>(3));
      // low-rank and nilpotent-heavy integer samples
      const int kind = static_cast<int>(detail::uniform(rng, 0, 2));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          long v = detail::uniform(rng, -3, 3);
          if (kind == 1 && j <= i) v = 0;               // nilpotent
          if (kind == 2 && i == 2) v = 0;               // rank <= 2
          m(i, j) = f.from_integer(v);
          fm[i][j] = static_cast<double>(v);
        }
      if (kind == 2)
        for (std::size_t j = 0; j < 3; ++j) m(2, j) = m(0, j) + m(1, j), fm[2][j] = fm[0][j] + fm[1][j];
      if (limit_rank(f, m) != float_nonzero_eigenvalue_count(fm)) return "trial " + std::to_string(t);
    }
    return std::string();
  }));
  return out;
}

inline std::vector<PropertyResult> run_all_properties(std::uint64_t seed = kDefaultSeed) {
  std::vector<PropertyResult> all;
  for (auto part : {field_properties(seed), algebra_properties(), diagram_properties(seed), evaluator_properties(seed),
                    std::vector<PropertyResult>{blowup_property()}, skein_properties(seed), limit_rank_properties(seed)})
    all.insert(all.end(), part.begin(), part.end());
  return all;
}

}  // namespace qtop
