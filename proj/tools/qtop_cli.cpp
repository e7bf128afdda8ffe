#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qtop.hpp"

namespace {

using qtop::Json;

struct RunConfig {
  std::string subcommand;
  int level = 4;
  bool approx = false;
  std::string builtin_name;
  std::string file;
  std::vector<int> colors;
  std::vector<long> framing;
  bool trace = false;
  bool dump_operator = false;
  std::uint64_t seed = qtop::kDefaultSeed;
};

// Parse error carrying the input file name; maps to exit code 2.
struct InputError {
  std::string message;
};

Json value_json(const qtop::CycNum& x) { return qtop::to_json(x); }
Json value_json(const std::complex<double>& z) { return Json{{"approx", qtop::to_json(z)}}; }

template <class F>
Json matrix_json(const qtop::Matrix<typename F::value_type>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(value_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json long_vector(const std::vector<long>& v) { return Json(v); }

// Closed input becomes a framed link; an open tangle is kept as a bare diagram.
struct Input {
  qtop::SliceDiagram diagram;
  std::optional<qtop::FramedLink> link;
};

Input load_input(const RunConfig& cfg) {
  if (cfg.builtin_name.empty() == cfg.file.empty()) throw qtop::DomainError("give exactly one of --builtin and --file");
  Input in;
  if (!cfg.builtin_name.empty()) {
    in.link = qtop::builtin(cfg.builtin_name);
  } else {
    try {
      in.diagram = qtop::read_slice_file(cfg.file);
    } catch (const qtop::ParseError& e) {
      throw InputError{cfg.file + ": " + e.what()};
    }
    if (in.diagram.closed()) in.link = qtop::blackboard(in.diagram);
  }
  if (!cfg.framing.empty()) {
    if (!in.link) throw qtop::DomainError("framing applies to closed links only");
    if (cfg.framing.size() != in.link->component_count())
      throw qtop::DomainError("framing has " + std::to_string(cfg.framing.size()) + " entries, link has " +
                              std::to_string(in.link->component_count()) + " components");
    in.link = qtop::with_framing(*in.link, cfg.framing);
  }
  if (in.link) in.diagram = qtop::materialize(*in.link);
  return in;
}

qtop::FramedLink load_link(const RunConfig& cfg) {
  auto in = load_input(cfg);
  if (!in.link) throw qtop::DomainError(cfg.subcommand + " needs a closed link, the input is a tangle");
  return *in.link;
}

qtop::Coloring coloring_for(const RunConfig& cfg, std::size_t components, int default_color = 2) {
  if (cfg.colors.empty()) return qtop::Coloring(components, default_color);
  if (cfg.colors.size() != components)
    throw qtop::DomainError("coloring has " + std::to_string(cfg.colors.size()) + " entries, link has " +
                            std::to_string(components) + " components");
  for (int k : cfg.colors)
    if (k < 1 || k > cfg.level)
      throw qtop::DomainError("color " + std::to_string(k) + " outside 1.." + std::to_string(cfg.level));
  return cfg.colors;
}

Json header(const RunConfig& cfg, const std::string& engine) {
  Json j;
  j["subcommand"] = cfg.subcommand;
  j["engine"] = engine;
  j["level"] = cfg.level;
  j["mode"] = cfg.approx ? "approx" : "exact";
  j["input"] = cfg.builtin_name.empty() ? Json{{"file", cfg.file}} : Json{{"builtin", cfg.builtin_name}};
  return j;
}

void require_exact_level(const RunConfig& cfg) {
  if (!cfg.approx && cfg.level != 4)
    throw qtop::ApproximateOnly("exact mode is only available at level 4; pass --approx for level " +
                                std::to_string(cfg.level));
}

template <class F>
Json run_eval(const RunConfig& cfg) {
  const qtop::QuantumAlgebra<F> qa(cfg.level);
  const auto in = load_input(cfg);
  const auto& d = in.diagram;
  const auto colors = coloring_for(cfg, d.component_count());
  Json j = header(cfg, "evaluator");
  j["framing"] = in.link ? long_vector(in.link->framing) : Json(nullptr);
  j["coloring"] = colors;
  const auto op = qtop::evaluate(qa, d, colors);
  if (d.closed()) j["value"] = value_json(op.matrix(0, 0));
  if (cfg.dump_operator || !d.closed()) {
    Json o;
    o["domain"] = qtop::to_json(op.domain);
    o["codomain"] = qtop::to_json(op.codomain);
    o["matrix"] = matrix_json<F>(op.matrix);
    j["operator"] = std::move(o);
  }
  return j;
}

const char* status_name(qtop::ArfStatus s) {
  switch (s) {
    case qtop::ArfStatus::Proper: return "proper";
    case qtop::ArfStatus::NonProper: return "non_proper";
    default: return "convention_anomaly";
  }
}

Json run_arf(const RunConfig& cfg) {
  if (cfg.approx || cfg.level != 4) throw qtop::DomainError("the skein invariant is exact and level 4 only");
  const auto l = load_link(cfg);
  const auto d = qtop::materialize(l);
  const auto a = qtop::arf(d);
  Json j = header(cfg, "skein");
  j["framing"] = long_vector(l.framing);
  j["components"] = a.components;
  j["I"] = value_json(a.I);
  j["status"] = status_name(a.status);
  j["proper"] = a.status == qtop::ArfStatus::Proper;
  j["proper_by_linking"] = a.proper_by_linking;
  if (a.status == qtop::ArfStatus::Proper) j["epsilon"] = a.epsilon;
  else j["epsilon"] = nullptr;
  return j;
}

Json run_colored(const RunConfig& cfg) {
  if (cfg.approx || cfg.level != 4) throw qtop::DomainError("cabling through the skein engine is exact and level 4 only");
  const qtop::QuantumAlgebra<qtop::ExactField> qa(4);
  const auto l = load_link(cfg);
  const auto colors = coloring_for(cfg, l.component_count());
  std::vector<qtop::CablingTerm> terms;
  const auto value = qtop::colored_via_cabling(l, colors, &terms);
  Json j = header(cfg, "cabling+skein");
  j["framing"] = long_vector(l.framing);
  j["coloring"] = colors;
  j["value"] = value_json(value);
  j["evaluator_agrees"] = value == qtop::evaluate_link(qa, l, colors);
  if (cfg.trace) {
    Json t = Json::array();
    for (const auto& term : terms) {
      Json e;
      e["multiplicity"] = term.multiplicity;
      e["coefficient"] = term.coefficient;
      e["self_linking"] = term.self_linking;
      e["I"] = value_json(term.I);
      e["J"] = value_json(term.J);
      t.push_back(std::move(e));
    }
    j["trace"] = std::move(t);
  }
  return j;
}

template <class F>
Json run_rt(const RunConfig& cfg) {
  const qtop::QuantumAlgebra<F> qa(cfg.level);
  const auto l = load_link(cfg);
  Json j = header(cfg, "evaluator");
  j["framing"] = long_vector(l.framing);
  const auto lm = qtop::linking_matrix(l);
  j["linking_matrix"] = lm.entries;
  j["signature"] = qtop::signature(lm);
  j["value"] = value_json(qtop::z_invariant(qa, l));
  return j;
}

template <class F>
Json run_transfer(const RunConfig& cfg) {
  const qtop::QuantumAlgebra<F> qa(cfg.level);
  const auto l = load_link(cfg);
  const auto t = qtop::transfer_matrix(qa, l);
  Json j = header(cfg, "evaluator");
  j["framing"] = long_vector(l.framing);
  j["convention"] = "row = outgoing color j, column = incoming color i, entry J_(i,j)";
  j["matrix"] = matrix_json<F>(t.matrix);
  j["anomaly"] = t.anomaly.tag;
  const auto det = qtop::determinant(qa.field(), t.matrix);
  j["determinant"] = value_json(det);
  j["rank"] = qtop::rank(qa.field(), t.matrix);
  j["limit_rank"] = qtop::limit_rank(qa.field(), t.matrix);
  return j;
}

Json comparison_json(const qtop::MatrixComparison& c) {
  Json j;
  j["entries_matching"] = c.entries_matching;
  j["transposed"] = c.transposed;
  j["global_phase"] = c.global_phase ? Json(*c.global_phase) : Json(nullptr);
  return j;
}

Json run_whitehead(const RunConfig& cfg) {
  if (cfg.approx || cfg.level != 4) throw qtop::DomainError("the Whitehead pipeline is exact and level 4 only");
  std::vector<long> framing = cfg.framing.empty() ? qtop::default_whitehead_framing() : cfg.framing;
  if (framing.size() != 2) throw qtop::DomainError("the Whitehead link has 2 components; framing needs 2 entries");
  const auto rep = qtop::whitehead_pipeline(framing, true);
  Json j;
  j["subcommand"] = cfg.subcommand;
  j["engine"] = "evaluator+skein";
  j["level"] = 4;
  j["mode"] = "exact";
  j["framing"] = long_vector(rep.framing);
  j["matrix"] = qtop::matrix_to_json(rep.matrix);
  j["determinant"] = value_json(rep.determinant);
  j["determinant_approx"] = qtop::to_json(rep.determinant.approx());
  j["rank"] = rep.rank;
  j["limit_rank"] = rep.limit_rank;
  j["z_infinity_dim"] = rep.z_infinity_dim;
  j["anomaly"] = rep.anomaly.tag;
  j["anomaly_note"] = rep.anomaly_note;
  j["engines_agree"] = rep.engines_agree;
  j["cabled_skein"] = Json{{"I_K2H", value_json(rep.cabled.I_K2H)},
                           {"I_KH2", value_json(rep.cabled.I_KH2)},
                           {"I_K2H2", value_json(rep.cabled.I_K2H2)}};
  j["framing_0_0"] = Json{{"matrix", qtop::matrix_to_json(rep.zero_framing_matrix)}, {"limit_rank", rep.zero_framing_limit_rank}};
  Json ref;
  ref["comparison"] = comparison_json(rep.against_reference);
  ref["reference_matrix_determinant"] = value_json(rep.reference_determinant_of_matrix);
  ref["quoted_determinant_consistent"] = rep.reference_determinant_consistent;
  ref["determinant_phase"] = rep.determinant_phase ? Json(*rep.determinant_phase) : Json(nullptr);
  j["reference"] = std::move(ref);
  if (cfg.trace) {
    Json t = Json::array();
    const auto w = qtop::with_framing(qtop::builtin("whitehead"), framing);
    qtop::SkeinEngine engine;
    for (int i = 1; i <= 3; ++i)
      for (int k = 1; k <= 3; ++k) {
        std::vector<qtop::CablingTerm> terms;
        qtop::colored_via_cabling(w, {i, k}, &terms, &engine);
        for (const auto& term : terms)
          t.push_back(Json{{"coloring", {i, k}},
                           {"multiplicity", term.multiplicity},
                           {"coefficient", term.coefficient},
                           {"I", value_json(term.I)},
                           {"J", value_json(term.J)}});
      }
    j["trace"] = std::move(t);
  }
  return j;
}

Json run_selftest(const RunConfig& cfg, bool& all_passed) {
  const auto results = qtop::run_all_properties(cfg.seed);
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    list.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  all_passed = passed == results.size();
  Json j;
  j["subcommand"] = cfg.subcommand;
  j["engine"] = "property-suite";
  j["level"] = 4;
  j["seed"] = cfg.seed;
  j["passed"] = passed;
  j["failed"] = results.size() - passed;
  j["results"] = std::move(list);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Exact quantum sl2 invariants of framed links at level r"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--builtin", cfg.builtin_name, "builtin link name")->check(CLI::IsMember(qtop::builtin_names()));
    sub->add_option("--file", cfg.file, "slice-notation file");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--level", cfg.level, "level r")->check(CLI::Range(2, 64));
    sub->add_flag("--approx", cfg.approx, "floating-point arithmetic");
    sub->add_flag("--exact{false}", cfg.approx, "exact arithmetic in Q(zeta_16) (default)");
    sub->add_option("--framing", cfg.framing, "framing per component")->delimiter(',')->allow_extra_args(false);
    sub->add_flag("--trace", cfg.trace, "emit intermediate values");
    sub->add_flag("--dump-operator", cfg.dump_operator, "emit the full operator");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
  };

  std::vector<CLI::App*> subs;
  for (const char* name : {"eval", "arf", "colored", "rt", "transfer"}) {
    auto* sub = app.add_subcommand(name);
    add_input(sub);
    add_common(sub);
    sub->add_option("--colors", cfg.colors, "color per component")->delimiter(',')->allow_extra_args(false);
    subs.push_back(sub);
  }
  auto* wh = app.add_subcommand("whitehead", "transfer matrix, limit rank and Z_infinity of the Whitehead cobordism");
  add_common(wh);
  auto* self = app.add_subcommand("selftest", "run the property suite");
  add_common(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    Json out;
    bool ok = true;
    const auto& s = cfg.subcommand;
    if (s != "whitehead" && s != "selftest") require_exact_level(cfg);
    if (s == "eval") out = cfg.approx ? run_eval<qtop::ApproxField>(cfg) : run_eval<qtop::ExactField>(cfg);
    else if (s == "arf") out = run_arf(cfg);
    else if (s == "colored") out = run_colored(cfg);
    else if (s == "rt") out = cfg.approx ? run_rt<qtop::ApproxField>(cfg) : run_rt<qtop::ExactField>(cfg);
    else if (s == "transfer") out = cfg.approx ? run_transfer<qtop::ApproxField>(cfg) : run_transfer<qtop::ExactField>(cfg);
    else if (s == "whitehead") out = run_whitehead(cfg);
    else out = run_selftest(cfg, ok);
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "parse error: " << e.message << "\n";
    return 2;
  } catch (const qtop::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const qtop::ValidationError& e) {
    std::cerr << "invalid diagram: " << e.what() << "\n";
    return 2;
  } catch (const qtop::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
