#include "cli.hpp"

#include "trideform/errors.hpp"
#include "trideform/sampling.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>

namespace trideform::cli {

std::string to_string(Status s) {
  switch (s) {
  case Status::pass:
    return "pass";
  case Status::fail:
    return "fail";
  case Status::inconclusive:
    return "inconclusive";
  }
  return "fail";
}

int exit_code(Status s) {
  switch (s) {
  case Status::pass:
    return 0;
  case Status::fail:
    return 1;
  case Status::inconclusive:
    return 2;
  }
  return 1;
}

json report_to_json(const Report& r) {
  return {{"command", r.command}, {"verdict", to_string(r.verdict)}, {"details", r.details}};
}

namespace {

Status from_bool(bool ok) { return ok ? Status::pass : Status::fail; }

Status from_verdict(Verdict v) {
  switch (v) {
  case Verdict::equivalent:
    return Status::pass;
  case Verdict::inequivalent:
    return Status::fail;
  case Verdict::inconclusive:
    return Status::inconclusive;
  }
  return Status::inconclusive;
}

const std::string& require(const std::string& path, const char* flag) {
  if (path.empty())
    throw InputError(std::string("missing required flag ") + flag);
  return path;
}

/// Loaded inputs; each accessor parses on first use and validates.
class Inputs {
public:
  explicit Inputs(const Options& o) : o_(o) {}

  const FiniteAlgebra& algebra() {
    if (!alg_) {
      alg_ = algebra_from_json(load_json_file(require(o_.algebra, "--algebra")));
      alg_->require_associative();
    }
    return *alg_;
  }

  const ArtinLocalAlgebra& base() {
    if (!base_) {
      base_ = base_from_json(load_json_file(require(o_.base, "--base")));
      base_->require_valid();
    }
    return *base_;
  }

  std::size_t cochain_count() const { return o_.cochains.size(); }

  Cochain cochain(std::size_t i, std::size_t arity) {
    if (i >= o_.cochains.size())
      throw InputError("expected at least " + std::to_string(i + 1) + " --cochain file(s)");
    return parse_cochain(o_.cochains[i], arity);
  }

  Cochain generator() {
    if (!o_.generator.empty())
      return parse_cochain(o_.generator, 1);
    return cochain(1, 1);
  }

  Derivation derivation(std::size_t min_bound) {
    return derivation_from_json(load_json_file(require(o_.derivation, "--derivation")), algebra().dim(),
                                base().dim(), min_bound);
  }

  FlatDeformation flat(std::size_t i) {
    if (i >= o_.flats.size())
      throw InputError("expected at least " + std::to_string(i + 1) + " --flat file(s)");
    return flat_from_json(load_json_file(o_.flats[i]), algebra().dim(), base().dim());
  }

  std::size_t word_bound(std::size_t fallback) const {
    const std::size_t w = o_.word_bound.value_or(fallback);
    if (w == 0)
      throw InputError("--word-bound must be positive");
    return w;
  }

  std::size_t degree() const {
    if (!o_.degree)
      throw InputError("missing required flag --degree");
    return *o_.degree;
  }

  const Options& options() const { return o_; }

private:
  Cochain parse_cochain(const std::string& path, std::size_t arity) {
    Cochain c = cochain_from_json(load_json_file(path), algebra().dim(), base().dim());
    if (c.arity() != arity)
      throw InputError(path + ": expected a cochain of arity " + std::to_string(arity) + ", got " +
                       std::to_string(c.arity()));
    return c;
  }

  const Options& o_;
  std::optional<FiniteAlgebra> alg_;
  std::optional<ArtinLocalAlgebra> base_;
};

json residual_summary(const std::map<int, SparseMatrix>& residual) {
  json out = json::object();
  for (const auto& [deg, m] : residual)
    out[std::to_string(deg)] = m.nonzeros();
  return out;
}

json words_to_json(const std::vector<CobarWord>& words) {
  json out = json::array();
  for (const auto& w : words)
    out.push_back(word_to_json(w));
  return out;
}

// ---------------------------------------------------------------------------

Report cmd_check_assoc(Inputs& in) {
  const FiniteAlgebra alg = algebra_from_json(load_json_file(require(in.options().algebra, "--algebra")));
  const AssociativityReport r = check_associative(alg);
  Report rep{"check-assoc", from_bool(r.associative), {{"dim", alg.dim()}}};
  if (!r.associative) {
    rep.details["witness"] = *r.witness;
    rep.details["associator"] = vector_to_json(r.associator);
  }
  return rep;
}

Report cmd_validate_base(Inputs& in) {
  const ArtinLocalAlgebra base = base_from_json(load_json_file(require(in.options().base, "--base")));
  const ArtinDiagnosis& d = base.diagnosis();
  Report rep{"validate-base", from_bool(d.valid), {{"dim", base.dim()}, {"nilpotency", base.nilpotency()}}};
  if (!d.valid)
    rep.details["failure"] = d.failure;
  if (d.computed_nilpotency)
    rep.details["computed_nilpotency"] = *d.computed_nilpotency;
  return rep;
}

Report cmd_mc_check(Inputs& in) {
  const Cochain beta = in.cochain(0, 2);
  if (!beta.in_ideal())
    throw InputError("cochain must take values in A (x) m");
  const McReport r = mc_check(beta, in.algebra(), in.base());
  Report rep{"mc-check", from_bool(r.is_mc), json::object()};
  rep.details["residual"] = cochain_to_json(r.residual);
  return rep;
}

Report cmd_hh(Inputs& in) {
  const std::size_t n = in.degree();
  if (n == 0)
    throw InputError("--degree must be at least 1");
  const std::size_t max_arity = std::max<std::size_t>(Coderivation::default_max_arity, n + 1);
  const std::size_t dim = hh_dimension(in.algebra(), n, max_arity);
  return {"hh", Status::pass, {{"degree", n}, {"dimension", dim}}};
}

Report cmd_gauge_act(Inputs& in) {
  const Cochain beta = in.cochain(0, 2);
  const Cochain f = in.generator();
  const Cochain out = gauge_act(exp_gauge(f, in.base()), beta, in.algebra(), in.base());
  const bool mc = is_mc(out, in.algebra(), in.base());
  Report rep{"gauge-act", from_bool(mc), json::object()};
  rep.details["result"] = cochain_to_json(out);
  rep.details["is_mc"] = mc;
  return rep;
}

Report cmd_gauge_equiv(Inputs& in) {
  const Cochain b1 = in.cochain(0, 2), b2 = in.cochain(1, 2);
  const GaugeEquivalence g = gauge_equivalent(b1, b2, in.algebra(), in.base());
  Report rep{"gauge-equiv", from_verdict(g.verdict), json::object()};
  json witness = nullptr;
  if (g.verdict == Verdict::equivalent) {
    if (!(gauge_act(exp_gauge(*g.generator, in.base()), b1, in.algebra(), in.base()) == b2))
      throw std::logic_error("gauge-equiv: witness failed re-verification");
    witness = cochain_to_json(*g.generator);
  }
  rep.details = verdict_to_json(g.verdict, witness);
  if (!g.reason.empty())
    rep.details["reason"] = g.reason;
  if (g.failed_order != 0)
    rep.details["failed_order"] = g.failed_order;
  return rep;
}

/// s + delta on generators, from --derivation, --cochain (delta of beta) or neither.
GeneratorMap deformed_differential(Inputs& in, std::size_t word_bound) {
  const FiniteAlgebra& alg = in.algebra();
  const ArtinLocalAlgebra& base = in.base();
  if (!in.options().derivation.empty()) {
    const Derivation d = in.derivation(word_bound);
    const GeneratorMap s = cobar_generator_map(alg, base);
    return [s, d](const BarWord& g) { return s(g) + d.on_generator(g); };
  }
  if (in.cochain_count() > 0) {
    const Cochain beta = in.cochain(0, 2);
    if (!is_mc(beta, alg, base))
      throw ContractError("cochain is not a Maurer-Cartan element");
    const Derivation d = delta_of_beta(beta, alg, base, word_bound);
    const GeneratorMap s = cobar_generator_map(alg, base);
    return [s, d](const BarWord& g) { return s(g) + d.on_generator(g); };
  }
  return cobar_generator_map(alg, base);
}

Report cmd_d2_check(Inputs& in) {
  const std::size_t w = in.word_bound(4);
  const TruncatedComplex c(in.algebra().dim(), in.base(), w, deformed_differential(in, w));
  const auto residual = c.square_residuals();
  bool ok = true;
  for (const auto& [deg, m] : residual)
    ok = ok && m.is_zero();
  json dims = json::object();
  for (int deg = c.min_degree(); deg <= 0; ++deg)
    dims[std::to_string(deg)] = c.basis(deg).size();
  return {"d2-check", from_bool(ok), {{"word_bound", w}, {"dimensions", dims}, {"residual_nonzeros", residual_summary(residual)}}};
}

Report cmd_homotopy_check(Inputs& in) {
  const std::size_t n = in.algebra().dim();
  std::vector<std::size_t> rows;
  if (in.options().degree) {
    rows.push_back(in.degree());
  } else {
    for (std::size_t r = 2; r <= in.word_bound(4); ++r)
      rows.push_back(r);
  }
  bool ok = true;
  json per_row = json::array();
  for (const std::size_t r : rows) {
    if (r < 2)
      throw InputError("the splitting homotopy is defined on rows of polydegree >= 2");
    const HomotopyReport h = homotopy_check(n, r);
    ok = ok && h.holds;
    per_row.push_back({{"polydegree", r}, {"holds", h.holds}, {"residual_nonzeros", h.residual.nonzeros()}});
  }
  return {"homotopy-check", from_bool(ok), {{"rows", per_row}}};
}

Report cmd_delta(Inputs& in) {
  const std::size_t w = in.word_bound(3);
  const Cochain beta = in.cochain(0, 2);
  const Derivation d = delta_of_beta(beta, in.algebra(), in.base(), w);
  const bool ok = mc_rel_check(d, in.algebra(), in.base(), w).holds;
  return {"delta", from_bool(ok), {{"delta", derivation_to_json(d)}, {"mc_rel", ok}}};
}

Report cmd_mc_rel_check(Inputs& in) {
  const Derivation d = in.derivation(in.options().word_bound.value_or(0));
  const std::size_t w = in.word_bound(d.word_bound());
  const McRelReport r = mc_rel_check(d, in.algebra(), in.base(), w);
  return {"mc-rel-check", from_bool(r.holds), {{"word_bound", w}, {"residual_nonzeros", residual_summary(r.residual)}}};
}

Derivation delta_from_inputs(Inputs& in, std::size_t w) {
  if (!in.options().derivation.empty())
    return in.derivation(w);
  const Cochain beta = in.cochain(0, 2);
  if (!is_mc(beta, in.algebra(), in.base()))
    throw ContractError("cochain is not a Maurer-Cartan element");
  return delta_of_beta(beta, in.algebra(), in.base(), w);
}

Report cmd_h0(Inputs& in) {
  const std::size_t w = in.word_bound(3);
  const Derivation d = delta_from_inputs(in, w);
  const H0Result h = h0_compute(d, in.algebra(), in.base(), w);
  const std::size_t expected = in.algebra().dim() * in.base().dim();
  const bool ok = h.dimension == expected && is_mc(h.product - product_cochain(in.algebra(), in.base().dim()),
                                                   in.algebra(), in.base());
  Report rep{"h0", from_bool(ok), h0_to_json(h)};
  rep.details["expected_dimension"] = expected;
  return rep;
}

Report cmd_flat_check(Inputs& in) {
  const FlatDeformation t = in.flat(0);
  const FlatnessReport r = flatness_check(t, in.algebra(), in.base());
  Report rep{"flat-check", from_bool(r.flat), {{"span_rank", r.span_rank}, {"carrier_dim", t.carrier_dim}}};
  if (r.flat) {
    json lift = json::array();
    for (const auto& v : r.lift)
      lift.push_back(vector_to_json(v));
    rep.details["lifted_basis"] = lift;
  } else {
    rep.details["reason"] = r.reason;
  }
  return rep;
}

Report cmd_flat_to_mc(Inputs& in) {
  const FlatDeformation t = in.flat(0);
  const FlatTransport tr = flat_transport(t, in.algebra(), in.base());
  const bool ok = is_mc(tr.beta, in.algebra(), in.base()) &&
                  is_flat_isomorphism(tr.to_carrier, functor_F(tr.beta, in.algebra(), in.base()), t);
  return {"flat-to-mc", from_bool(ok),
          {{"beta", cochain_to_json(tr.beta)}, {"isomorphism", dense_matrix_to_json(tr.to_carrier)}}};
}

Report cmd_flat_equiv(Inputs& in) {
  const FlatDeformation t1 = in.flat(0), t2 = in.flat(1);
  const FlatEquivalence e = flat_equivalent(t1, t2, in.algebra(), in.base());
  Report rep{"flat-equiv", from_verdict(e.verdict), json::object()};
  json witness = nullptr;
  if (e.verdict == Verdict::equivalent) {
    if (!is_flat_isomorphism(*e.isomorphism, t1, t2))
      throw std::logic_error("flat-equiv: isomorphism failed re-verification");
    witness = dense_matrix_to_json(*e.isomorphism);
  }
  rep.details = verdict_to_json(e.verdict, witness);
  if (!e.reason.empty())
    rep.details["reason"] = e.reason;
  return rep;
}

Report cmd_triangle(Inputs& in) {
  const FiniteAlgebra& alg = in.algebra();
  const ArtinLocalAlgebra& base = in.base();
  const std::size_t w = in.word_bound(3);
  Report rep{"triangle", Status::fail, json::object()};
  Cochain beta;
  if (in.cochain_count() > 0) {
    beta = in.cochain(0, 2);
  } else {
    Rng rng(in.options().seed);
    beta = random_mc(alg, base, rng);
    rep.details["seed"] = in.options().seed;
  }
  rep.details["beta"] = cochain_to_json(beta);
  auto stop = [&](const std::string& stage, const std::string& why) {
    rep.details["failed_stage"] = stage;
    rep.details["reason"] = why;
    return rep;
  };
  if (!beta.in_ideal())
    return stop("mc_check", "cochain does not take values in A (x) m");
  if (!is_mc(beta, alg, base))
    return stop("mc_check", "beta is not a Maurer-Cartan element");
  const Derivation delta = delta_of_beta(beta, alg, base, w);
  if (!mc_rel_check(delta, alg, base, w).holds)
    return stop("mc_rel_check", "(s + delta(beta))^2 != 0");
  const H0Result h = h0_compute(delta, alg, base, w);
  rep.details["h0"] = h0_to_json(h);
  if (h.dimension != alg.dim() * base.dim())
    return stop("h0_compute", "dim H0 = " + std::to_string(h.dimension) + ", expected " +
                                  std::to_string(alg.dim() * base.dim()));
  const FlatDeformation from_rel = flat_from_h0(h, alg, base);
  const FlatDeformation from_ass = functor_F(beta, alg, base);
  const FlatEquivalence e = flat_equivalent(from_ass, from_rel, alg, base);
  if (e.verdict != Verdict::equivalent)
    return stop("flat_equivalent", e.reason.empty() ? to_string(e.verdict) : e.reason);
  if (!is_flat_isomorphism(*e.isomorphism, from_ass, from_rel))
    throw std::logic_error("triangle: isomorphism failed re-verification");
  rep.details["isomorphism"] = dense_matrix_to_json(*e.isomorphism);
  rep.details["generator"] = cochain_to_json(*e.generator);
  rep.verdict = Status::pass;
  return rep;
}

using Handler = std::function<Report(Inputs&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"triangle", cmd_triangle},       {"check-assoc", cmd_check_assoc},
      {"validate-base", cmd_validate_base}, {"mc-check", cmd_mc_check},
      {"hh", cmd_hh},                   {"gauge-act", cmd_gauge_act},
      {"gauge-equiv", cmd_gauge_equiv}, {"d2-check", cmd_d2_check},
      {"homotopy-check", cmd_homotopy_check}, {"delta", cmd_delta},
      {"mc-rel-check", cmd_mc_rel_check}, {"h0", cmd_h0},
      {"flat-check", cmd_flat_check},   {"flat-to-mc", cmd_flat_to_mc},
      {"flat-equiv", cmd_flat_equiv},
  };
  return table;
}

} // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : handlers())
      out.push_back(k);
    return out;
  }();
  return names;
}

Report run_command(const std::string& command, const Options& options) {
  const auto it = handlers().find(command);
  if (it == handlers().end())
    throw InputError("unknown command \"" + command + "\"");
  Inputs in(options);
  return it->second(in);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for associative, relational and flat deformations"};
  std::string command;
  Options o;
  std::size_t word_bound = 0, degree = 0;
  app.add_option("command", command, "one of: " + [] {
    std::string s;
    for (const auto& c : command_names())
      s += (s.empty() ? "" : ", ") + c;
    return s;
  }())->required();
  app.add_option("--algebra", o.algebra, "algebra JSON");
  app.add_option("--base", o.base, "Artin base JSON");
  app.add_option("--cochain", o.cochains, "cochain JSON (repeatable)")->take_first()->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--derivation", o.derivation, "derivation JSON");
  app.add_option("--flat", o.flats, "flat deformation JSON (repeatable)")->take_first()->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--generator", o.generator, "gauge generator JSON (arity-1 cochain)");
  auto* wb = app.add_option("--word-bound", word_bound, "maximal bar word length");
  auto* dg = app.add_option("--degree", degree, "cochain degree / row");
  app.add_option("--seed", o.seed, "seed for sampled inputs");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error_exit;
  }
  if (wb->count() > 0)
    o.word_bound = word_bound;
  if (dg->count() > 0)
    o.degree = degree;
  try {
    const Report r = run_command(command, o);
    out << report_to_json(r).dump(2) << "\n";
    return exit_code(r.verdict);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const ContractError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const TruncationError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
  }
  return input_error_exit;
}

} // namespace trideform::cli
