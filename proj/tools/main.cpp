// majorlab command-line tool: exact majorisation / divergence computations
// with JSON, CSV, and SVG output. Every subcommand is deterministic given
// (inputs, flags, seed); exact rationals are printed as "num/den" literals and
// never pass through floating point on the way out.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "majorlab/axioms.hpp"
#include "majorlab/bijection.hpp"
#include "majorlab/catalytic.hpp"
#include "majorlab/divergence.hpp"
#include "majorlab/errors.hpp"
#include "majorlab/json_io.hpp"
#include "majorlab/lorenz.hpp"
#include "majorlab/majorisation.hpp"
#include "majorlab/prob_vec.hpp"
#include "majorlab/relmaj.hpp"

namespace ml = majorlab;
using ml::Json;

namespace {

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ml::ParseError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ml::ParseError(path + ": " + e.what());
  }
}

ml::ProbVec read_dist(const std::string& path) {
  return ml::prob_vec_from_json(read_json_file(path));
}

ml::Channel read_channel(const std::string& path) {
  return ml::channel_from_json(read_json_file(path));
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ml::ParseError("cannot open output file: " + path);
  out << text;
}

void emit_json(const Json& j, const std::string& out_path) {
  write_text(out_path, j.dump(2) + "\n");
}

Json number_or_null(double v) {
  if (std::isfinite(v)) return Json(v);
  return Json();  // JSON has no infinities; null with context fields instead
}

std::string fmt_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

ml::RenyiOrder parse_order(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return ml::RenyiOrder::infinite();
  try {
    std::size_t used = 0;
    const double a = std::stod(text, &used);
    if (used != text.size()) throw ml::ParseError("trailing characters in order: " + text);
    return ml::RenyiOrder(a);
  } catch (const std::logic_error&) {
    throw ml::ParseError("cannot parse Renyi order: " + text);
  }
}

/// Named divergences: "alpha:A" (also "renyi:A"), "kl" (= alpha:1),
/// "min", "max", "path", and f-divergences "f:tv", "f:chi2", "f:kl".
ml::DivergenceFn divergence_by_spec(const std::string& spec) {
  if (spec.rfind("alpha:", 0) == 0) return ml::renyi_divergence_fn(parse_order(spec.substr(6)));
  if (spec.rfind("renyi:", 0) == 0) return ml::renyi_divergence_fn(parse_order(spec.substr(6)));
  if (spec == "kl") return ml::renyi_divergence_fn(ml::RenyiOrder(1.0));
  if (spec == "min") return ml::min_relative_entropy_fn();
  if (spec == "max") return ml::max_relative_entropy_fn();
  if (spec == "path") return ml::pathological_relative_entropy_fn();
  if (spec == "f:tv" || spec == "tv") return ml::f_divergence(ml::tv_kernel());
  if (spec == "f:chi2" || spec == "chi2") return ml::f_divergence(ml::chi2_kernel());
  if (spec == "f:kl") return ml::f_divergence(ml::kl_kernel());
  throw ml::ParseError("unknown divergence spec: " + spec +
                       " (expected alpha:A, kl, min, max, path, f:tv, f:chi2, f:kl)");
}

/// Named entropies: "alpha:A", "shannon" (= alpha:1), "max" (log2 support
/// size), "min" (-log2 largest entry).
ml::EntropyFn entropy_by_spec(const std::string& spec) {
  if (spec.rfind("alpha:", 0) == 0) return ml::renyi_entropy_fn(parse_order(spec.substr(6)));
  if (spec == "shannon") return ml::renyi_entropy_fn(ml::RenyiOrder(1.0));
  if (spec == "max") return ml::max_entropy_fn();
  if (spec == "min") return ml::min_entropy_fn();
  throw ml::ParseError("unknown entropy spec: " + spec +
                       " (expected alpha:A, shannon, max, min)");
}

std::string verdict_name(ml::Verdict v) {
  switch (v) {
    case ml::Verdict::holds: return "holds";
    case ml::Verdict::fails: return "fails";
    case ml::Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Json tristate_json(const ml::TriState& t) {
  Json j;
  j["verdict"] = verdict_name(t.verdict);
  j["margin"] = number_or_null(t.margin);
  j["margin_infinite"] = !std::isfinite(t.margin);
  j["witness"] = t.witness_alpha ? Json(*t.witness_alpha) : Json();
  j["detail"] = t.detail;
  return j;
}

Json dist_entries(const ml::ProbVec& p) { return ml::to_json(p)["dist"]; }

std::string lorenz_csv(const ml::LorenzCurve& curve) {
  std::string out = "a_exact,b_exact,a_float,b_float\n";
  for (const auto& [a, b] : curve.vertices()) {
    out += ml::to_string(a) + "," + ml::to_string(b) + "," + fmt_double(ml::to_double(a)) + "," +
           fmt_double(ml::to_double(b)) + "\n";
  }
  return out;
}

std::string lorenz_svg(const ml::LorenzCurve& curve) {
  // 512x512 viewport; y grows downward in SVG, so b maps to 512*(1-b). The
  // upper boundary is the lower one rotated by 180 degrees about (1/2, 1/2).
  const ml::Rational scale(512);
  const ml::Rational one(1);
  auto points = [&](bool rotated) {
    std::string s;
    const auto& vs = curve.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto& [a, b] = vs[rotated ? vs.size() - 1 - i : i];
      const ml::Rational x = scale * (rotated ? one - a : a);
      const ml::Rational y = scale * (rotated ? b : one - b);
      char buffer[64];
      std::snprintf(buffer, sizeof(buffer), "%.8g,%.8g ", ml::to_double(x), ml::to_double(y));
      s += buffer;
    }
    if (!s.empty()) s.pop_back();
    return s;
  };
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"544\" height=\"544\" "
         "viewBox=\"-16 -16 544 544\">\n";
  svg += "  <rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"white\" "
         "stroke=\"#333333\" stroke-width=\"1\"/>\n";
  svg += "  <line x1=\"0\" y1=\"512\" x2=\"512\" y2=\"0\" stroke=\"#bbbbbb\" "
         "stroke-width=\"1\" stroke-dasharray=\"6,6\"/>\n";
  svg += "  <polyline fill=\"none\" stroke=\"#1a6faf\" stroke-width=\"2\" points=\"" +
         points(false) + "\"/>\n";
  svg += "  <polyline fill=\"none\" stroke=\"#b03a2e\" stroke-width=\"2\" points=\"" +
         points(true) + "\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"majorlab: exact majorisation, Lorenz curves, divergences, and catalysis checks"};
  app.require_subcommand(1);

  std::string out = "-";
  bool strict = false;
  std::string p_path, q_path, p2_path, q2_path, w_path, r_path, t_path;
  std::string witness_out, csv_out, svg_out;
  std::string alpha_text, f_name, div_spec, ent_spec;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::size_t grid_points = 64;
  double tol = 1e-9;
  unsigned long denom = 1'000'000;
  std::size_t max_dim = 2;
  unsigned long denom_bound = 6;
  std::size_t probe_max_dim = 5;
  bool do_search = false;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out, "output path for the JSON result ('-' = stdout)");
  };
  auto add_strict = [&](CLI::App* sub) {
    sub->add_flag("--strict", strict, "exit 1 when the decided answer is negative");
  };

  int rc = 0;

  // --- majorize ---------------------------------------------------------
  auto* majorize = app.add_subcommand("majorize", "decide p majorises q (exact)");
  majorize->add_option("p", p_path, "distribution JSON")->required();
  majorize->add_option("q", q_path, "distribution JSON")->required();
  majorize->add_option("--witness", witness_out, "write a mixing channel witness here when true");
  add_out(majorize);
  add_strict(majorize);
  majorize->callback([&] {
    const ml::ProbVec p = read_dist(p_path);
    const ml::ProbVec q = read_dist(q_path);
    const bool result = ml::majorises(p, q);
    Json j{{"majorises", result}};
    if (result && !witness_out.empty()) {
      const ml::Channel w = ml::mixing_witness(p, q);
      emit_json(ml::to_json(w), witness_out);
      j["witness_path"] = witness_out;
    }
    emit_json(j, out);
    if (strict && !result) rc = 1;
  });

  // --- relmaj -----------------------------------------------------------
  auto* relmaj = app.add_subcommand("relmaj", "decide (p,q) relatively majorises (p2,q2) (exact)");
  relmaj->add_option("p", p_path)->required();
  relmaj->add_option("q", q_path)->required();
  relmaj->add_option("p2", p2_path)->required();
  relmaj->add_option("q2", q2_path)->required();
  relmaj->add_option("--witness", witness_out, "write an exact channel witness here when true");
  add_out(relmaj);
  add_strict(relmaj);
  relmaj->callback([&] {
    const ml::ProbVec p = read_dist(p_path), q = read_dist(q_path);
    const ml::ProbVec p2 = read_dist(p2_path), q2 = read_dist(q2_path);
    const bool result = ml::relatively_majorises(p, q, p2, q2);
    Json j{{"relatively_majorises", result}};
    if (result && !witness_out.empty()) {
      const auto w = ml::channel_witness(p, q, p2, q2);
      if (w) {
        emit_json(ml::to_json(*w), witness_out);
        j["witness_path"] = witness_out;
      }
    }
    emit_json(j, out);
    if (strict && !result) rc = 1;
  });

  // --- lorenz -----------------------------------------------------------
  auto* lorenz = app.add_subcommand("lorenz", "Lorenz curve of a pair (JSON, CSV, or SVG)");
  lorenz->add_option("p", p_path)->required();
  lorenz->add_option("q", q_path)->required();
  auto* csv_opt = lorenz->add_option("--csv", csv_out, "write vertices as CSV ('-' = stdout)");
  auto* svg_opt = lorenz->add_option("--svg", svg_out, "write a 512x512 plot ('-' = stdout)");
  csv_opt->excludes(svg_opt);
  add_out(lorenz);
  lorenz->callback([&] {
    const ml::ProbVec p = read_dist(p_path), q = read_dist(q_path);
    const ml::LorenzCurve curve = ml::lorenz_curve(p, q).normalised();
    if (!csv_out.empty()) {
      write_text(csv_out, lorenz_csv(curve));
      return;
    }
    if (!svg_out.empty()) {
      write_text(svg_out, lorenz_svg(curve));
      return;
    }
    Json verts = Json::array();
    for (const auto& [a, b] : curve.vertices())
      verts.push_back(Json::array({ml::to_string(a), ml::to_string(b)}));
    emit_json(Json{{"vertices", verts}}, out);
  });

  // --- embed ------------------------------------------------------------
  auto* embed = app.add_subcommand("embed", "embed (p,q) as (r, uniform(k)) for rational q > 0");
  embed->add_option("p", p_path)->required();
  embed->add_option("q", q_path)->required();
  add_out(embed);
  embed->callback([&] {
    const ml::ProbVec p = read_dist(p_path), q = read_dist(q_path);
    const ml::Embedding e = ml::embed_to_uniform(p, q);
    Json j = ml::to_json(e.r);
    j["k"] = e.k;
    j["block_sizes"] = e.block_sizes;
    j["order"] = e.order;
    emit_json(j, out);
  });

  // --- divergence -------------------------------------------------------
  auto* divergence = app.add_subcommand("divergence", "evaluate a divergence at (p, q), in bits");
  divergence->add_option("p", p_path)->required();
  divergence->add_option("q", q_path)->required();
  auto* alpha_opt = divergence->add_option("--alpha", alpha_text, "Renyi order (number or 'inf')");
  auto* f_opt = divergence->add_option("--f", f_name, "f-divergence kernel: tv, chi2, kl");
  alpha_opt->excludes(f_opt);
  add_out(divergence);
  divergence->callback([&] {
    if (alpha_text.empty() && f_name.empty())
      throw ml::ParseError("divergence: pass exactly one of --alpha or --f");
    const ml::ProbVec p = read_dist(p_path), q = read_dist(q_path);
    const ml::DivergenceFn d =
        alpha_text.empty() ? divergence_by_spec("f:" + f_name) : divergence_by_spec("alpha:" + alpha_text);
    emit_json(ml::to_json(d.evaluate(p, q)), out);
  });

  // --- entropy ----------------------------------------------------------
  auto* entropy = app.add_subcommand("entropy", "Renyi entropy of p, in bits");
  entropy->add_option("p", p_path)->required();
  entropy->add_option("--alpha", alpha_text, "Renyi order (number or 'inf')")->required();
  add_out(entropy);
  entropy->callback([&] {
    const ml::ProbVec p = read_dist(p_path);
    const double h = ml::renyi_entropy(parse_order(alpha_text), p);
    emit_json(ml::to_json(ml::ExtReal::finite_clamped(h)), out);
  });

  // --- bijection --------------------------------------------------------
  auto* bijection = app.add_subcommand("bijection", "entropy <-> relative entropy correspondence");
  bijection->require_subcommand(1);
  auto* to_entropy = bijection->add_subcommand(
      "to-entropy", "evaluate the entropy induced by a divergence: log2 n - d(p||u)");
  to_entropy->add_option("p", p_path)->required();
  to_entropy->add_option("--alpha", alpha_text, "Renyi order of the source divergence");
  to_entropy->add_option("--divergence", div_spec, "divergence spec (alternative to --alpha)");
  add_out(to_entropy);
  to_entropy->callback([&] {
    if (alpha_text.empty() == div_spec.empty())
      throw ml::ParseError("bijection to-entropy: pass exactly one of --alpha or --divergence");
    const ml::DivergenceFn d =
        div_spec.empty() ? divergence_by_spec("alpha:" + alpha_text) : divergence_by_spec(div_spec);
    const ml::ProbVec p = read_dist(p_path);
    const double h = ml::entropy_from_relent(d).evaluate(p);
    emit_json(ml::to_json(ml::ExtReal::finite_clamped(h)), out);
  });
  auto* to_relent = bijection->add_subcommand(
      "to-relent", "evaluate the divergence induced by an entropy via uniform embedding");
  to_relent->add_option("p", p_path)->required();
  to_relent->add_option("q", q_path)->required();
  to_relent->add_option("--entropy", ent_spec, "entropy spec: alpha:A, shannon, max, min")
      ->required();
  add_out(to_relent);
  to_relent->callback([&] {
    const ml::EntropyFn h = entropy_by_spec(ent_spec);
    const ml::ProbVec p = read_dist(p_path), q = read_dist(q_path);
    emit_json(ml::to_json(ml::relent_from_entropy(h, p, q)), out);
  });

  // --- trump ------------------------------------------------------------
  auto* trump = app.add_subcommand("trump", "strict catalytic-majorisation order conditions");
  trump->add_option("p", p_path)->required();
  trump->add_option("p2", p2_path)->required();
  trump->add_option("--grid", grid_points, "number of interior Renyi-order grid points");
  add_out(trump);
  add_strict(trump);
  trump->callback([&] {
    const ml::ProbVec p = read_dist(p_path), p2 = read_dist(p2_path);
    const ml::TriState t = ml::trumps(p, p2, ml::default_alpha_grid(grid_points));
    emit_json(tristate_json(t), out);
    if (strict && t.verdict == ml::Verdict::fails) rc = 1;
  });

  // --- catalytic --------------------------------------------------------
  auto* catalytic = app.add_subcommand(
      "catalytic", "catalytic relative-majorisation conditions, optionally with catalyst search");
  catalytic->add_option("p", p_path)->required();
  catalytic->add_option("q", q_path)->required();
  catalytic->add_option("p2", p2_path)->required();
  catalytic->add_option("q2", q2_path)->required();
  catalytic->add_option("--grid", grid_points, "number of interior Renyi-order grid points");
  catalytic->add_flag("--search", do_search, "exhaustively search for a small catalyst");
  catalytic->add_option("--max-dim", max_dim, "catalyst dimension bound for --search");
  catalytic->add_option("--denom", denom_bound, "catalyst denominator bound for --search");
  add_out(catalytic);
  add_strict(catalytic);
  catalytic->callback([&] {
    const ml::ProbVec p = read_dist(p_path), q = read_dist(q_path);
    const ml::ProbVec p2 = read_dist(p2_path), q2 = read_dist(q2_path);
    const ml::TriState t = ml::catalytic_relmaj(p, q, p2, q2, ml::default_alpha_grid(grid_points));
    Json j = tristate_json(t);
    if (do_search) {
      const auto found = ml::brute_force_catalyst(p, q, p2, q2, max_dim, denom_bound);
      j["catalyst"] =
          found ? Json{{"r", dist_entries(found->first)}, {"t", dist_entries(found->second)}}
                : Json();
    }
    emit_json(j, out);
    if (strict && t.verdict == ml::Verdict::fails) rc = 1;
  });

  // --- axioms -----------------------------------------------------------
  auto* axioms = app.add_subcommand("axioms", "probe data-processing/additivity/normalisation");
  axioms->add_option("--divergence", div_spec, "divergence spec")->required();
  axioms->add_option("--samples", samples, "instances per axiom");
  axioms->add_option("--seed", seed, "RNG seed");
  axioms->add_option("--tol", tol, "violation tolerance");
  axioms->add_option("--denom", denom, "sampling denominator");
  axioms->add_option("--max-dim", probe_max_dim, "largest sampled alphabet");
  add_out(axioms);
  axioms->callback([&] {
    const ml::DivergenceFn d = divergence_by_spec(div_spec);
    ml::ProbeOptions options;
    options.samples = samples;
    options.seed = seed;
    options.tolerance = tol;
    options.denominator = denom;
    options.max_dim = probe_max_dim;
    const ml::AxiomReport report = ml::probe_axioms(d, options);
    Json axs = Json::array();
    for (const auto& res : report.axioms) {
      Json violations = Json::array();
      for (const auto& v : res.violations)
        violations.push_back(Json{{"instance", v.instance}, {"margin", number_or_null(v.margin)}});
      axs.push_back(Json{{"axiom", res.axiom},
                         {"instances", res.instances},
                         {"worst_margin", number_or_null(res.worst_margin)},
                         {"violation_count", res.violation_count},
                         {"violations", violations}});
    }
    emit_json(Json{{"divergence", report.divergence},
                   {"seed", report.seed},
                   {"tolerance", report.tolerance},
                   {"axioms", axs}},
              out);
  });

  // --- order ------------------------------------------------------------
  auto* order = app.add_subcommand("order", "curvature order parameter of a divergence");
  order->add_option("--divergence", div_spec, "divergence spec")->required();
  add_out(order);
  order->callback([&] {
    const ml::DivergenceFn d = divergence_by_spec(div_spec);
    const double value = ml::order_parameter(d);
    emit_json(Json{{"divergence", d.name},
                   {"order", number_or_null(value)},
                   {"infinite", !std::isfinite(value)}},
              out);
  });

  // --- faithful ---------------------------------------------------------
  auto* faithful = app.add_subcommand("faithful", "evidence for/against positive definiteness");
  faithful->add_option("--divergence", div_spec, "divergence spec")->required();
  faithful->add_option("--samples", samples, "random equal-support pairs to try")
      ->default_val(std::size_t{200});
  faithful->add_option("--seed", seed, "RNG seed");
  add_out(faithful);
  faithful->callback([&] {
    const ml::DivergenceFn d = divergence_by_spec(div_spec);
    const ml::FaithfulnessReport report = ml::classify_faithfulness(d, samples, seed);
    Json witness;
    if (report.zero_witness) {
      witness = Json{{"p", dist_entries(report.zero_witness->first)},
                     {"q", dist_entries(report.zero_witness->second)},
                     {"value", report.witness_value}};
    }
    emit_json(
        Json{{"divergence", d.name},
             {"verdict", report.verdict == ml::FaithVerdict::not_faithful ? "not-faithful"
                                                                          : "faithful-evidence"},
             {"alpha_estimate", number_or_null(report.alpha_estimate)},
             {"witness", witness},
             {"instances", report.instances}},
        out);
  });

  // --- witness ----------------------------------------------------------
  auto* witness = app.add_subcommand("witness", "verify a certificate exactly");
  witness->require_subcommand(1);
  add_strict(witness);
  auto* w_mixing = witness->add_subcommand(
      "mixing", "check W is bistochastic and maps p (restricted to support) to q");
  w_mixing->add_option("p", p_path)->required();
  w_mixing->add_option("q", q_path)->required();
  w_mixing->add_option("w", w_path)->required();
  add_out(w_mixing);
  w_mixing->callback([&] {
    const ml::ProbVec p = read_dist(p_path), q = read_dist(q_path);
    const ml::Channel w = read_channel(w_path);
    const ml::ProbVec fed = w.input_size() == p.size() ? p : p.restrict_to_support();
    const bool valid = w.input_size() == fed.size() && ml::is_bistochastic(w) &&
                       ml::apply_channel(fed, w) == q;
    emit_json(Json{{"kind", "mixing"}, {"valid", valid}}, out);
    if (strict && !valid) rc = 1;
  });
  auto* w_channel =
      witness->add_subcommand("channel", "check W maps p to p2 and q to q2 simultaneously");
  w_channel->add_option("p", p_path)->required();
  w_channel->add_option("q", q_path)->required();
  w_channel->add_option("p2", p2_path)->required();
  w_channel->add_option("q2", q2_path)->required();
  w_channel->add_option("w", w_path)->required();
  add_out(w_channel);
  w_channel->callback([&] {
    const ml::ProbVec p = read_dist(p_path), q = read_dist(q_path);
    const ml::ProbVec p2 = read_dist(p2_path), q2 = read_dist(q2_path);
    const ml::Channel w = read_channel(w_path);
    const bool valid = w.input_size() == p.size() && ml::apply_channel(p, w) == p2 &&
                       ml::apply_channel(q, w) == q2;
    emit_json(Json{{"kind", "channel"}, {"valid", valid}}, out);
    if (strict && !valid) rc = 1;
  });
  auto* w_trumping = witness->add_subcommand(
      "trumping", "check (p x r, q x t) lies above (p2 x r, q2 x t) in the Blackwell order");
  w_trumping->add_option("p", p_path)->required();
  w_trumping->add_option("q", q_path)->required();
  w_trumping->add_option("p2", p2_path)->required();
  w_trumping->add_option("q2", q2_path)->required();
  w_trumping->add_option("r", r_path)->required();
  w_trumping->add_option("t", t_path)->required();
  add_out(w_trumping);
  w_trumping->callback([&] {
    const ml::ProbVec p = read_dist(p_path), q = read_dist(q_path);
    const ml::ProbVec p2 = read_dist(p2_path), q2 = read_dist(q2_path);
    const ml::ProbVec r = read_dist(r_path), t = read_dist(t_path);
    const bool valid = ml::verify_trumping_witness(p, q, p2, q2, r, t);
    emit_json(Json{{"kind", "trumping"}, {"valid", valid}}, out);
    if (strict && !valid) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  } catch (const ml::ExtensionDiverged& e) {
    Json j{{"diverged", true},
           {"lower", number_or_null(e.lower)},
           {"upper", number_or_null(e.upper)},
           {"what", e.what()}};
    emit_json(j, out);
    return 0;
  } catch (const ml::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
