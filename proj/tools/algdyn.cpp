// Command-line front end: algebra profiles, induced maps, degree sequences.

#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "algdyn/degrees.hpp"
#include "algdyn/induced.hpp"
#include "algdyn/parse.hpp"
#include "algdyn/report.hpp"

namespace {

using namespace algdyn;
using report::Json;

constexpr int kUsage = 1;
constexpr int kComputation = 2;
constexpr int kVerificationFailed = 3;

struct Options {
  std::string algebra;
  std::string phi;
  std::string monomial;
  std::uint64_t seed = 0;
  std::size_t samples = 16;
  std::size_t iters = 4;
  int p = 1;
  double c_max = 16.0;
  double epsilon = 0.05;
  std::size_t term_budget = 5'000'000;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string algebra_source(const Options& o) {
  if (o.algebra != "-") return o.algebra;
  std::string text(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>{});
  // drop the trailing newline so the echoed input matches the argument form
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

Json base_inputs(const Options& o, const std::string& algebra_text) {
  Json in;
  in["algebra"] = algebra_text;
  if (!o.phi.empty()) in["phi"] = o.phi;
  if (!o.monomial.empty()) in["monomial"] = o.monomial;
  in["seed"] = o.seed;
  in["samples"] = o.samples;
  return in;
}

void require_map_choice(const Options& o) {
  if (o.phi.empty() == o.monomial.empty()) throw UsageError("give exactly one of --phi or --monomial");
}

AffineRationalMap build_map(const Algebra& v, const Options& o) {
  if (!o.phi.empty()) return induce_univariate(v, parse_ratfunc(o.phi));
  return induce_monomial(parse_matrix(o.monomial), v);
}

struct Prediction {
  DegreeSequence sequence;
  Json parameters;
};

Prediction predict(const Algebra& v, const Options& o, int p) {
  Prediction out;
  if (!o.phi.empty()) {
    const UniRationalFunction phi = parse_ratfunc(o.phi);
    if (phi.degree() < 1) throw DomainError("phi must be non-constant");
    const GenericInvariants g = generic_invariants(v, o.seed, o.samples);
    out.sequence = theorem_a_predict(static_cast<int>(g.k), phi.degree(), p, o.iters);
    out.parameters["k"] = g.k;
    out.parameters["delta"] = g.delta;
    out.parameters["deg_phi"] = phi.degree();
    out.parameters["rate"] = std::to_string(phi.degree()) + "^" + std::to_string(std::min<int>(p, static_cast<int>(g.k)));
  } else {
    const IntMatrix a = parse_matrix(o.monomial);
    const Nilradical nil = nilradical_and_m(v);
    const int k_dim = static_cast<int>(v.dim());
    const int m = static_cast<int>(nil.reduced_dim);
    out.sequence = theorem_b_predict(a, k_dim, m, p, o.iters);
    const auto [lo, hi] = theorem_b_window(static_cast<int>(a.rows()), k_dim, m, p);
    out.parameters["d"] = a.rows();
    out.parameters["k_dim"] = k_dim;
    out.parameters["m"] = m;
    out.parameters["window"] = {lo, hi};
  }
  return out;
}

const char* kMonomialNote =
    "measured degrees are those of the reduced homogeneous map, so the homogenizing coordinate W counts; "
    "for exponent matrices with nonnegative entries deg F_A^n is the largest row sum of A^n "
    "(for A = [[1,1],[1,0]] on C^1 this is ||A^(n+1)||_max)";

int run_analyze(const Options& o) {
  const std::string text = algebra_source(o);
  const Algebra v = parse_algebra(text);
  Json doc = report::document("analyze", base_inputs(o, text));
  doc["algebra"] = report::profile(v, analyze(v, o.seed, o.samples));
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_induce(const Options& o) {
  require_map_choice(o);
  const std::string text = algebra_source(o);
  const Algebra v = parse_algebra(text);
  Json doc = report::document("induce", base_inputs(o, text));
  if (!o.phi.empty()) {
    const UniRationalFunction phi = parse_ratfunc(o.phi);
    doc["phi"] = {{"reduced", to_string(phi)}, {"degree", phi.degree()}};
  }
  doc["map"] = report::map(build_map(v, o));
  std::cout << doc.dump(2) << "\n";
  return 0;
}

DegreeSequence measure(const Algebra& v, const Options& o) {
  BruteForceOptions bf;
  bf.term_budget = o.term_budget;
  return brute_force_degrees(build_map(v, o), o.iters, bf);
}

int run_degseq(const Options& o) {
  require_map_choice(o);
  const std::string text = algebra_source(o);
  const Algebra v = parse_algebra(text);
  Json in = base_inputs(o, text);
  in["iters"] = o.iters;
  in["term_budget"] = o.term_budget;
  Json doc = report::document("degseq", in);
  doc["measured"] = report::sequence(measure(v, o));
  if (!o.monomial.empty()) doc["note"] = kMonomialNote;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_predict(const Options& o) {
  require_map_choice(o);
  const std::string text = algebra_source(o);
  const Algebra v = parse_algebra(text);
  Json in = base_inputs(o, text);
  in["p"] = o.p;
  in["iters"] = o.iters;
  Json doc = report::document("predict", in);
  const Prediction pred = predict(v, o, o.p);
  doc["parameters"] = pred.parameters;
  doc["predicted"] = report::sequence(pred.sequence);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_verify(const Options& o) {
  require_map_choice(o);
  if (o.p != 1) throw UsageError("verify measures deg_1 only; use --p 1");
  const std::string text = algebra_source(o);
  const Algebra v = parse_algebra(text);
  Json in = base_inputs(o, text);
  in["p"] = o.p;
  in["iters"] = o.iters;
  in["term_budget"] = o.term_budget;
  Json doc = report::document("verify", in);
  const DegreeSequence measured = measure(v, o);
  Options shortened = o;
  shortened.iters = measured.values.size();
  const Prediction pred = predict(v, shortened, 1);
  AsymptoticOptions opts;
  opts.c_max = o.c_max;
  opts.slope_epsilon = o.epsilon;
  const AsymptoticResult r = asymptotic_check(measured, pred.sequence, opts);
  doc["parameters"] = pred.parameters;
  doc["measured"] = report::sequence(measured);
  doc["predicted"] = report::sequence(pred.sequence);
  doc["check"] = report::asymptotic(r, opts);
  if (!o.monomial.empty()) doc["note"] = kMonomialNote;
  std::cout << doc.dump(2) << "\n";
  return r.verdict == Verdict::pass ? 0 : kVerificationFailed;
}

int run_dyndeg(const Options& o) {
  if (o.monomial.empty()) throw UsageError("dyndeg needs --monomial");
  const std::string text = algebra_source(o);
  const Algebra v = parse_algebra(text);
  const IntMatrix a = parse_matrix(o.monomial);
  const int k_dim = static_cast<int>(v.dim());
  const int m = static_cast<int>(nilradical_and_m(v).reduced_dim);
  Json in = base_inputs(o, text);
  in["p"] = o.p;
  Json doc = report::document("dyndeg", in);
  const auto [lo, hi] = theorem_b_window(static_cast<int>(a.rows()), k_dim, m, o.p);
  doc["parameters"] = {{"d", a.rows()}, {"k_dim", k_dim}, {"m", m}, {"window", {lo, hi}}};
  doc["lambda"] = report::decimal(dynamical_degree(a, m, k_dim, o.p));
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree growth of rational maps induced by finite-dimensional algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_algebra = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", o.algebra, "algebra presentation, or - to read stdin")->required();
    cmd->add_option("--seed", o.seed, "seed for generic sampling")->capture_default_str();
    cmd->add_option("--samples", o.samples, "number of generic samples")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto add_map = [&](CLI::App* cmd) {
    cmd->add_option("--phi", o.phi, "univariate rational function, e.g. \"(t^2+1)/(t-2)\"");
    cmd->add_option("--monomial", o.monomial, "integer exponent matrix, e.g. \"[[2,1],[1,1]]\"");
  };
  auto add_iters = [&](CLI::App* cmd) {
    cmd->add_option("--iters", o.iters, "number of iterates")->capture_default_str()->check(CLI::PositiveNumber);
  };

  std::string chosen;
  auto* analyze_cmd = app.add_subcommand("analyze", "profile an algebra");
  add_algebra(analyze_cmd);
  auto* induce_cmd = app.add_subcommand("induce", "print the induced map");
  add_algebra(induce_cmd);
  add_map(induce_cmd);
  auto* degseq_cmd = app.add_subcommand("degseq", "brute-force deg_1 of iterates");
  add_algebra(degseq_cmd);
  add_map(degseq_cmd);
  add_iters(degseq_cmd);
  degseq_cmd->add_option("--term-budget", o.term_budget, "stop after an iterate with more terms")->capture_default_str();
  auto* predict_cmd = app.add_subcommand("predict", "predicted degree growth");
  add_algebra(predict_cmd);
  add_map(predict_cmd);
  add_iters(predict_cmd);
  predict_cmd->add_option("--p", o.p, "codimension")->capture_default_str()->check(CLI::NonNegativeNumber);
  auto* verify_cmd = app.add_subcommand("verify", "compare measured and predicted growth");
  add_algebra(verify_cmd);
  add_map(verify_cmd);
  add_iters(verify_cmd);
  verify_cmd->add_option("--p", o.p, "codimension (only 1 is measured)")->capture_default_str();
  verify_cmd->add_option("--c-max", o.c_max, "largest accepted ratio")->capture_default_str();
  verify_cmd->add_option("--epsilon", o.epsilon, "largest accepted log-slope drift")->capture_default_str();
  verify_cmd->add_option("--term-budget", o.term_budget, "stop after an iterate with more terms")->capture_default_str();
  auto* dyndeg_cmd = app.add_subcommand("dyndeg", "dynamical degree of a monomial map");
  add_algebra(dyndeg_cmd);
  dyndeg_cmd->add_option("--monomial", o.monomial, "integer exponent matrix")->required();
  dyndeg_cmd->add_option("--p", o.p, "codimension")->capture_default_str()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*analyze_cmd) return run_analyze(o);
    if (*induce_cmd) return run_induce(o);
    if (*degseq_cmd) return run_degseq(o);
    if (*predict_cmd) return run_predict(o);
    if (*verify_cmd) return run_verify(o);
    if (*dyndeg_cmd) return run_dyndeg(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kComputation;
  }
  return kUsage;
}
