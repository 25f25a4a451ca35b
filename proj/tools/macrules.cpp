// Copyright 2026 The macrules Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: solve, check, reduce, split, merge, gen,
// decompose. Documents in and out are exact-rational JSON; exit code 0 on
// success, 1 when a violation was found (witness emitted), 2 on input
// errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mac/axioms.hpp"
#include "mac/cpa.hpp"
#include "mac/fuzz.hpp"
#include "mac/gen.hpp"
#include "mac/json_io.hpp"
#include "mac/rules.hpp"
#include "mac/transforms.hpp"

namespace {

using mac::io::ojson;

struct CliError : std::runtime_error {
  CliError(std::string c, const std::string& m) : std::runtime_error(m), code(std::move(c)) {}
  std::string code;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("io/unreadable", "cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const ojson& doc, const std::string& out_path) {
  std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError("io/unwritable", "cannot write \"" + out_path + "\"");
  out << text;
}

ojson tool_header(const std::optional<std::string>& input_bytes) {
  ojson j;
  j["tool"] = {{"name", std::string(mac::io::kToolName)},
               {"version", std::string(mac::io::kToolVersion)}};
  if (input_bytes) j["input_digest"] = mac::io::digest_hex(*input_bytes);
  return j;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

mac::IntRange parse_range(const std::string& text) {
  auto bad = [&] { throw CliError("cli/bad-range", "\"" + text + "\" is not N or A..B"); };
  mac::IntRange r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    bad();
  }
  return r;
}

mac::Rational parse_rational_flag(const std::string& text, const char* flag) {
  auto r = mac::Rational::parse(text);
  if (!r)
    throw CliError("cli/bad-rational",
                   std::string(flag) + ": \"" + text + "\" is not an exact rational");
  return *r;
}

struct LoadedProblem {
  mac::Problem problem;
  mac::ValidationReport report;
  std::string bytes;
};

LoadedProblem load_problem(const std::string& path) {
  std::string bytes = read_file(path);
  mac::ProblemData data = mac::io::problem_from_string(bytes);
  mac::ValidationReport rep = mac::validate_problem(data);
  if (!rep.ok()) {
    ojson err = tool_header(bytes);
    err["error"] = {{"code", "validate/invalid-problem"},
                    {"message", "the problem document is structurally invalid"}};
    err["report"] = mac::io::report_to_json(rep);
    std::cerr << err.dump(2) << "\n";
    std::exit(2);
  }
  return {mac::Problem::validated(std::move(data)), std::move(rep), std::move(bytes)};
}

mac::RulePtr build_rule(const std::string& name, const std::string& order_csv) {
  auto kind = mac::rule_kind_from_name(name);
  if (!kind) throw CliError("cli/unknown-rule", "unknown rule \"" + name + "\"");
  if (!order_csv.empty()) {
    if (*kind != mac::RuleKind::kPriority)
      throw CliError("cli/order-without-priority",
                     "--order applies to the priority rule only");
    return mac::make_priority_rule(split_list(order_csv));
  }
  return mac::make_rule(*kind);
}

void attach_warnings(ojson& doc, const mac::ValidationReport& rep) {
  if (rep.warnings.empty()) return;
  doc["warnings"] = ojson::array();
  for (const mac::ValidationEntry& w : rep.warnings)
    doc["warnings"].push_back({{"code", w.code}, {"message", w.message}});
}

// ---------------------------------------------------------------- solve ----

int run_solve(const std::string& input, const std::string& out_path,
              const std::string& rule_name, const std::string& order_csv,
              bool want_trace, bool want_normalize) {
  if (want_trace && rule_name != "cpa")
    throw CliError("cli/trace-unsupported", "--trace is only defined for --rule cpa");

  LoadedProblem lp = load_problem(input);
  mac::RulePtr rule = build_rule(rule_name, order_csv);

  ojson doc = tool_header(lp.bytes);
  doc["command"] = "solve";
  doc["rule"] = rule->name();
  if (rule->reconstructed()) doc["reconstructed_rule"] = true;
  attach_warnings(doc, lp.report);

  std::vector<std::pair<std::string, mac::Rational>> released;
  const mac::Problem* target = &lp.problem;
  std::optional<mac::NormalizeResult> normalized;
  if (want_normalize) {
    normalized = mac::normalize(lp.problem);
    released = normalized->released_claimants;
    target = &normalized->problem;
    ojson n;
    n["removed_issues"] = normalized->removed_issues;
    n["released_claimants"] = ojson::array();
    for (const auto& [id, amount] : released)
      n["released_claimants"].push_back({{"id", id}, {"amount", amount.str()}});
    n["trivial"] = normalized->trivial();
    doc["normalized"] = std::move(n);
  }

  mac::Allocation x = rule->allocate(*target);
  ojson awards = ojson::array();
  mac::Rational total;
  for (int j = 0; j < x.size(); ++j) {
    awards.push_back({{"id", x.ids()[j]}, {"amount", x[j].str()}});
    total += x[j];
  }
  for (const auto& [id, amount] : released) {
    awards.push_back({{"id", id}, {"amount", amount.str()}});
    total += amount;
  }
  doc["allocation"] = {{"awards", std::move(awards)}, {"total", total.str()}};

  if (want_trace) doc["trace"] = mac::io::trace_to_json(mac::solve_cpa(*target));

  emit(doc, out_path);
  return 0;
}

// ---------------------------------------------------------------- check ----

int run_check(const std::string& input, const std::string& replay_path,
              const std::string& out_path, const std::string& rule_name,
              const std::string& order_csv, const std::string& axiom_name_flag,
              int budget, std::uint64_t seed, bool serial,
              const mac::GenParams& gen_params) {
  mac::Exec exec = serial ? mac::Exec::kSerial : mac::Exec::kParallel;

  if (!replay_path.empty()) {
    std::string bytes = read_file(replay_path);
    nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw CliError("schema/parse", "replay file is not valid JSON");
    if (j.contains("witness")) j = j["witness"];  // accept whole check outputs
    mac::io::ReplayCase rc = mac::io::replay_from_json(j);
    mac::Problem p = mac::Problem::validated(rc.problem);

    mac::AxiomVerdict v;
    if (const auto* s = std::get_if<mac::SubsetSpec>(&rc.transformation))
      v = mac::check_cons(*rc.rule, p, std::span(s, 1));
    else if (const auto* s = std::get_if<mac::SplitSpec>(&rc.transformation))
      v = mac::check_nms(*rc.rule, p, std::span(s, 1));
    else if (const auto* s = std::get_if<mac::MergeSpec>(&rc.transformation))
      v = mac::check_nmrm(*rc.rule, p, std::span(s, 1));
    else
      v = mac::check_axiom(*rc.rule, rc.axiom, p, mac::CheckOptions{}, seed);

    ojson doc = tool_header(bytes);
    doc["command"] = "check";
    doc["mode"] = "replay";
    doc["rule"] = rc.rule->name();
    doc["axiom"] = mac::axiom_name(rc.axiom);
    doc["verdict"] = mac::io::verdict_to_json(v);
    emit(doc, out_path);
    return v.holds() ? 0 : 1;
  }

  auto axiom = mac::axiom_from_name(axiom_name_flag);
  if (!axiom) throw CliError("cli/unknown-axiom", "unknown axiom \"" + axiom_name_flag + "\"");
  mac::RulePtr rule = build_rule(rule_name, order_csv);

  if (!input.empty()) {
    LoadedProblem lp = load_problem(input);
    mac::AxiomVerdict v =
        mac::check_axiom(*rule, *axiom, lp.problem, mac::CheckOptions{}, seed);
    ojson doc = tool_header(lp.bytes);
    doc["command"] = "check";
    doc["mode"] = "single";
    doc["rule"] = rule->name();
    if (rule->reconstructed()) doc["reconstructed_rule"] = true;
    doc["axiom"] = axiom_name_flag;
    doc["seed"] = seed;
    attach_warnings(doc, lp.report);
    doc["verdict"] = mac::io::verdict_to_json(v);
    emit(doc, out_path);
    return v.holds() ? 0 : 1;
  }

  mac::FuzzParams params;
  params.gen = gen_params;
  params.budget = budget;
  params.seed = seed;
  auto hit = mac::fuzz_axiom(*rule, *axiom, params, exec);

  ojson doc = tool_header(std::nullopt);
  doc["command"] = "check";
  doc["mode"] = "fuzz";
  doc["rule"] = rule->name();
  if (rule->reconstructed()) doc["reconstructed_rule"] = true;
  doc["axiom"] = axiom_name_flag;
  doc["budget"] = budget;
  doc["seed"] = seed;
  doc["execution"] = serial ? "serial" : "parallel";
  if (hit) {
    doc["result"] = "violation-found";
    doc["trial"] = hit->trial;
    doc["trial_seed"] = hit->trial_seed;
    doc["verdict"] = mac::io::verdict_to_json(hit->verdict);
  } else {
    doc["result"] = "no-violation";
    doc["trials_run"] = budget;
  }
  emit(doc, out_path);
  return hit ? 1 : 0;
}

// ------------------------------------------------------- transformations ----

int run_reduce(const std::string& input, const std::string& out_path,
               const std::string& rule_name, const std::string& order_csv,
               const std::string& keep_csv) {
  LoadedProblem lp = load_problem(input);
  mac::RulePtr rule = build_rule(rule_name, order_csv);
  mac::Allocation x = rule->allocate(lp.problem);
  mac::SubsetSpec spec{split_list(keep_csv)};
  mac::Problem reduced = mac::reduce_problem(lp.problem, x, spec);

  ojson doc = tool_header(lp.bytes);
  doc["command"] = "reduce";
  doc["rule"] = rule->name();
  doc["keep"] = spec.keep;
  doc["allocation"] = mac::io::allocation_to_json(x);
  doc["problem"] = mac::io::problem_to_json(reduced);
  emit(doc, out_path);
  return 0;
}

int run_split(const std::string& input, const std::string& out_path,
              const std::string& target, const std::string& parts_csv) {
  LoadedProblem lp = load_problem(input);
  mac::SplitSpec spec;
  spec.target = target;
  for (const std::string& part : split_list(parts_csv)) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw CliError("cli/bad-parts", "--parts entries look like id=claim");
    spec.parts.emplace_back(part.substr(0, eq),
                            parse_rational_flag(part.substr(eq + 1), "--parts"));
  }
  mac::Problem split = mac::split_problem(lp.problem, spec);

  ojson doc = tool_header(lp.bytes);
  doc["command"] = "split";
  doc["target"] = target;
  doc["problem"] = mac::io::problem_to_json(split);
  emit(doc, out_path);
  return 0;
}

int run_merge(const std::string& input, const std::string& out_path,
              const std::string& sources_csv, const std::string& into) {
  LoadedProblem lp = load_problem(input);
  mac::MergeSpec spec{split_list(sources_csv), into};
  mac::Problem merged = mac::merge_problem(lp.problem, spec);

  ojson doc = tool_header(lp.bytes);
  doc["command"] = "merge";
  doc["sources"] = spec.sources;
  doc["merged_id"] = spec.merged_id;
  doc["problem"] = mac::io::problem_to_json(merged);
  emit(doc, out_path);
  return 0;
}

int run_gen(const std::string& out_path, const mac::GenParams& params,
            std::uint64_t seed) {
  mac::Problem p = mac::gen_problem(params, seed);
  ojson doc = mac::io::problem_to_json(p);
  emit(doc, out_path);
  return 0;
}

int run_decompose(const std::string& input, const std::string& out_path) {
  LoadedProblem lp = load_problem(input);
  std::vector<mac::Problem> parts = mac::decompose(lp.problem);

  ojson doc = tool_header(lp.bytes);
  doc["command"] = "decompose";
  doc["components"] = ojson::array();
  for (const mac::Problem& part : parts)
    doc["components"].push_back(mac::io::problem_to_json(part));
  emit(doc, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"allocation rules for multi-issue claims problems with crossed claims"};
  app.require_subcommand(1);
  app.set_version_flag("--version",
                       std::string(mac::io::kToolName) + " " +
                           std::string(mac::io::kToolVersion));

  std::string input, output, rule_name = "cpa", order_csv, axiom, keep_csv;
  std::string target, parts_csv, sources_csv, into, replay_path;
  bool want_trace = false, want_normalize = false, serial = false;
  int budget = 1000;
  std::uint64_t seed = 0;

  std::string claimants_range = "2..6", issues_range = "1..4";
  double density = 0.5, twin_prob = 0.25;
  int den_bound = 8;
  std::string claim_lo = "1", claim_hi = "20";

  auto add_gen_flags = [&](CLI::App* cmd) {
    cmd->add_option("--claimants", claimants_range, "claimant count, N or A..B");
    cmd->add_option("--issues", issues_range, "issue count, N or A..B");
    cmd->add_option("--density", density, "chance a claimant claims an issue");
    cmd->add_option("--twin-prob", twin_prob, "chance a claimant copies an earlier one");
    cmd->add_option("--den-bound", den_bound, "denominator bound for generated amounts");
    cmd->add_option("--claim-lo", claim_lo, "smallest generated claim");
    cmd->add_option("--claim-hi", claim_hi, "largest generated claim");
  };

  CLI::App* solve = app.add_subcommand("solve", "compute an allocation");
  solve->add_option("-i,--input", input, "problem document")->required();
  solve->add_option("-o,--output", output, "write the result here instead of stdout");
  solve->add_option("--rule", rule_name,
                    "cpa|prop|null|priority|two-phase|two-step|cea");
  solve->add_option("--order", order_csv, "claimant order for --rule priority");
  solve->add_flag("--trace", want_trace, "emit the full step trace (cpa)");
  solve->add_flag("--normalize", want_normalize, "drop non-binding issues first");

  CLI::App* check = app.add_subcommand("check", "test an axiom against a rule");
  check->add_option("-i,--input", input, "check this single problem document");
  check->add_option("--replay", replay_path, "re-verify a recorded witness document");
  check->add_option("-o,--output", output, "write the verdict here instead of stdout");
  check->add_option("--rule", rule_name, "rule under test");
  check->add_option("--order", order_csv, "claimant order for --rule priority");
  check->add_option("--axiom", axiom, "peff|ete|gma|cons|nms|nmrm");
  check->add_option("--budget", budget, "fuzz trials when no input is given");
  check->add_option("--seed", seed, "seed for sampling and fuzzing");
  check->add_flag("--serial", serial, "use the serial reference loop");
  add_gen_flags(check);

  CLI::App* reduce = app.add_subcommand("reduce", "remove claimants with their awards");
  reduce->add_option("-i,--input", input, "problem document")->required();
  reduce->add_option("-o,--output", output, "output path");
  reduce->add_option("--keep", keep_csv, "claimants that stay")->required();
  reduce->add_option("--rule", rule_name, "rule providing the awards (default cpa)");
  reduce->add_option("--order", order_csv, "claimant order for --rule priority");

  CLI::App* split = app.add_subcommand("split", "split one claimant into parts");
  split->add_option("-i,--input", input, "problem document")->required();
  split->add_option("-o,--output", output, "output path");
  split->add_option("--target", target, "claimant to split")->required();
  split->add_option("--parts", parts_csv, "id=claim,id=claim,... summing to the claim")
      ->required();

  CLI::App* merge = app.add_subcommand("merge", "merge homologous claimants");
  merge->add_option("-i,--input", input, "problem document")->required();
  merge->add_option("-o,--output", output, "output path");
  merge->add_option("--sources", sources_csv, "claimants to merge")->required();
  merge->add_option("--into", into, "resulting claimant id")->required();

  CLI::App* gen = app.add_subcommand("gen", "generate a random valid problem");
  gen->add_option("-o,--output", output, "output path");
  gen->add_option("--seed", seed, "generator seed");
  add_gen_flags(gen);

  CLI::App* decompose = app.add_subcommand("decompose", "split into independent parts");
  decompose->add_option("-i,--input", input, "problem document")->required();
  decompose->add_option("-o,--output", output, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    ojson err;
    err["error"] = {{"code", "cli/bad-invocation"}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  }

  try {
    mac::GenParams gp;
    gp.claimants = parse_range(claimants_range);
    gp.issues = parse_range(issues_range);
    gp.density = density;
    gp.twin_prob = twin_prob;
    gp.den_bound = den_bound;
    gp.claim_lo = parse_rational_flag(claim_lo, "--claim-lo");
    gp.claim_hi = parse_rational_flag(claim_hi, "--claim-hi");

    if (solve->parsed())
      return run_solve(input, output, rule_name, order_csv, want_trace, want_normalize);
    if (check->parsed()) {
      if (replay_path.empty() && axiom.empty())
        throw CliError("cli/missing-axiom", "--axiom is required unless --replay is given");
      return run_check(input, replay_path, output, rule_name, order_csv, axiom,
                       budget, seed, serial, gp);
    }
    if (reduce->parsed()) return run_reduce(input, output, rule_name, order_csv, keep_csv);
    if (split->parsed()) return run_split(input, output, target, parts_csv);
    if (merge->parsed()) return run_merge(input, output, sources_csv, into);
    if (gen->parsed()) return run_gen(output, gp, seed);
    if (decompose->parsed()) return run_decompose(input, output);
  } catch (const CliError& e) {
    ojson err;
    err["error"] = {{"code", e.code}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const mac::io::SchemaError& e) {
    ojson err;
    err["error"] = {{"code", e.code()}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const mac::ValidationError& e) {
    ojson err;
    err["error"] = {{"code", "validate/invalid-problem"}, {"message", e.what()}};
    err["report"] = mac::io::report_to_json(e.report());
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    ojson err;
    err["error"] = {{"code", "cli/bad-request"}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
  return 0;
}
