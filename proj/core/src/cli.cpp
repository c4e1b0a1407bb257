#include "schaefer/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "schaefer/adversary.hpp"
#include "schaefer/classify.hpp"
#include "schaefer/errors.hpp"
#include "schaefer/gadget.hpp"
#include "schaefer/io.hpp"
#include "schaefer/oracle.hpp"

namespace schaefer {

namespace {

using nlohmann::json;

struct CommandContext {
  std::string command_echo;
  std::string report_mode = "text";
  json digests = json::object();
  json result = json::object();
  std::vector<std::string> text;

  void digest_input(const std::string& key, const std::string& path) {
    digests[key] = file_digest(path);
  }
  void line(const std::string& s) { text.push_back(s); }
};

std::vector<std::string> flag_names(const ConstraintFlags& f) {
  std::vector<std::string> names;
  if (f.zero_valid) names.push_back("0-valid");
  if (f.one_valid) names.push_back("1-valid");
  if (f.weakly_positive) names.push_back("weakly-positive");
  if (f.weakly_negative) names.push_back("weakly-negative");
  if (f.linear) names.push_back("linear");
  if (f.two_cnf) names.push_back("2cnf");
  if (f.c_closed) names.push_back("c-closed");
  return names;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

json flags_to_json(const ConstraintFlags& f) {
  json j = json::object();
  j["0-valid"] = f.zero_valid;
  j["1-valid"] = f.one_valid;
  j["weakly-positive"] = f.weakly_positive;
  j["weakly-negative"] = f.weakly_negative;
  j["linear"] = f.linear;
  j["2cnf"] = f.two_cnf;
  j["c-closed"] = f.c_closed;
  return j;
}

void emit_report(const CommandContext& ctx, int status, std::ostream& out) {
  if (ctx.report_mode == "json") {
    json report = json::object();
    report["command"] = ctx.command_echo;
    report["digests"] = ctx.digests;
    report["result"] = ctx.result;
    report["status"] = status;
    out << report.dump(2) << "\n";
  } else {
    for (const std::string& line : ctx.text) out << line << "\n";
  }
}

std::string fractions_joined(const std::vector<Fraction>& fs) {
  std::vector<std::string> parts;
  parts.reserve(fs.size());
  for (const Fraction& f : fs) parts.push_back(to_string(f));
  return join(parts, " ");
}

json fractions_to_json(const std::vector<Fraction>& fs) {
  json arr = json::array();
  for (const Fraction& f : fs) arr.push_back(to_string(f));
  return arr;
}

struct CliOptions {
  int max_arity = kDefaultMaxArity;
  int n_max = kDefaultNMax;
};

int cmd_classify(CommandContext& ctx, const CliOptions& opts, const std::string& set_path) {
  ctx.digest_input("set", set_path);
  const ConstraintSet s = load_constraint_set(set_path, opts.max_arity);
  const ClassificationReport report = classify_set(s);

  json per = json::object();
  for (const auto& [name, flags] : report.per_constraint) per[name] = flags_to_json(flags);
  ctx.result["flags"] = flags_to_json(report.set_flags);
  ctx.result["per_constraint"] = per;
  ctx.result["verdict"] = report.verdict;

  ctx.line("verdict: " + report.verdict);
  ctx.line("set-flags: " + join(flag_names(report.set_flags), " "));
  for (const auto& [name, flags] : report.per_constraint) {
    ctx.line("constraint " + name + ": " + join(flag_names(flags), " "));
  }
  return kExitOk;
}

int cmd_synth(CommandContext& ctx, const CliOptions& opts, const std::string& set_path,
              const std::string& constraint_name, const std::string& family_name) {
  ctx.digest_input("set", set_path);
  const ConstraintSet s = load_constraint_set(set_path, opts.max_arity);
  const Constraint& c = s.at(constraint_name);
  const auto family = parse_clause_family(family_name);
  if (!family) throw UsageError("unknown clause family: " + family_name);

  const auto rep = synthesize_clauses(c, *family);
  ctx.result["constraint"] = constraint_name;
  ctx.result["family"] = family_name;
  ctx.result["expressible"] = rep.has_value();
  if (!rep) {
    ctx.line("constraint " + constraint_name + " is not expressible in family " + family_name);
    return kExitNegative;
  }
  json clauses = json::array();
  std::vector<std::string> rendered;
  if (*family == ClauseFamily::LinearEquation) {
    for (const LinearEquation& eq : rep->equations) rendered.push_back(to_string(eq));
  } else {
    for (const Clause& clause : rep->clauses) rendered.push_back(to_string(clause));
  }
  for (const std::string& r : rendered) clauses.push_back(r);
  ctx.result["clauses"] = clauses;
  ctx.line("constraint " + constraint_name + " in family " + family_name + ":");
  for (const std::string& r : rendered) ctx.line("  " + r);
  return kExitOk;
}

int cmd_solve(CommandContext& ctx, const CliOptions& opts, const std::string& formula_path,
              const std::string& set_path, const std::string& kappa_text,
              const std::string& sigma_text) {
  ctx.digest_input("formula", formula_path);
  ConstraintSet extra;
  const ConstraintSet* extra_ptr = nullptr;
  if (!set_path.empty()) {
    ctx.digest_input("set", set_path);
    extra = load_constraint_set(set_path, opts.max_arity);
    extra_ptr = &extra;
  }
  const Formula phi = load_formula(formula_path, extra_ptr, opts.max_arity);
  const MaxSatResult best = max_sat(phi, opts.n_max);

  const Fraction kappa = parse_fraction(kappa_text);
  const Fraction sigma = parse_fraction(sigma_text);
  CspQuery query{phi, kappa, sigma};
  const CspVerdict verdict = decide_csp(query, opts.n_max);
  const std::string verdict_name = verdict == CspVerdict::KappaSatisfiable ? "kappa-satisfiable"
                                   : verdict == CspVerdict::AtMostSigma    ? "at-most-sigma"
                                                                           : "gap-violated";

  ctx.result["max_fraction"] = to_string(best.fraction);
  ctx.result["witness"] = best.witness.to_string();
  ctx.result["kappa"] = to_string(kappa);
  ctx.result["sigma"] = to_string(sigma);
  ctx.result["verdict"] = verdict_name;

  ctx.line("max-fraction: " + to_string(best.fraction));
  ctx.line("witness: " + best.witness.to_string());
  ctx.line("verdict: " + verdict_name);
  return verdict == CspVerdict::KappaSatisfiable ? kExitOk : kExitNegative;
}

int cmd_lin_attack(CommandContext& ctx, const CliOptions& opts, const std::string& formula_path,
                   const std::string& set_path) {
  ctx.digest_input("formula", formula_path);
  ConstraintSet extra;
  const ConstraintSet* extra_ptr = nullptr;
  if (!set_path.empty()) {
    ctx.digest_input("set", set_path);
    extra = load_constraint_set(set_path, opts.max_arity);
    extra_ptr = &extra;
  }
  const Formula phi = load_formula(formula_path, extra_ptr, opts.max_arity);
  const auto solution = linear_attack(phi);
  if (!solution) {
    ctx.result["status"] = "inconsistent";
    ctx.line("inconsistent");
    return kExitNegative;
  }
  ctx.result["status"] = "solved";
  ctx.result["assignment"] = solution->to_string();
  ctx.result["fraction"] = to_string(evaluate(phi, *solution));
  ctx.line("solved");
  ctx.line("assignment: " + solution->to_string());
  return kExitOk;
}

int cmd_distance(CommandContext& ctx, const CliOptions& opts, const std::string& formula_path,
                 const std::string& set_path, const std::string& bits) {
  ctx.digest_input("formula", formula_path);
  ConstraintSet extra;
  const ConstraintSet* extra_ptr = nullptr;
  if (!set_path.empty()) {
    ctx.digest_input("set", set_path);
    extra = load_constraint_set(set_path, opts.max_arity);
    extra_ptr = &extra;
  }
  const Formula phi = load_formula(formula_path, extra_ptr, opts.max_arity);
  const Assignment a = Assignment::from_string(bits);
  const auto dist = distance_to_satisfying(phi, a, opts.n_max);
  if (!dist) {
    ctx.result["status"] = "unsatisfiable";
    ctx.line("unsatisfiable");
    return kExitNegative;
  }
  ctx.result["status"] = "ok";
  ctx.result["distance"] = to_string(*dist);
  ctx.line("distance: " + to_string(*dist));
  return kExitOk;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write file: " + path);
  out << contents;
}

int cmd_gen(CommandContext& ctx, const CliOptions& opts, const std::string& mode,
            const std::string& demo, int n, int m, std::int64_t structural_weight,
            std::int64_t aux_weight, const std::string& out_path,
            const std::string& witnesses_out, const std::string& alphas_out) {
  (void)opts;
  if (mode.empty() == demo.empty()) {
    throw UsageError("gen requires exactly one of --mode or --demo");
  }
  if (out_path.empty()) throw UsageError("gen requires --out");

  if (!mode.empty()) {
    BlockSpec spec;
    spec.block_size = n;
    spec.num_blocks = m;
    if (mode == "pairwise") {
      spec.mode = BlockMode::Pairwise;
    } else if (mode == "triplewise") {
      spec.mode = BlockMode::Triplewise;
    } else {
      throw UsageError("unknown mode: " + mode);
    }
    const OneHotFormula onehot = gen_onehot_formula(spec);
    std::ostringstream formula_text;
    write_formula(formula_text, onehot.formula);
    write_file(out_path, formula_text.str());
    if (!alphas_out.empty()) {
      std::ostringstream alpha_text;
      for (const Assignment& a : onehot.satisfying) alpha_text << a.to_string() << "\n";
      write_file(alphas_out, alpha_text.str());
    }
    ctx.result["formula"] = out_path;
    ctx.result["num_vars"] = onehot.formula.num_vars;
    ctx.result["applications"] = onehot.formula.applications.size();
    ctx.result["satisfying"] = onehot.satisfying.size();
    ctx.line("wrote " + out_path + " (" + std::to_string(onehot.formula.num_vars) +
             " vars, " + std::to_string(onehot.formula.applications.size()) +
             " applications, " + std::to_string(onehot.satisfying.size()) +
             " satisfying assignments)");
    return kExitOk;
  }

  const auto cls = parse_attack_class(demo);
  if (!cls) throw UsageError("unknown demo class: " + demo);
  AttackDemo d;
  switch (*cls) {
    case AttackClass::Linear:
      d = make_linear_demo(n, m, structural_weight, aux_weight);
      break;
    case AttackClass::WeaklyPositive:
      d = make_monotone_demo(n, m, true, structural_weight, aux_weight);
      break;
    case AttackClass::WeaklyNegative:
      d = make_monotone_demo(n, m, false, structural_weight, aux_weight);
      break;
    case AttackClass::TwoCnf:
      d = make_two_cnf_demo(n, m, structural_weight, aux_weight);
      break;
  }
  std::ostringstream formula_text;
  write_formula(formula_text, d.psi);
  write_file(out_path, formula_text.str());
  if (!witnesses_out.empty()) {
    WitnessFile wf;
    wf.base_length = d.witnesses[0].base.size();
    wf.proof_length = d.witnesses[0].proof.size();
    wf.witnesses = d.witnesses;
    std::ostringstream witness_text;
    write_witness_file(witness_text, wf);
    write_file(witnesses_out, witness_text.str());
  }
  if (!alphas_out.empty()) {
    std::ostringstream alpha_text;
    for (const Assignment& a : d.alphas) alpha_text << a.to_string() << "\n";
    write_file(alphas_out, alpha_text.str());
  }
  ctx.result["formula"] = out_path;
  ctx.result["num_vars"] = d.psi.num_vars;
  ctx.result["witnesses"] = d.witnesses.size();
  ctx.line("wrote " + out_path + " with " + std::to_string(d.witnesses.size()) +
           " witnesses for the " + demo + " demo");
  return kExitOk;
}

int cmd_attack(CommandContext& ctx, const CliOptions& opts, const std::string& class_name,
               const std::string& formula_path, const std::string& witnesses_path,
               const std::string& alphas_path, const std::string& set_path) {
  const auto cls = parse_attack_class(class_name);
  if (!cls) throw UsageError("unknown attack class: " + class_name);
  ctx.digest_input("formula", formula_path);
  ctx.digest_input("witnesses", witnesses_path);
  ConstraintSet extra;
  const ConstraintSet* extra_ptr = nullptr;
  if (!set_path.empty()) {
    ctx.digest_input("set", set_path);
    extra = load_constraint_set(set_path, opts.max_arity);
    extra_ptr = &extra;
  }
  const Formula psi = load_formula(formula_path, extra_ptr, opts.max_arity);
  const WitnessFile wf = load_witness_file(witnesses_path);
  std::vector<Assignment> alphas;
  if (!alphas_path.empty()) {
    ctx.digest_input("alphas", alphas_path);
    alphas = load_assignment_file(alphas_path);
  }

  const AttackResult result = run_attack(*cls, psi, wf.witnesses, alphas);
  ctx.result["pruned_weight_fraction"] = to_string(result.pruned_weight_fraction);
  ctx.result["satisfied_fraction_pruned"] = to_string(result.satisfied_fraction_pruned);
  ctx.result["satisfied_fraction_original"] = to_string(result.satisfied_fraction_original);
  ctx.result["bound"] = to_string(result.bound);
  ctx.result["epsilon_per_witness"] = fractions_to_json(result.epsilon_per_witness);
  ctx.result["distances"] = fractions_to_json(result.distances);
  ctx.result["combined"] = result.combined.to_string();

  ctx.line("pruned-weight-fraction: " + to_string(result.pruned_weight_fraction));
  ctx.line("satisfied-fraction-pruned: " + to_string(result.satisfied_fraction_pruned));
  ctx.line("satisfied-fraction-original: " + to_string(result.satisfied_fraction_original));
  ctx.line("bound: " + to_string(result.bound));
  ctx.line("epsilon-per-witness: " + fractions_joined(result.epsilon_per_witness));
  if (!result.distances.empty()) {
    ctx.line("distances: " + fractions_joined(result.distances));
  }
  ctx.line("combined: " + result.combined.to_string());
  return kExitOk;
}

int cmd_gadget(CommandContext& ctx, const CliOptions& opts, const std::string& target_name,
               const std::string& set_path, int max_aux, int max_apps,
               const std::string& out_path) {
  ctx.digest_input("set", set_path);
  const ConstraintSet full_set = load_constraint_set(set_path, opts.max_arity);
  const Constraint target = full_set.at(target_name);
  std::vector<Constraint> base;
  for (const Constraint& c : full_set.constraints) {
    if (c.name != target_name) base.push_back(c);
  }
  if (base.empty()) {
    throw UsageError("the set must contain at least one constraint besides the target");
  }
  const ConstraintSet s = make_constraint_set(std::move(base));

  const auto found = search_gadget(target, s, max_aux, max_apps, opts.n_max);
  ctx.result["target"] = target_name;
  ctx.result["found"] = found.has_value();
  if (!found) {
    ctx.line("no gadget within max-aux " + std::to_string(max_aux) + ", max-apps " +
             std::to_string(max_apps));
    return kExitNegative;
  }
  std::ostringstream text;
  write_gadget(text, *found);
  ctx.result["aux"] = found->aux_count;
  ctx.result["gadget"] = text.str();
  if (!out_path.empty()) write_file(out_path, text.str());
  std::istringstream lines(text.str());
  std::string line;
  while (std::getline(lines, line)) ctx.line(line);
  return kExitOk;
}

int cmd_reduce(CommandContext& ctx, const CliOptions& opts, const std::string& formula_path,
               const std::string& set_path, const std::string& library_dir,
               const std::string& out_path) {
  ctx.digest_input("formula", formula_path);
  ctx.digest_input("set", set_path);
  const Formula phi = load_formula(formula_path, nullptr, opts.max_arity);
  const ConstraintSet s = load_constraint_set(set_path, opts.max_arity);

  std::vector<std::string> gadget_paths;
  for (const auto& entry : std::filesystem::directory_iterator(library_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".gadget") {
      gadget_paths.push_back(entry.path().string());
    }
  }
  std::sort(gadget_paths.begin(), gadget_paths.end());
  if (gadget_paths.empty()) {
    throw UsageError("no .gadget files in library directory: " + library_dir);
  }
  std::vector<Gadget> library;
  for (const std::string& path : gadget_paths) {
    ctx.digest_input("library/" + std::filesystem::path(path).filename().string(), path);
    library.push_back(load_gadget(path, opts.max_arity));
  }

  const Formula reduced = reduce_3sat(phi, s, library);
  std::ostringstream text;
  write_formula(text, reduced);
  if (out_path.empty()) {
    std::istringstream lines(text.str());
    std::string line;
    while (std::getline(lines, line)) ctx.line(line);
  } else {
    write_file(out_path, text.str());
    ctx.line("wrote " + out_path);
  }
  ctx.result["num_vars"] = reduced.num_vars;
  ctx.result["applications"] = reduced.applications.size();
  if (!out_path.empty()) ctx.result["out"] = out_path;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean constraint-set classifier and proximity-proof adversary toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  CliOptions opts;
  app.add_option("--max-arity", opts.max_arity, "Constraint arity limit")
      ->capture_default_str();
  app.add_option("--n-max", opts.n_max, "Brute-force enumeration variable limit")
      ->capture_default_str();

  std::string report_mode = "text";
  const auto add_report = [&](CLI::App* sub) {
    sub->add_option("--report", report_mode, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Classify a constraint set");
  std::string set_path;
  classify_cmd->add_option("--set", set_path, "Constraint set file (.cset)")->required();
  add_report(classify_cmd);

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize a clause representation");
  std::string synth_set, synth_constraint, synth_family;
  synth_cmd->add_option("--set", synth_set, "Constraint set file (.cset)")->required();
  synth_cmd->add_option("--constraint", synth_constraint, "Constraint name")->required();
  synth_cmd
      ->add_option("--family", synth_family,
                   "Clause family: horn, dual-horn, two-clause, linear-equation")
      ->required();
  add_report(synth_cmd);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Brute-force max-sat / gap decision");
  std::string solve_formula, solve_set, kappa_text = "1", sigma_text = "0";
  solve_cmd->add_option("--formula", solve_formula, "Formula file (.cfr)")->required();
  solve_cmd->add_option("--set", solve_set, "Additional constraint set file");
  solve_cmd->add_option("--kappa", kappa_text, "Satisfiability threshold")
      ->capture_default_str();
  solve_cmd->add_option("--sigma", sigma_text, "Soundness threshold")->capture_default_str();
  add_report(solve_cmd);

  // lin-attack
  auto* lin_cmd = app.add_subcommand("lin-attack", "GF(2) elimination over a linear formula");
  std::string lin_formula, lin_set;
  lin_cmd->add_option("--formula", lin_formula, "Formula file (.cfr)")->required();
  lin_cmd->add_option("--set", lin_set, "Additional constraint set file");
  add_report(lin_cmd);

  // distance
  auto* dist_cmd = app.add_subcommand("distance", "Distance to the nearest satisfying assignment");
  std::string dist_formula, dist_set, dist_bits;
  dist_cmd->add_option("--formula", dist_formula, "Formula file (.cfr)")->required();
  dist_cmd->add_option("--assignment", dist_bits, "0/1 assignment string")->required();
  dist_cmd->add_option("--set", dist_set, "Additional constraint set file");
  add_report(dist_cmd);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate counterexample formulas and demos");
  std::string gen_mode, gen_demo, gen_out, gen_witnesses_out, gen_alphas_out;
  int gen_n = 1, gen_m = 3;
  std::int64_t gen_structural = 1, gen_aux = 1;
  gen_cmd->add_option("--mode", gen_mode, "One-hot formula mode: pairwise or triplewise");
  gen_cmd->add_option("--demo", gen_demo,
                      "Attack demo class: linear, weakly-positive, weakly-negative, 2cnf");
  gen_cmd->add_option("--n", gen_n, "Block size")->capture_default_str();
  gen_cmd->add_option("--m", gen_m, "Block count")->capture_default_str();
  gen_cmd->add_option("--structural-weight", gen_structural, "Weight of structural applications")
      ->capture_default_str();
  gen_cmd->add_option("--aux-weight", gen_aux, "Weight of per-witness link applications")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output formula file")->required();
  gen_cmd->add_option("--witnesses-out", gen_witnesses_out, "Output witness file (demos)");
  gen_cmd->add_option("--alphas-out", gen_alphas_out, "Output assignment file");
  add_report(gen_cmd);

  // attack
  auto* attack_cmd = app.add_subcommand("attack", "Run a pruning/combination attack");
  std::string attack_class, attack_formula, attack_witnesses, attack_alphas, attack_set;
  attack_cmd->add_option("--class", attack_class,
                         "linear, weakly-positive, weakly-negative, or 2cnf")
      ->required();
  attack_cmd->add_option("--formula", attack_formula, "Formula file (.cfr)")->required();
  attack_cmd->add_option("--witnesses", attack_witnesses, "Witness file")->required();
  attack_cmd->add_option("--alphas", attack_alphas, "Assignment file for distance reporting");
  attack_cmd->add_option("--set", attack_set, "Additional constraint set file");
  add_report(attack_cmd);

  // gadget
  auto* gadget_cmd = app.add_subcommand("gadget", "Search for a perfect gadget");
  std::string gadget_target, gadget_set, gadget_out;
  int gadget_max_aux = 0, gadget_max_apps = 1;
  gadget_cmd->add_option("--target", gadget_target, "Target constraint name (within --set)")
      ->required();
  gadget_cmd->add_option("--set", gadget_set, "Constraint set file holding target and base set")
      ->required();
  gadget_cmd->add_option("--max-aux", gadget_max_aux, "Auxiliary variable budget")->required();
  gadget_cmd->add_option("--max-apps", gadget_max_apps, "Application budget")->required();
  gadget_cmd->add_option("--out", gadget_out, "Write the gadget file here");
  add_report(gadget_cmd);

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "Compile a clause formula through gadgets");
  std::string reduce_formula, reduce_set, reduce_library, reduce_out;
  reduce_cmd->add_option("--formula", reduce_formula, "Formula file (.cfr)")->required();
  reduce_cmd->add_option("--set", reduce_set, "Target constraint set file")->required();
  reduce_cmd->add_option("--library", reduce_library, "Directory of .gadget files")->required();
  reduce_cmd->add_option("--out", reduce_out, "Output formula file");
  add_report(reduce_cmd);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  CommandContext ctx;
  ctx.command_echo = join(args, " ");
  ctx.report_mode = report_mode;

  try {
    int status = kExitUsage;
    if (classify_cmd->parsed()) {
      status = cmd_classify(ctx, opts, set_path);
    } else if (synth_cmd->parsed()) {
      status = cmd_synth(ctx, opts, synth_set, synth_constraint, synth_family);
    } else if (solve_cmd->parsed()) {
      status = cmd_solve(ctx, opts, solve_formula, solve_set, kappa_text, sigma_text);
    } else if (lin_cmd->parsed()) {
      status = cmd_lin_attack(ctx, opts, lin_formula, lin_set);
    } else if (dist_cmd->parsed()) {
      status = cmd_distance(ctx, opts, dist_formula, dist_set, dist_bits);
    } else if (gen_cmd->parsed()) {
      status = cmd_gen(ctx, opts, gen_mode, gen_demo, gen_n, gen_m, gen_structural, gen_aux,
                       gen_out, gen_witnesses_out, gen_alphas_out);
    } else if (attack_cmd->parsed()) {
      status = cmd_attack(ctx, opts, attack_class, attack_formula, attack_witnesses,
                          attack_alphas, attack_set);
    } else if (gadget_cmd->parsed()) {
      status = cmd_gadget(ctx, opts, gadget_target, gadget_set, gadget_max_aux, gadget_max_apps,
                          gadget_out);
    } else if (reduce_cmd->parsed()) {
      status = cmd_reduce(ctx, opts, reduce_formula, reduce_set, reduce_library, reduce_out);
    }
    emit_report(ctx, status, out);
    return status;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitNegative;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace schaefer
