#include "g2lyap/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "g2lyap/hodge_formulas.hpp"
#include "g2lyap/root_g2.hpp"
#include "g2lyap/serialization.hpp"

namespace g2lyap {

namespace {

std::unique_ptr<CLI::App> build_app(RunConfig& rc) {
  auto app = std::make_unique<CLI::App>("Lyapunov spectra of matrix cocycles with exact "
                                        "certification of invariant tensors");
  app->name("g2lyap");
  app->require_subcommand(1);
  app->set_config("--config", "", "Read defaults from a config file (flags win)");
  app->allow_config_extras(CLI::config_extras_mode::error);
  app->fallthrough();  // global flags may appear before the subcommand

  app->add_option("--out-dir", rc.out_dir, "Artifact directory (default: $G2LYAP_OUT_DIR or .)");
  app->add_option("--out", rc.out_json, "JSON artifact path (overrides --out-dir naming)");
  app->add_option("--csv", rc.out_csv, "CSV artifact path (overrides --out-dir naming)");

  auto add_dataset_flags = [&](CLI::App* sub) {
    sub->add_option("--dataset", rc.dataset, "Builtin dataset name")->capture_default_str();
    sub->add_option("--file", rc.dataset_file, "Dataset JSON file (overrides --dataset)");
    sub->add_flag("--fallback", rc.fallback, "Run on the unipotent-generator subgroup");
  };
  auto add_walk_flags = [&](CLI::App* sub) {
    sub->add_option("--steps", rc.walk.steps, "Total walk steps across all blocks")
        ->capture_default_str();
    sub->add_option("--blocks", rc.walk.blocks, "Independent restart blocks")
        ->capture_default_str();
    sub->add_option("--seed", rc.walk.master_seed, "Master seed")->capture_default_str();
    sub->add_option("--walk", rc.walk_kind_text, "Walk kind")
        ->check(CLI::IsMember({"iid-uniform", "non-backtracking"}))
        ->capture_default_str();
    sub->add_option("--renorm-interval", rc.walk.renorm_interval, "Steps between QR passes")
        ->capture_default_str();
    sub->add_option("--burn-in", rc.walk.burn_in, "Discarded steps per block")
        ->capture_default_str();
    sub->add_flag("--no-inverses", rc.no_inverses,
                  "Walk over the generators only, without inverses");
    sub->add_option("--policy", rc.policy, "Block execution: serial | openmp | auto")
        ->check(CLI::IsMember({"serial", "openmp", "auto"}))
        ->capture_default_str();
    sub->add_option("--tol-sigma", rc.tol_sigma, "Diagnostic tolerance in standard errors")
        ->capture_default_str();
  };

  app->add_subcommand("datasets", "List the builtin datasets");

  auto* verify = app->add_subcommand("verify", "Certify invariant tensors of a dataset exactly");
  add_dataset_flags(verify);
  verify->add_option("--relations", rc.relations_max_len,
                     "Search words up to this length that multiply to +-identity (0 = skip)")
      ->capture_default_str();

  auto* predict = app->add_subcommand(
      "predict", "Spectrum of a representation from a chamber vector, exactly");
  predict->add_option("--gamma", rc.gamma, "Chamber vector g1,g2,g3 (rationals, sum 0)")
      ->required();
  predict->add_option("--rep", rc.rep, "standard | adjoint")->capture_default_str();

  auto* recover = app->add_subcommand(
      "recover", "Chamber vector from the three nonnegative standard exponents");
  recover->add_option("--exponents", rc.exponents, "a,b,c with a >= b >= c >= 0 and a = b + c")
      ->required();
  recover->add_option("--tol", rc.recover_tol, "Additivity slack for float input")
      ->capture_default_str();

  auto* estimate = app->add_subcommand("estimate", "Monte Carlo spectrum with diagnostics");
  add_dataset_flags(estimate);
  add_walk_flags(estimate);

  auto* fest = app->add_subcommand(
      "functor-estimate", "Coupled spectra of functor images over one word stream");
  add_dataset_flags(fest);
  add_walk_flags(fest);
  fest->add_option("--functors", rc.functors,
                   "Comma list: identity | dual | ext:k | sym:k | tensor(a,b) | sum(a;...)")
      ->capture_default_str();

  auto* formula = app->add_subcommand("formula",
                                      "Exact Hodge-theoretic predictions and comparisons");
  formula->add_option("--genus", rc.genus, "Base curve genus");
  formula->add_option("--punctures", rc.punctures, "Number of punctures");
  formula->add_option("--degree", rc.degree, "Hodge bundle degree, exact rational");
  formula->add_option("--profile", rc.profile, "VHS profile: 'g2' or a JSON file");
  formula->add_option("--k", rc.top_k, "How many top exponents the sum covers")
      ->capture_default_str();
  formula->add_option("--rank", rc.rank, "Local system rank (shape mode)");
  formula->add_option("--signature", rc.signature_pq, "p,q of the invariant form (shape mode)");
  formula->add_flag("--weight1", rc.weight1, "Weight-1 symplectic shape");
  formula->add_option("--set-degree", rc.set_degrees,
                      "Attach label=p/q degrees to the profile (repeatable)");
  formula->add_option("--estimate", rc.estimate_file, "Saved estimation JSON to compare against");
  formula->add_option("--scale", rc.scale, "Walk-time to formula-time scale")
      ->capture_default_str();

  return app;
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::error_code ec;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "warning: cannot write artifact " << path << "\n";
    return;
  }
  f << content;
}

std::string artifact_dir(const RunConfig& rc) {
  if (!rc.out_dir.empty()) return rc.out_dir;
  if (const char* env = std::getenv("G2LYAP_OUT_DIR"); env && *env) return env;
  return ".";
}

// Prints the artifact to out and writes the JSON (and optional CSV) files.
void emit(const RunConfig& rc, nlohmann::json payload, const std::string& csv, std::ostream& out,
          std::ostream& err) {
  payload["timestamp"] = timestamp_utc();
  const std::string text = payload.dump(2) + "\n";
  out << text;
  const std::string stem = artifact_dir(rc) + "/g2lyap-" + rc.subcommand;
  write_file(rc.out_json.empty() ? stem + ".json" : rc.out_json, text, err);
  if (!csv.empty()) write_file(rc.out_csv.empty() ? stem + ".csv" : rc.out_csv, csv, err);
}

CocycleGenerators load_for(const RunConfig& rc) {
  CocycleGenerators gens = rc.dataset_file.empty() ? load_builtin(rc.dataset)
                                                   : load_dataset_file(rc.dataset_file);
  if (rc.fallback) gens = fallback_subgroup(gens);
  return gens;
}

ExecutionPolicy policy_of(const RunConfig& rc) {
  if (rc.policy == "serial") return ExecutionPolicy::serial;
  if (rc.policy == "openmp") return ExecutionPolicy::openmp;
  return ExecutionPolicy::automatic;
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<Rational> parse_rational_list(const std::string& text, std::size_t want,
                                          const std::string& what) {
  const auto parts = split_top_level(text, ',');
  if (parts.size() != want)
    throw UsageError(what + ": expected " + std::to_string(want) + " comma-separated values");
  std::vector<Rational> out;
  for (const auto& p : parts) out.push_back(parse_rational(p));
  return out;
}

bool looks_float(const std::string& text) {
  return text.find_first_of(".eE") != std::string::npos;
}

SpectrumHints hints_for(const VerificationReport& report) {
  SpectrumHints h;
  h.expect_symmetry = report.certified;
  h.expect_zero = report.certified && report.dim % 2 == 1;
  h.expect_g2_additivity = report.certified && report.dim == 7;
  return h;
}

int run_datasets(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& name : builtin_dataset_names()) {
    const CocycleGenerators gens = load_builtin(name);
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& [label, m] : gens.generators) labels.push_back(label);
    list.push_back({{"name", gens.name},
                    {"dim", gens.dim},
                    {"generators", std::move(labels)},
                    {"checksum", checksum_hex(gens.checksum)},
                    {"genus", gens.metadata.genus},
                    {"punctures", gens.metadata.punctures},
                    {"hodge_numbers", gens.metadata.hodge_numbers}});
  }
  emit(rc, {{"datasets", std::move(list)}}, "", out, err);
  return 0;
}

int run_verify(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const CocycleGenerators gens = load_for(rc);
  const VerificationReport report = verify_invariance(gens, rc.relations_max_len);
  emit(rc, {{"report", to_json(report)}}, "", out, err);
  return report.certified ? 0 : 1;
}

int run_predict(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const auto g = parse_rational_list(rc.gamma, 3, "--gamma");
  const LyapunovVector gamma(g[0], g[1], g[2]);
  const Representation rep = representation_weights(rc.rep);
  const std::vector<Rational> spectrum = predict_spectrum(rep, gamma);
  nlohmann::json spec_exact = nlohmann::json::array();
  nlohmann::json spec_float = nlohmann::json::array();
  for (const auto& v : spectrum) {
    spec_exact.push_back(rational_to_string(v));
    spec_float.push_back(rational_to_double(v));
  }
  nlohmann::json payload{{"rep", rep.name},
                         {"gamma", {rational_to_string(g[0]), rational_to_string(g[1]),
                                    rational_to_string(g[2])}},
                         {"spectrum", std::move(spec_exact)},
                         {"spectrum_float", std::move(spec_float)}};
  emit(rc, std::move(payload), "", out, err);
  return 0;
}

int run_recover(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const auto parts = split_top_level(rc.exponents, ',');
  if (parts.size() != 3) throw UsageError("--exponents: expected a,b,c");
  const bool any_float =
      std::any_of(parts.begin(), parts.end(), [](const std::string& p) { return looks_float(p); });
  LyapunovVector gamma = LyapunovVector::zero();
  if (any_float) {
    gamma = recover_lyapunov_vector(std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2]),
                                    rc.recover_tol);
  } else {
    gamma = recover_lyapunov_vector(parse_rational(parts[0]), parse_rational(parts[1]),
                                    parse_rational(parts[2]));
  }
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& c : gamma.coords()) coords.push_back(rational_to_string(c));
  emit(rc, {{"gamma", std::move(coords)}}, "", out, err);
  return 0;
}

int run_estimate(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const CocycleGenerators gens = load_for(rc);
  const VerificationReport report = verify_invariance(gens, 0);
  const EstimationResult result = estimate_exponents(gens, rc.walk, policy_of(rc));
  const DiagnosticsReport diag = analyze_spectrum(result, hints_for(report), rc.tol_sigma);
  nlohmann::json payload{{"result", to_json(result)},
                         {"diagnostics", to_json(diag)},
                         {"certified", report.certified}};
  emit(rc, std::move(payload), estimation_csv(result), out, err);
  return diag.all_pass ? 0 : 1;
}

int run_functor_estimate(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const CocycleGenerators gens = load_for(rc);
  std::vector<FunctorSpec> specs;
  for (const auto& part : split_top_level(rc.functors, ','))
    specs.push_back(FunctorSpec::parse(part));
  const std::vector<EstimationResult> results =
      coupled_estimate(gens, specs, rc.walk, policy_of(rc));

  const EstimationResult* base = nullptr;
  for (const auto& r : results)
    if (r.functor == "identity") base = &r;

  nlohmann::json results_json = nlohmann::json::array();
  std::ostringstream csv;
  csv << "functor,index,value,std_error\n";
  csv << std::setprecision(17);
  for (const auto& r : results) {
    results_json.push_back(to_json(r));
    for (int i = 0; i < r.dim; ++i)
      csv << r.functor << ',' << i << ',' << r.exponents[i] << ',' << r.std_errors[i] << '\n';
  }

  bool all_pass = true;
  nlohmann::json comparisons = nlohmann::json::array();
  for (const auto& r : results) {
    if (&r == base || base == nullptr) continue;
    if (r.functor == "dual") {
      const SpectrumComparison cmp = compare_dual(*base, r, rc.tol_sigma);
      all_pass = all_pass && cmp.pass;
      comparisons.push_back(to_json(cmp));
    } else if (r.functor == "ext:2") {
      const SpectrumComparison cmp = compare_exterior_square(*base, r, rc.tol_sigma);
      all_pass = all_pass && cmp.pass;
      comparisons.push_back(to_json(cmp));
    }
  }

  emit(rc, {{"results", std::move(results_json)}, {"comparisons", std::move(comparisons)}},
       csv.str(), out, err);
  return all_pass ? 0 : 1;
}

VHSProfile profile_for(const RunConfig& rc) {
  VHSProfile profile;
  if (rc.profile == "g2") {
    profile = g2_vhs_profile();
  } else {
    std::ifstream in(rc.profile);
    if (!in) throw UsageError("cannot open profile '" + rc.profile + "'");
    nlohmann::json j;
    in >> j;
    profile = profile_from_json(j);
  }
  for (const auto& assignment : rc.set_degrees) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("--set-degree expects label=p/q, got '" + assignment + "'");
    profile.degrees[assignment.substr(0, eq)] = parse_rational(assignment.substr(eq + 1));
  }
  return profile;
}

int run_formula(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  if (!rc.estimate_file.empty()) {
    if (rc.profile.empty())
      throw UsageError("formula --estimate needs --profile and --k for the prediction");
    const VHSProfile profile = profile_for(rc);
    const FormulaPrediction pred = conjecture_prediction(profile, rc.top_k);
    std::ifstream in(rc.estimate_file);
    if (!in) throw UsageError("cannot open estimate '" + rc.estimate_file + "'");
    nlohmann::json j;
    in >> j;
    const EstimationResult estimate = estimation_result_from_json(j);
    const PredictionComparison cmp = compare_prediction(pred, estimate, rc.scale, rc.tol_sigma);
    emit(rc,
         {{"profile", to_json(profile)}, {"prediction", to_json(pred)},
          {"comparison", to_json(cmp)}},
         "", out, err);
    return cmp.consistent ? 0 : 1;
  }
  if (!rc.profile.empty()) {
    const VHSProfile profile = profile_for(rc);
    const FormulaPrediction pred = conjecture_prediction(profile, rc.top_k);
    emit(rc, {{"profile", to_json(profile)}, {"prediction", to_json(pred)}}, "", out, err);
    return 0;
  }
  if (rc.rank > 0) {
    SpectrumShape shape;
    if (rc.weight1) {
      shape = spectrum_shape_weight1(rc.rank);
    } else {
      if (rc.signature_pq.empty()) throw UsageError("formula --rank needs --signature or --weight1");
      const auto pq = split_top_level(rc.signature_pq, ',');
      if (pq.size() != 2) throw UsageError("--signature: expected p,q");
      shape = spectrum_shape(rc.rank, std::stoi(pq[0]), std::stoi(pq[1]));
    }
    emit(rc,
         {{"shape", {{"positive", shape.positive}, {"zero", shape.zero},
                     {"negative", shape.negative}}}},
         "", out, err);
    return 0;
  }
  if (!rc.degree.empty()) {
    const Rational sum = kontsevich_sum(rc.genus, rc.punctures, parse_rational(rc.degree));
    emit(rc,
         {{"genus", rc.genus}, {"punctures", rc.punctures}, {"degree", rc.degree},
          {"sum", rational_to_string(sum)}, {"sum_float", rational_to_double(sum)}},
         "", out, err);
    return 0;
  }
  throw UsageError(
      "formula: pick a mode via --degree (sum), --profile (conjecture), --rank (shape), "
      "or --estimate (comparison)");
}

void resolve(RunConfig& rc, const CLI::App& app) {
  rc.subcommand = app.get_subcommands().front()->get_name();
  rc.walk.walk_kind = rc.walk_kind_text == "iid-uniform" ? WalkKind::iid_uniform
                                                         : WalkKind::non_backtracking;
  rc.walk.use_inverses = !rc.no_inverses;
}

}  // namespace

RunConfig parse_run_config(const std::vector<std::string>& args) {
  RunConfig rc;
  auto app = build_app(rc);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app->parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  resolve(rc, *app);
  return rc;
}

int execute(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  if (rc.subcommand == "datasets") return run_datasets(rc, out, err);
  if (rc.subcommand == "verify") return run_verify(rc, out, err);
  if (rc.subcommand == "predict") return run_predict(rc, out, err);
  if (rc.subcommand == "recover") return run_recover(rc, out, err);
  if (rc.subcommand == "estimate") return run_estimate(rc, out, err);
  if (rc.subcommand == "functor-estimate") return run_functor_estimate(rc, out, err);
  if (rc.subcommand == "formula") return run_formula(rc, out, err);
  throw UsageError("unknown subcommand '" + rc.subcommand + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  auto app = build_app(rc);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app->parse(reversed);
    resolve(rc, *app);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = app.get();
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    out << target->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app->help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    return execute(rc, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace g2lyap
