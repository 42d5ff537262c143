#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "g2lyap/cocycle_engine.hpp"

namespace g2lyap {

// Everything a CLI invocation pins down. One subcommand per run.
struct RunConfig {
  std::string subcommand;

  // dataset selection (verify / estimate / functor-estimate)
  std::string dataset = "g2-elliptic-surface";
  std::string dataset_file;  // overrides the builtin name when set
  int relations_max_len = 4;
  bool fallback = false;  // replace the dataset by its unipotent subgroup

  WalkConfig walk;
  // raw CLI text, folded into walk by parse_run_config
  std::string walk_kind_text = "non-backtracking";
  bool no_inverses = false;
  std::string policy = "auto";  // serial | openmp | auto
  double tol_sigma = 3.0;

  std::string functors = "identity,ext:2,dual";

  // predict / recover
  std::string gamma;      // "g1,g2,g3"
  std::string rep = "standard";
  std::string exponents;  // "a,b,c"
  double recover_tol = 1e-9;

  // formula
  int genus = 0;
  int punctures = 0;
  std::string degree;   // exact rational text
  std::string profile;  // "g2" or a JSON file path
  int top_k = 1;
  int rank = 0;
  std::string signature_pq;  // "p,q"
  bool weight1 = false;
  std::vector<std::string> set_degrees;  // label=p/q
  std::string estimate_file;
  double scale = 1.0;

  // artifacts
  std::string out_dir;  // default: $G2LYAP_OUT_DIR or "."
  std::string out_json;
  std::string out_csv;
};

// Thrown for malformed command lines; run_cli turns it into exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parses flags (and an optional --config file; flags win, unknown keys are
// rejected). Throws UsageError on anything malformed.
RunConfig parse_run_config(const std::vector<std::string>& args);

// Runs the pipeline for the parsed config, printing the JSON artifact to out
// and writing the artifact files. Returns 0 on success, 1 when checks fail.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full CLI entry: 0 success, 1 checks failed, 2 usage or runtime error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g2lyap
