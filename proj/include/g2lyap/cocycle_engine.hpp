#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2lyap/monodromy_dataset.hpp"
#include "g2lyap/rep_functors.hpp"
#include "g2lyap/word_stream.hpp"

namespace g2lyap {

struct WalkConfig {
  WalkKind walk_kind = WalkKind::non_backtracking;
  long long steps = 1'000'000;
  int renorm_interval = 1;
  int blocks = 20;
  std::uint64_t master_seed = 42;
  bool use_inverses = true;  // walk over generators and inverses
  long long burn_in = 1000;  // per-block discarded warm-up steps

  // Throws std::invalid_argument unless steps >= blocks >= 1, steps is
  // divisible by blocks, renorm_interval >= 1, burn_in >= 0.
  void validate() const;
};

// serial is the reference implementation; openmp runs blocks concurrently.
// Both merge block results in index order, so outputs are bit-identical.
enum class ExecutionPolicy { serial, openmp, automatic };

struct EstimationResult {
  std::string dataset;
  std::string functor;  // FunctorSpec text, "identity" for the plain cocycle
  WalkConfig config;
  std::uint64_t dataset_checksum = 0;
  int dim = 0;
  bool unit_determinant = false;  // every applied generator has det = +-1
  std::vector<double> exponents;  // sorted descending
  std::vector<double> std_errors;
  std::vector<std::vector<double>> block_estimates;  // blocks x dim, columns follow exponents
  long long steps_used = 0;
};

EstimationResult estimate_exponents(const CocycleGenerators& gens, const WalkConfig& config,
                                    ExecutionPolicy policy = ExecutionPolicy::automatic);

// One result per functor, every cocycle driven by the same per-block word
// stream so cross-representation comparisons see correlated noise. The
// identity functor is prepended when absent; result order follows the input.
std::vector<EstimationResult> coupled_estimate(const CocycleGenerators& gens,
                                               const std::vector<FunctorSpec>& functors,
                                               const WalkConfig& config,
                                               ExecutionPolicy policy = ExecutionPolicy::automatic);

struct SpectrumHints {
  bool expect_zero = false;          // dimension must be odd
  bool expect_symmetry = false;      // spectrum symmetric under negation
  bool expect_g2_additivity = false; // top positive = sum of the next two
};

struct DiagnosticCheck {
  std::string name;
  double defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct DiagnosticsReport {
  double tol_sigma = 3.0;
  std::optional<DiagnosticCheck> symmetry;    // max |l_i + l_{d+1-i}|
  std::optional<DiagnosticCheck> zero;        // |median exponent|, odd d
  int near_zero_count = -1;                   // exponents within tol_sigma SE of 0
  std::optional<DiagnosticCheck> additivity;  // |l_a - l_b - l_c|, top three positives
  std::vector<double> gap_zscores;            // consecutive positive slots / combined SE
  std::optional<DiagnosticCheck> gaps;        // smallest gap z-score vs tol_sigma
  std::optional<DiagnosticCheck> exponent_sum;  // |sum of all exponents|, det +-1 cocycles
  bool all_pass = false;
};

// Tolerances are tol_sigma * SE with an absolute floor of 1e-12 so that
// deterministic runs (SE = 0) are still checkable.
DiagnosticsReport analyze_spectrum(const EstimationResult& result, const SpectrumHints& hints,
                                   double tol_sigma);

struct SpectrumComparison {
  std::string name;
  std::vector<double> defects;  // per sorted entry
  std::vector<double> tolerances;
  double max_zscore = 0.0;
  bool pass = false;
};

// Dual spectrum should be the negated reverse of the base spectrum.
SpectrumComparison compare_dual(const EstimationResult& base, const EstimationResult& dual_result,
                                double tol_sigma);

// Exterior-square spectrum should match the pairwise sums of the base one.
SpectrumComparison compare_exterior_square(const EstimationResult& base,
                                           const EstimationResult& ext2, double tol_sigma);

}  // namespace g2lyap
