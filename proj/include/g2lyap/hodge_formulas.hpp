#pragma once

#include <map>
#include <optional>
#include <string>

#include "g2lyap/cocycle_engine.hpp"
#include "g2lyap/rational.hpp"

namespace g2lyap {

// Numerical invariants of a weight-n variation of Hodge structure over a
// punctured curve, plus optional first-Chern degrees of its Hodge bundles.
struct VHSProfile {
  int weight = 1;
  std::vector<int> hodge_numbers;  // h^{n,0}, h^{n-1,1}, ..., h^{0,n}
  int genus = 0;
  int punctures = 0;
  std::map<std::string, Rational> degrees;  // bundle label -> integral of c1

  int rank() const;
  // dim F^j = sum of h^{p,q} with p >= j
  int filtration_dim(int j) const;
  // Throws std::invalid_argument unless hodge_numbers has weight+1
  // nonnegative entries forming a palindrome with positive total.
  void validate() const;
};

// The weight-2 rank-7 profile with Hodge numbers (2,3,2) over the
// four-punctured sphere; degrees left symbolic.
VHSProfile g2_vhs_profile();

// 2 * degree / (2*genus - 2 + punctures), exact. Throws std::domain_error
// when the base is not hyperbolic (denominator <= 0).
Rational kontsevich_sum(int genus, int punctures, const Rational& degree);

enum class FormulaBranch { full_f, truncated_h_n0, not_applicable };
std::string branch_name(FormulaBranch b);

struct FormulaPrediction {
  FormulaBranch branch = FormulaBranch::not_applicable;
  int k_used = 0;          // how many top exponents the formula sums
  std::string bundle;      // label of the degree the formula consumes
  Rational coefficient{0}; // predicted sum = coefficient * deg(bundle)
  std::optional<Rational> value;  // filled when the profile carries the degree

  // "1 * deg(H^{2,0})" or the exact value when known
  std::string describe() const;
};

// Branch selection for the sum of the k largest exponents:
//   k = dim F^{ceil(n/2)}            -> full-F, bundle F^{ceil(n/2)}
//   h^{n,0} < k < dim F^{ceil(n/2)}  -> truncated, d = h^{n,0} exponents
//   k = h^{n,0} = 1                  -> truncated (top exponent alone)
//   otherwise                        -> not-applicable, nothing claimed
// Throws std::invalid_argument unless 1 <= k <= floor(rank/2).
FormulaPrediction conjecture_prediction(const VHSProfile& profile, int k);

struct SpectrumShape {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  int rank() const { return positive + zero + negative; }
  bool operator==(const SpectrumShape&) const = default;
};

// From an invariant form of signature (p, q): min(p,q) positive slots,
// |p - q| zeros, mirrored negatives. Throws on p + q != rank.
SpectrumShape spectrum_shape(int rank, int p, int q);
// Weight-1 symplectic case: rank/2 positive, no forced zero.
SpectrumShape spectrum_shape_weight1(int rank);

struct PredictionComparison {
  double predicted = 0.0;
  double scaled_estimate = 0.0;  // scale * (sum of top-k estimated exponents)
  double std_error = 0.0;        // of the scaled estimate, from block sums
  double defect = 0.0;
  double zscore = 0.0;
  bool consistent = false;
};

// Confronts a numeric prediction with an estimated spectrum. scale converts
// walk time to the prediction's time normalization and must be supplied
// explicitly. Throws std::invalid_argument on a symbolic prediction.
PredictionComparison compare_prediction(const FormulaPrediction& prediction,
                                        const EstimationResult& estimate, double scale,
                                        double tol_sigma);

}  // namespace g2lyap
