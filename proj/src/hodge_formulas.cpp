#include "g2lyap/hodge_formulas.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace g2lyap {

int VHSProfile::rank() const {
  return std::accumulate(hodge_numbers.begin(), hodge_numbers.end(), 0);
}

int VHSProfile::filtration_dim(int j) const {
  // hodge_numbers[i] = h^{n-i, i}, so p >= j means i <= n - j
  int total = 0;
  for (int i = 0; i <= weight - j && i < static_cast<int>(hodge_numbers.size()); ++i)
    total += hodge_numbers[i];
  return total;
}

void VHSProfile::validate() const {
  if (weight < 1) throw std::invalid_argument("VHSProfile: weight must be >= 1");
  if (static_cast<int>(hodge_numbers.size()) != weight + 1)
    throw std::invalid_argument("VHSProfile: need weight+1 Hodge numbers");
  for (int h : hodge_numbers)
    if (h < 0) throw std::invalid_argument("VHSProfile: negative Hodge number");
  for (std::size_t i = 0; i < hodge_numbers.size(); ++i)
    if (hodge_numbers[i] != hodge_numbers[hodge_numbers.size() - 1 - i])
      throw std::invalid_argument("VHSProfile: Hodge numbers must satisfy h^{p,q} = h^{q,p}");
  if (rank() < 1) throw std::invalid_argument("VHSProfile: rank must be positive");
  if (genus < 0 || punctures < 0)
    throw std::invalid_argument("VHSProfile: genus and punctures must be nonnegative");
}

VHSProfile g2_vhs_profile() {
  VHSProfile p;
  p.weight = 2;
  p.hodge_numbers = {2, 3, 2};
  p.genus = 0;
  p.punctures = 4;
  return p;
}

Rational kontsevich_sum(int genus, int punctures, const Rational& degree) {
  const int denom = 2 * genus - 2 + punctures;
  if (denom <= 0)
    throw std::domain_error("kontsevich_sum: non-hyperbolic base (2*genus - 2 + punctures <= 0)");
  Rational out = Rational(2) * degree / Rational(denom);
  out.canonicalize();
  return out;
}

std::string branch_name(FormulaBranch b) {
  switch (b) {
    case FormulaBranch::full_f:
      return "full-F";
    case FormulaBranch::truncated_h_n0:
      return "truncated-H^{n,0}";
    case FormulaBranch::not_applicable:
      return "not-applicable";
  }
  throw std::logic_error("branch_name: unreachable");
}

std::string FormulaPrediction::describe() const {
  if (branch == FormulaBranch::not_applicable) return "no formula claimed";
  if (value) return rational_to_string(*value);
  return rational_to_string(coefficient) + " * deg(" + bundle + ")";
}

namespace {

std::optional<Rational> lookup_degree(const VHSProfile& profile, const std::string& label,
                                      const std::string& alias) {
  auto it = profile.degrees.find(label);
  if (it == profile.degrees.end() && !alias.empty()) it = profile.degrees.find(alias);
  if (it == profile.degrees.end()) return std::nullopt;
  return it->second;
}

}  // namespace

FormulaPrediction conjecture_prediction(const VHSProfile& profile, int k) {
  profile.validate();
  const int n = profile.weight;
  const int half_up = (n + 1) / 2;
  const int dim_f = profile.filtration_dim(half_up);
  const int d_top = profile.hodge_numbers.front();  // dim H^{n,0}
  if (k < 1 || k > profile.rank() / 2)
    throw std::invalid_argument("conjecture_prediction: k must lie in [1, rank/2]");

  FormulaPrediction pred;
  if (k == dim_f) {
    pred.branch = FormulaBranch::full_f;
    pred.k_used = k;
    pred.bundle = "F^" + std::to_string(half_up);
    pred.coefficient = kontsevich_sum(profile.genus, profile.punctures, Rational(1));
    const std::string alias =
        n == 1 ? "H^{1,0}" : "";  // weight 1: F^1 and H^{1,0} are the same bundle
    if (auto deg = lookup_degree(profile, pred.bundle, alias)) {
      Rational v = pred.coefficient * *deg;
      v.canonicalize();
      pred.value = v;
    }
  } else if ((k > d_top && k < dim_f) || (k == d_top && d_top == 1)) {
    pred.branch = FormulaBranch::truncated_h_n0;
    pred.k_used = d_top;  // the formula sums only the top d exponents
    pred.bundle = "H^{" + std::to_string(n) + ",0}";
    pred.coefficient = kontsevich_sum(profile.genus, profile.punctures, Rational(1));
    if (auto deg = lookup_degree(profile, pred.bundle, "F^" + std::to_string(n))) {
      Rational v = pred.coefficient * *deg;
      v.canonicalize();
      pred.value = v;
    }
  } else {
    pred.branch = FormulaBranch::not_applicable;
    pred.k_used = k;
  }
  return pred;
}

SpectrumShape spectrum_shape(int rank, int p, int q) {
  if (rank < 1 || p < 0 || q < 0 || p + q != rank)
    throw std::invalid_argument("spectrum_shape: signature inconsistent with rank");
  SpectrumShape s;
  s.positive = std::min(p, q);
  s.zero = std::abs(p - q);
  s.negative = std::min(p, q);
  return s;
}

SpectrumShape spectrum_shape_weight1(int rank) {
  if (rank < 2 || rank % 2 != 0)
    throw std::invalid_argument("spectrum_shape_weight1: symplectic rank must be even");
  SpectrumShape s;
  s.positive = rank / 2;
  s.zero = 0;
  s.negative = rank / 2;
  return s;
}

PredictionComparison compare_prediction(const FormulaPrediction& prediction,
                                        const EstimationResult& estimate, double scale,
                                        double tol_sigma) {
  if (prediction.branch == FormulaBranch::not_applicable)
    throw std::invalid_argument("compare_prediction: the prediction claims no formula");
  if (!prediction.value)
    throw std::invalid_argument(
        "compare_prediction: symbolic prediction; supply the bundle degree in the profile");
  if (scale <= 0) throw std::invalid_argument("compare_prediction: scale must be positive");
  if (tol_sigma <= 0) throw std::invalid_argument("compare_prediction: tol_sigma must be positive");
  const int k = prediction.k_used;
  if (k > estimate.dim)
    throw std::invalid_argument("compare_prediction: prediction sums more exponents than exist");

  double top_sum = 0.0;
  for (int i = 0; i < k; ++i) top_sum += estimate.exponents[i];

  // SE of the top-k sum from per-block sums (the blocks are independent)
  const int blocks = static_cast<int>(estimate.block_estimates.size());
  double se = 0.0;
  if (blocks > 1) {
    std::vector<double> block_sums(blocks, 0.0);
    for (int b = 0; b < blocks; ++b)
      for (int i = 0; i < k; ++i) block_sums[b] += estimate.block_estimates[b][i];
    const double mean = std::accumulate(block_sums.begin(), block_sums.end(), 0.0) / blocks;
    double var = 0.0;
    for (double s : block_sums) var += (s - mean) * (s - mean);
    se = std::sqrt(var / (static_cast<double>(blocks) * (blocks - 1)));
  }

  PredictionComparison cmp;
  cmp.predicted = rational_to_double(*prediction.value);
  cmp.scaled_estimate = scale * top_sum;
  cmp.std_error = scale * se;
  cmp.defect = std::abs(cmp.scaled_estimate - cmp.predicted);
  const double tol = std::max(tol_sigma * cmp.std_error, 1e-12);
  cmp.zscore = cmp.defect / std::max(cmp.std_error, 1e-12 / tol_sigma);
  cmp.consistent = cmp.defect <= tol;
  return cmp;
}

}  // namespace g2lyap
