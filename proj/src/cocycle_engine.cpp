#include "g2lyap/cocycle_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace g2lyap {

namespace {

constexpr double kExactFloor = 1e-12;
constexpr double kSumTolerance = 1e-9;

double tol_for(double tol_sigma, double se) { return std::max(tol_sigma * se, kExactFloor); }

// Modified Gram-Schmidt in place; R's diagonal is nonnegative by
// construction, which pins the factorization uniquely. Accumulates
// log r_ii into acc. Throws on numerical blow-up.
void mgs_renormalize(Eigen::MatrixXd& frame, std::vector<double>& acc) {
  const int d = static_cast<int>(frame.cols());
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < j; ++i) {
      const double r = frame.col(i).dot(frame.col(j));
      frame.col(j) -= r * frame.col(i);
    }
    // squaredNorm over/underflows for entries beyond ~1e±154; fall back to the
    // rescaling norm only then so the common path stays cheap
    const double n2 = frame.col(j).squaredNorm();
    const double norm =
        (std::isfinite(n2) && n2 > 0.0) ? std::sqrt(n2) : frame.col(j).stableNorm();
    if (!std::isfinite(norm) || norm <= 0.0)
      throw std::runtime_error(
          "cocycle_engine: numerical blow-up between renormalizations; lower renorm_interval");
    acc[j] += std::log(norm);
    frame.col(j) /= norm;
  }
}

struct PreparedCocycle {
  std::string functor_text;
  int dim = 0;
  bool unit_determinant = true;
  std::vector<Eigen::MatrixXd> forward;  // indexed by generator
  std::vector<Eigen::MatrixXd> backward;
};

Eigen::MatrixXd to_double(const ExactMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = rational_to_double(m(i, j));
  return out;
}

PreparedCocycle prepare(const CocycleGenerators& gens, const FunctorSpec& f) {
  PreparedCocycle pc;
  pc.functor_text = f.to_string();
  pc.dim = static_cast<int>(f.output_dim(gens.dim));
  for (int g = 0; g < gens.count(); ++g) {
    const ExactMatrix applied = apply_functor(gens.matrix(g), f);
    const Rational det = applied.determinant();
    if (det == 0)
      throw std::domain_error("cocycle_engine: generator " + gens.label(g) +
                              " is singular under functor " + pc.functor_text);
    if (!(det == 1 || det == -1)) pc.unit_determinant = false;
    pc.forward.push_back(to_double(applied));
    pc.backward.push_back(to_double(applied.inverse()));
  }
  return pc;
}

// One independently seeded block: burn the frame in without accumulating,
// then accumulate QR log-diagonals for block_steps steps.
std::vector<double> run_block(const PreparedCocycle& pc, const std::vector<int>& symbols,
                              long long burn_in, long long block_steps, int renorm_interval) {
  const int d = pc.dim;
  Eigen::MatrixXd frame = Eigen::MatrixXd::Identity(d, d);
  std::vector<double> discard(d, 0.0), acc(d, 0.0);

  long long pos = 0;
  for (; pos < burn_in; ++pos) {
    const int s = symbols[static_cast<std::size_t>(pos)];
    const Eigen::MatrixXd& a = s > 0 ? pc.forward[s - 1] : pc.backward[-s - 1];
    frame = a * frame;
    if ((pos + 1) % renorm_interval == 0) mgs_renormalize(frame, discard);
  }
  mgs_renormalize(frame, discard);  // start accumulation from an orthonormal frame

  int since_renorm = 0;
  for (long long t = 0; t < block_steps; ++t, ++pos) {
    const int s = symbols[static_cast<std::size_t>(pos)];
    const Eigen::MatrixXd& a = s > 0 ? pc.forward[s - 1] : pc.backward[-s - 1];
    frame = a * frame;
    if (++since_renorm == renorm_interval) {
      mgs_renormalize(frame, acc);
      since_renorm = 0;
    }
  }
  if (since_renorm > 0) mgs_renormalize(frame, acc);

  for (int i = 0; i < d; ++i) acc[i] /= static_cast<double>(block_steps);
  return acc;
}

EstimationResult merge_blocks(const PreparedCocycle& pc, const CocycleGenerators& gens,
                              const WalkConfig& config,
                              const std::vector<std::vector<double>>& block_rows) {
  const int d = pc.dim;
  const int blocks = config.blocks;

  std::vector<double> mean(d, 0.0), se(d, 0.0);
  for (int b = 0; b < blocks; ++b)
    for (int i = 0; i < d; ++i) mean[i] += block_rows[b][i];
  for (int i = 0; i < d; ++i) mean[i] /= blocks;
  if (blocks > 1) {
    for (int b = 0; b < blocks; ++b)
      for (int i = 0; i < d; ++i) {
        const double dev = block_rows[b][i] - mean[i];
        se[i] += dev * dev;
      }
    for (int i = 0; i < d; ++i)
      se[i] = std::sqrt(se[i] / (static_cast<double>(blocks) * (blocks - 1)));
  }

  // sort coordinates by mean, descending; carry SEs and block columns along
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return mean[a] > mean[b]; });

  EstimationResult res;
  res.dataset = gens.name;
  res.functor = pc.functor_text;
  res.config = config;
  res.dataset_checksum = gens.checksum;
  res.dim = d;
  res.unit_determinant = pc.unit_determinant;
  res.steps_used = config.steps;
  res.exponents.resize(d);
  res.std_errors.resize(d);
  res.block_estimates.assign(blocks, std::vector<double>(d, 0.0));
  for (int i = 0; i < d; ++i) {
    res.exponents[i] = mean[order[i]];
    res.std_errors[i] = se[order[i]];
    for (int b = 0; b < blocks; ++b) res.block_estimates[b][i] = block_rows[b][order[i]];
  }
  return res;
}

}  // namespace

void WalkConfig::validate() const {
  if (blocks < 1) throw std::invalid_argument("WalkConfig: blocks must be >= 1");
  if (steps < blocks) throw std::invalid_argument("WalkConfig: steps must be >= blocks");
  if (steps % blocks != 0)
    throw std::invalid_argument("WalkConfig: steps must be divisible by blocks");
  if (renorm_interval < 1) throw std::invalid_argument("WalkConfig: renorm_interval must be >= 1");
  if (burn_in < 0) throw std::invalid_argument("WalkConfig: burn_in must be >= 0");
}

std::vector<EstimationResult> coupled_estimate(const CocycleGenerators& gens,
                                               const std::vector<FunctorSpec>& functors,
                                               const WalkConfig& config, ExecutionPolicy policy) {
  config.validate();
  if (gens.count() < 1) throw DatasetError("coupled_estimate: dataset has no generators");

  std::vector<FunctorSpec> specs = functors;
  const bool has_identity =
      std::any_of(specs.begin(), specs.end(),
                  [](const FunctorSpec& f) { return f.kind() == FunctorSpec::Kind::identity; });
  if (!has_identity) specs.insert(specs.begin(), FunctorSpec::identity());

  std::vector<PreparedCocycle> cocycles;
  for (const auto& f : specs) cocycles.push_back(prepare(gens, f));

  const long long block_steps = config.steps / config.blocks;
  const long long symbols_per_block = config.burn_in + block_steps;

  // block_rows[f][b] = per-coordinate estimates of functor f on block b
  std::vector<std::vector<std::vector<double>>> block_rows(
      specs.size(), std::vector<std::vector<double>>(config.blocks));

  bool use_openmp = policy == ExecutionPolicy::openmp;
#ifdef _OPENMP
  if (policy == ExecutionPolicy::automatic) use_openmp = true;
#endif

  // Exceptions cannot cross an OpenMP region, so the first one is captured
  // and rethrown after the loop; later blocks bail out early.
  std::exception_ptr failure = nullptr;
  std::atomic<bool> failed{false};
  auto run_one_block = [&](int b) {
    if (failed.load(std::memory_order_relaxed)) return;
    try {
      std::vector<int> symbols(static_cast<std::size_t>(symbols_per_block));
      WordStream stream(gens.count(), config.walk_kind, config.use_inverses,
                        block_seed(config.master_seed, b));
      for (auto& s : symbols) s = stream.next();
      for (std::size_t f = 0; f < cocycles.size(); ++f)
        block_rows[f][b] =
            run_block(cocycles[f], symbols, config.burn_in, block_steps, config.renorm_interval);
    } catch (...) {
      bool expected = false;
      if (failed.compare_exchange_strong(expected, true)) failure = std::current_exception();
    }
  };

  if (use_openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (int b = 0; b < config.blocks; ++b) run_one_block(b);
#else
    throw std::invalid_argument("cocycle_engine: this build has no OpenMP support");
#endif
  } else {
    for (int b = 0; b < config.blocks; ++b) run_one_block(b);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<EstimationResult> out;
  for (std::size_t f = 0; f < cocycles.size(); ++f)
    out.push_back(merge_blocks(cocycles[f], gens, config, block_rows[f]));
  return out;
}

EstimationResult estimate_exponents(const CocycleGenerators& gens, const WalkConfig& config,
                                    ExecutionPolicy policy) {
  return coupled_estimate(gens, {}, config, policy).front();
}

DiagnosticsReport analyze_spectrum(const EstimationResult& result, const SpectrumHints& hints,
                                   double tol_sigma) {
  const int d = result.dim;
  if (d < 1) throw std::invalid_argument("analyze_spectrum: empty spectrum");
  if (static_cast<int>(result.exponents.size()) != d ||
      static_cast<int>(result.std_errors.size()) != d)
    throw std::invalid_argument("analyze_spectrum: result arrays inconsistent with dim");
  if (hints.expect_zero && d % 2 == 0)
    throw std::invalid_argument("analyze_spectrum: expect_zero needs an odd dimension");
  if (hints.expect_g2_additivity && d / 2 < 3)
    throw std::invalid_argument("analyze_spectrum: additivity needs at least three positive slots");
  if (tol_sigma <= 0) throw std::invalid_argument("analyze_spectrum: tol_sigma must be positive");

  const auto& lam = result.exponents;
  const auto& se = result.std_errors;
  DiagnosticsReport rep;
  rep.tol_sigma = tol_sigma;
  bool all = true;

  if (hints.expect_symmetry) {
    DiagnosticCheck c;
    c.name = "symmetry";
    c.pass = true;
    for (int i = 0; i < d; ++i) {
      const int j = d - 1 - i;
      const double defect = std::abs(lam[i] + lam[j]);
      const double tol = tol_for(tol_sigma, std::hypot(se[i], se[j]));
      if (defect > c.defect) {
        c.defect = defect;
        c.tolerance = tol;
      }
      if (defect > tol) c.pass = false;
    }
    rep.symmetry = c;
    if (!c.pass) all = false;
  }

  if (hints.expect_zero) {
    DiagnosticCheck c;
    c.name = "zero-mode";
    const int mid = d / 2;
    c.defect = std::abs(lam[mid]);
    c.tolerance = tol_for(tol_sigma, se[mid]);
    int near_zero = 0;
    for (int i = 0; i < d; ++i)
      if (std::abs(lam[i]) <= tol_for(tol_sigma, se[i])) ++near_zero;
    rep.near_zero_count = near_zero;
    c.pass = c.defect <= c.tolerance && near_zero == 1;
    rep.zero = c;
    if (!c.pass) all = false;
  }

  if (hints.expect_g2_additivity) {
    DiagnosticCheck c;
    c.name = "additivity";
    c.defect = std::abs(lam[0] - lam[1] - lam[2]);
    c.tolerance = tol_for(tol_sigma, std::sqrt(se[0] * se[0] + se[1] * se[1] + se[2] * se[2]));
    c.pass = c.defect <= c.tolerance;
    rep.additivity = c;
    if (!c.pass) all = false;
  }

  const int npos = d / 2;
  if (npos >= 2) {
    DiagnosticCheck c;
    c.name = "spectral-gap";
    c.defect = std::numeric_limits<double>::infinity();
    c.tolerance = tol_sigma;
    for (int i = 0; i + 1 < npos; ++i) {
      const double diff = lam[i] - lam[i + 1];
      const double combined = std::hypot(se[i], se[i + 1]);
      const double z = combined > 0 ? diff / combined
                                    : (diff > kExactFloor
                                           ? std::numeric_limits<double>::infinity()
                                           : 0.0);
      rep.gap_zscores.push_back(z);
      c.defect = std::min(c.defect, z);
    }
    c.pass = c.defect > tol_sigma;
    rep.gaps = c;
    if (!c.pass) all = false;
  }

  if (result.unit_determinant) {
    DiagnosticCheck c;
    c.name = "exponent-sum";
    double sum = 0.0;
    for (double x : lam) sum += x;
    c.defect = std::abs(sum);
    c.tolerance = kSumTolerance;
    c.pass = c.defect <= c.tolerance;
    rep.exponent_sum = c;
    if (!c.pass) all = false;
  }

  rep.all_pass = all;
  return rep;
}

namespace {

SpectrumComparison compare_sorted(std::string name, const std::vector<double>& expected,
                                  const std::vector<double>& expected_se,
                                  const EstimationResult& actual, double tol_sigma) {
  if (expected.size() != actual.exponents.size())
    throw std::invalid_argument("spectrum comparison: size mismatch");
  SpectrumComparison cmp;
  cmp.name = std::move(name);
  cmp.pass = true;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double defect = std::abs(expected[i] - actual.exponents[i]);
    const double tol = tol_for(tol_sigma, std::hypot(expected_se[i], actual.std_errors[i]));
    cmp.defects.push_back(defect);
    cmp.tolerances.push_back(tol);
    cmp.max_zscore = std::max(cmp.max_zscore, defect / std::max(tol / tol_sigma, kExactFloor));
    if (defect > tol) cmp.pass = false;
  }
  return cmp;
}

}  // namespace

SpectrumComparison compare_dual(const EstimationResult& base, const EstimationResult& dual_result,
                                double tol_sigma) {
  const int d = base.dim;
  if (dual_result.dim != d) throw std::invalid_argument("compare_dual: dimension mismatch");
  std::vector<double> expected(d), expected_se(d);
  for (int i = 0; i < d; ++i) {
    expected[i] = -base.exponents[d - 1 - i];
    expected_se[i] = base.std_errors[d - 1 - i];
  }
  return compare_sorted("dual-mirror", expected, expected_se, dual_result, tol_sigma);
}

SpectrumComparison compare_exterior_square(const EstimationResult& base,
                                           const EstimationResult& ext2, double tol_sigma) {
  const int d = base.dim;
  if (ext2.dim != d * (d - 1) / 2)
    throw std::invalid_argument("compare_exterior_square: dimension mismatch");
  std::vector<std::pair<double, double>> sums;  // value, SE
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      sums.emplace_back(base.exponents[i] + base.exponents[j],
                        std::hypot(base.std_errors[i], base.std_errors[j]));
  std::sort(sums.begin(), sums.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<double> expected, expected_se;
  for (const auto& [v, s] : sums) {
    expected.push_back(v);
    expected_se.push_back(s);
  }
  return compare_sorted("exterior-square", expected, expected_se, ext2, tol_sigma);
}

}  // namespace g2lyap
