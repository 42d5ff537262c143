// End-to-end gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "g2lyap/cocycle_engine.hpp"
#include "g2lyap/hodge_formulas.hpp"
#include "g2lyap/monodromy_dataset.hpp"
#include "g2lyap/root_g2.hpp"
#include "g2lyap/serialization.hpp"

using namespace g2lyap;

namespace {

struct Gate {
  std::map<int, std::pair<std::string, bool>> outcome;
  std::map<int, std::string> detail;

  void set(int idx, const std::string& name, bool pass, const std::string& info = "") {
    outcome[idx] = {name, pass};
    if (!info.empty()) detail[idx] = info;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

std::vector<Rational> rationals(const std::vector<long>& xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

int main() {
  Gate gate;
  CocycleGenerators run_gens;  // dataset criteria 4/5/8 run on
  SpectrumHints run_hints;

  // ---- 1: exact certification --------------------------------------------
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const CocycleGenerators gens = load_builtin("g2-elliptic-surface");
    const VerificationReport report = verify_invariance(gens, 0);
    const double dt = seconds_since(t0);

    const bool sym_ok = report.bilinear_symmetric_dim == 1;
    const bool sig_ok = report.form_signature && report.form_signature->positive == 4 &&
                        report.form_signature->negative == 3 && report.form_signature->zero == 0;
    const bool tri_ok = report.trilinear_dim && *report.trilinear_dim == 1;
    const bool certified_ok = report.certified && sym_ok && sig_ok && tri_ok && dt < 5.0;

    if (certified_ok) {
      run_gens = gens;
      gate.set(1, "exact-certification", true, "certified in " + fmt(dt) + "s");
    } else {
      // fallback: the unipotent-generator subgroup carries criteria 4-6
      const bool reported = !report.discrepancy_notes.empty();
      run_gens = fallback_subgroup(gens);
      gate.set(1, "exact-certification", false,
               reported ? "not certified; statistics fall back to the unipotent subgroup"
                        : "not certified and no discrepancy notes");
    }
    run_hints.expect_symmetry = true;
    run_hints.expect_zero = run_gens.dim % 2 == 1;
    run_hints.expect_g2_additivity = run_gens.dim == 7;
  } catch (const std::exception& e) {
    gate.set(1, "exact-certification", false, e.what());
    // run_gens stays empty; criteria 4/5/8 will record the downstream failure
  }

  // ---- 2: root system and weight multisets -------------------------------
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const RootSystemG2 rs = build_root_system();
    bool ok = rs.roots.size() == 12;
    ok = ok && rs.simple1 == WeightVector{{1, -1, 0}} && rs.simple2 == WeightVector{{-1, 2, -1}};

    const Representation std_rep = representation_weights(RepName::standard);
    std::vector<WeightVector> std_expected = {{{0, 0, 0}},  {{1, -1, 0}}, {{-1, 1, 0}},
                                              {{1, 0, -1}}, {{-1, 0, 1}}, {{0, 1, -1}},
                                              {{0, -1, 1}}};
    std::sort(std_expected.begin(), std_expected.end());
    std::vector<WeightVector> std_got = std_rep.weights;
    std::sort(std_got.begin(), std_got.end());
    ok = ok && std_got == std_expected;

    const Representation adj_rep = representation_weights(RepName::adjoint);
    std::vector<WeightVector> adj_expected = rs.roots;
    adj_expected.push_back(WeightVector{{0, 0, 0}});
    adj_expected.push_back(WeightVector{{0, 0, 0}});
    std::sort(adj_expected.begin(), adj_expected.end());
    std::vector<WeightVector> adj_got = adj_rep.weights;
    std::sort(adj_got.begin(), adj_got.end());
    ok = ok && adj_got == adj_expected;

    std::vector<WeightVector> ext2 = exterior_square_weight_multiset(std_rep);
    std::vector<WeightVector> split = adj_rep.weights;
    split.insert(split.end(), std_rep.weights.begin(), std_rep.weights.end());
    std::sort(ext2.begin(), ext2.end());
    std::sort(split.begin(), split.end());
    ok = ok && ext2.size() == 21 && ext2 == split;

    const double dt = seconds_since(t0);
    gate.set(2, "lie-combinatorics", ok && dt < 1.0, fmt(dt) + "s");
  } catch (const std::exception& e) {
    gate.set(2, "lie-combinatorics", false, e.what());
  }

  // ---- 3: prediction round-trips ------------------------------------------
  try {
    const LyapunovVector gamma(Rational(2), Rational(1), Rational(-3));
    const auto std_spec = predict_spectrum(representation_weights(RepName::standard), gamma);
    const bool std_ok = std_spec == rationals({5, 4, 1, 0, -1, -4, -5});

    const LyapunovVector rec = recover_lyapunov_vector(Rational(5), Rational(4), Rational(1));
    const bool rec_ok = rec.coords() == std::array<Rational, 3>{Rational(2), Rational(1),
                                                                Rational(-3)};

    const auto adj_spec = predict_spectrum(representation_weights(RepName::adjoint), gamma);
    const bool adj_ok =
        adj_spec == rationals({9, 6, 5, 4, 3, 1, 0, 0, -1, -3, -4, -5, -6, -9});

    gate.set(3, "prediction-round-trips", std_ok && rec_ok && adj_ok);
  } catch (const std::exception& e) {
    gate.set(3, "prediction-round-trips", false, e.what());
  }

  // ---- 4 + 5 + 8: the shared Monte Carlo runs -----------------------------
  try {
    WalkConfig config;  // defaults: non-backtracking, 10^6 steps, 20 blocks, seed 42
    const std::vector<FunctorSpec> functors = {FunctorSpec::identity(),
                                               FunctorSpec::exterior_power(2),
                                               FunctorSpec::dual()};
    const std::vector<EstimationResult> coupled = coupled_estimate(run_gens, functors, config);
    const EstimationResult& base = coupled[0];

    {
      const DiagnosticsReport diag = analyze_spectrum(base, run_hints, 3.0);
      std::ostringstream info;
      bool ok = true;
      auto need = [&](const char* what, const std::optional<DiagnosticCheck>& c) {
        if (!c) return;
        if (!c->pass) ok = false;
        info << what << " defect " << fmt(c->defect) << (c->pass ? " ok; " : " FAIL; ");
      };
      need("symmetry", diag.symmetry);
      need("zero", diag.zero);
      if (diag.zero && diag.near_zero_count != 1) ok = false;
      need("additivity", diag.additivity);
      need("gap", diag.gaps);
      need("sum", diag.exponent_sum);
      ok = ok && diag.all_pass;
      gate.set(4, "spectrum-statistics", ok, info.str());
    }

    {
      const SpectrumComparison dual_cmp = compare_dual(base, coupled[2], 3.0);
      const SpectrumComparison ext_cmp = compare_exterior_square(base, coupled[1], 3.0);
      gate.set(5, "functor-consistency", dual_cmp.pass && ext_cmp.pass,
               "dual max z " + fmt(dual_cmp.max_zscore) + ", ext:2 max z " +
                   fmt(ext_cmp.max_zscore));
    }

    {
      const EstimationResult again = estimate_exponents(run_gens, config);
      const bool bytes_ok = to_json(again).dump() == to_json(base).dump();

      WalkConfig other = config;
      other.master_seed = 43;
      const EstimationResult reseeded = estimate_exponents(run_gens, other);
      bool agree = true;
      for (int i = 0; i < base.dim; ++i) {
        const double tol = 3.0 * std::hypot(base.std_errors[i], reseeded.std_errors[i]);
        if (!within(reseeded.exponents[i], base.exponents[i], tol)) agree = false;
      }
      gate.set(8, "reproducibility", bytes_ok && agree,
               bytes_ok ? "seed 42 byte-identical, seed 43 within 3 SE"
                        : "seed 42 reruns differ");
    }
  } catch (const std::exception& e) {
    gate.set(4, "spectrum-statistics", false, e.what());
    gate.set(5, "functor-consistency", false, e.what());
    gate.set(8, "reproducibility", false, e.what());
  }

  // ---- 6: engine exactness -------------------------------------------------
  try {
    ExactMatrix d414(3, 3);
    d414(0, 0) = Rational(4);
    d414(1, 1) = Rational(1);
    d414(2, 2) = make_rational(1, 4);
    CocycleGenerators toy;
    toy.name = "toy";
    toy.dim = 3;
    toy.generators.emplace_back("A", d414);
    WalkConfig c;
    c.walk_kind = WalkKind::iid_uniform;
    c.use_inverses = false;
    c.steps = 10'000;
    c.blocks = 20;
    const EstimationResult det = estimate_exponents(toy, c);
    const double l4 = std::log(4.0);
    bool ok = within(det.exponents[0], l4, 1e-12) && within(det.exponents[1], 0.0, 1e-12) &&
              within(det.exponents[2], -l4, 1e-12);

    CocycleGenerators pair;
    pair.name = "toy-pair";
    pair.dim = 2;
    ExactMatrix a(2, 2), b(2, 2);
    a(0, 0) = Rational(4);
    a(1, 1) = Rational(1);
    b(0, 0) = Rational(1);
    b(1, 1) = Rational(4);
    pair.generators.emplace_back("A", a);
    pair.generators.emplace_back("B", b);
    WalkConfig c2;
    c2.walk_kind = WalkKind::iid_uniform;
    c2.use_inverses = false;
    c2.steps = 20'000;
    c2.blocks = 20;
    const EstimationResult avg = estimate_exponents(pair, c2);
    const double l2 = std::log(2.0);
    for (int i = 0; i < 2; ++i)
      ok = ok && within(avg.exponents[i], l2, 3.0 * avg.std_errors[i]);

    gate.set(6, "engine-exactness", ok);
  } catch (const std::exception& e) {
    gate.set(6, "engine-exactness", false, e.what());
  }

  // ---- 7: formula module ----------------------------------------------------
  try {
    bool ok = kontsevich_sum(0, 4, Rational(1)) == Rational(1) &&
              kontsevich_sum(1, 1, Rational(3)) == Rational(6);
    try {
      kontsevich_sum(0, 2, Rational(1));
      ok = false;
    } catch (const std::domain_error&) {
    }

    const FormulaPrediction pred = conjecture_prediction(g2_vhs_profile(), 3);
    ok = ok && pred.branch == FormulaBranch::truncated_h_n0 && pred.k_used == 2 &&
         pred.bundle == "H^{2,0}" && pred.coefficient == Rational(1) && !pred.value &&
         pred.describe() == "1 * deg(H^{2,0})";

    ok = ok && spectrum_shape(7, 4, 3) == SpectrumShape{3, 1, 3};
    gate.set(7, "formula-module", ok);
  } catch (const std::exception& e) {
    gate.set(7, "formula-module", false, e.what());
  }

  bool all = true;
  for (const auto& [idx, named] : gate.outcome) {
    const auto it = gate.detail.find(idx);
    std::printf("AC-%d %s: %s%s%s\n", idx, named.first.c_str(), named.second ? "PASS" : "FAIL",
                it == gate.detail.end() ? "" : " -- ", it == gate.detail.end() ? "" :
                it->second.c_str());
    all = all && named.second;
  }
  return all ? 0 : 1;
}
