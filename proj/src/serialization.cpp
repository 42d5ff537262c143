#include "g2lyap/serialization.hpp"

#include <iomanip>
#include <sstream>

namespace g2lyap {

namespace {

nlohmann::json matrix_rows(const ExactMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json check_json(const DiagnosticCheck& c) {
  return {{"name", c.name}, {"defect", c.defect}, {"tolerance", c.tolerance}, {"pass", c.pass}};
}

std::string walk_kind_name(WalkKind k) {
  return k == WalkKind::iid_uniform ? "iid-uniform" : "non-backtracking";
}

}  // namespace

std::string checksum_hex(std::uint64_t checksum) {
  std::ostringstream ss;
  ss << "0x" << std::hex << std::setfill('0') << std::setw(16) << checksum;
  return ss.str();
}

nlohmann::json to_json(const Signature& s) {
  return {{"positive", s.positive}, {"zero", s.zero}, {"negative", s.negative}};
}

nlohmann::json to_json(const WalkConfig& c) {
  return {{"walk", walk_kind_name(c.walk_kind)},
          {"steps", c.steps},
          {"renorm_interval", c.renorm_interval},
          {"blocks", c.blocks},
          {"master_seed", c.master_seed},
          {"use_inverses", c.use_inverses},
          {"burn_in", c.burn_in}};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["dataset"] = r.dataset;
  j["dim"] = r.dim;
  j["checksum"] = checksum_hex(r.checksum);
  j["weight"] = r.weight;
  j["polarization_symmetry"] = r.polarization_symmetry;
  j["bilinear_symmetric_dim"] = r.bilinear_symmetric_dim;
  j["bilinear_antisymmetric_dim"] = r.bilinear_antisymmetric_dim;
  if (r.trilinear_dim) j["trilinear_dim"] = *r.trilinear_dim;
  if (r.bilinear_form) j["bilinear_form"] = matrix_rows(*r.bilinear_form);
  if (r.form_signature) {
    j["signature"] = to_json(*r.form_signature);
    j["form_sign_flipped"] = r.form_sign_flipped;
  }
  if (r.trilinear_form) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : r.trilinear_form->coefficients())
      coeffs.push_back(rational_to_string(c));
    j["trilinear_coefficients"] = std::move(coeffs);
  }
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : r.generators) {
    nlohmann::json e;
    e["label"] = g.label;
    e["determinant"] = g.determinant;
    if (g.unipotency)
      e["unipotency_index"] = *g.unipotency;
    else
      e["unipotency_index"] = nullptr;
    e["invariance_residual_zero"] = g.invariance_residual_zero;
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  if (!r.relations.empty()) {
    nlohmann::json rel = nlohmann::json::array();
    for (const auto& w : r.relations)
      rel.push_back({{"word", w.word}, {"sign", w.sign}});
    j["relations"] = std::move(rel);
  }
  j["certified"] = r.certified;
  j["discrepancy_notes"] = r.discrepancy_notes;
  j["fallback_labels"] = r.fallback_labels;
  return j;
}

nlohmann::json to_json(const EstimationResult& r) {
  nlohmann::json j;
  j["dataset"] = r.dataset;
  j["dataset_checksum"] = checksum_hex(r.dataset_checksum);
  j["functor"] = r.functor;
  j["config"] = to_json(r.config);
  j["dim"] = r.dim;
  j["unit_determinant"] = r.unit_determinant;
  j["exponents"] = r.exponents;
  j["std_errors"] = r.std_errors;
  j["blocks"] = r.block_estimates;
  j["steps_used"] = r.steps_used;
  return j;
}

nlohmann::json to_json(const DiagnosticsReport& r) {
  nlohmann::json j;
  j["tol_sigma"] = r.tol_sigma;
  nlohmann::json checks = nlohmann::json::array();
  if (r.symmetry) checks.push_back(check_json(*r.symmetry));
  if (r.zero) {
    nlohmann::json c = check_json(*r.zero);
    c["near_zero_count"] = r.near_zero_count;
    checks.push_back(std::move(c));
  }
  if (r.additivity) checks.push_back(check_json(*r.additivity));
  if (r.gaps) {
    nlohmann::json c = check_json(*r.gaps);
    c["zscores"] = r.gap_zscores;
    checks.push_back(std::move(c));
  }
  if (r.exponent_sum) checks.push_back(check_json(*r.exponent_sum));
  j["checks"] = std::move(checks);
  j["all_pass"] = r.all_pass;
  return j;
}

nlohmann::json to_json(const SpectrumComparison& c) {
  return {{"name", c.name},
          {"defects", c.defects},
          {"tolerances", c.tolerances},
          {"max_zscore", c.max_zscore},
          {"pass", c.pass}};
}

nlohmann::json to_json(const VHSProfile& p) {
  nlohmann::json degrees = nlohmann::json::object();
  for (const auto& [label, deg] : p.degrees) degrees[label] = rational_to_string(deg);
  return {{"weight", p.weight},
          {"hodge_numbers", p.hodge_numbers},
          {"genus", p.genus},
          {"punctures", p.punctures},
          {"degrees", std::move(degrees)}};
}

nlohmann::json to_json(const FormulaPrediction& p) {
  nlohmann::json j;
  j["branch"] = branch_name(p.branch);
  j["k_used"] = p.k_used;
  if (p.branch != FormulaBranch::not_applicable) {
    j["bundle"] = p.bundle;
    j["coefficient"] = rational_to_string(p.coefficient);
    if (p.value)
      j["value"] = rational_to_string(*p.value);
    else
      j["value"] = nullptr;
  }
  j["formula"] = p.describe();
  return j;
}

nlohmann::json to_json(const PredictionComparison& c) {
  return {{"predicted", c.predicted},
          {"scaled_estimate", c.scaled_estimate},
          {"std_error", c.std_error},
          {"defect", c.defect},
          {"zscore", c.zscore},
          {"consistent", c.consistent}};
}

std::string estimation_csv(const EstimationResult& r) {
  std::ostringstream ss;
  ss << "index,value,std_error\n";
  ss << std::setprecision(17);
  for (int i = 0; i < r.dim; ++i)
    ss << i << ',' << r.exponents[i] << ',' << r.std_errors[i] << '\n';
  return ss.str();
}

EstimationResult estimation_result_from_json(const nlohmann::json& input) {
  const nlohmann::json& j = input.contains("result") ? input.at("result") : input;
  try {
    EstimationResult r;
    r.dataset = j.value("dataset", std::string{});
    r.functor = j.value("functor", std::string{"identity"});
    r.dim = j.at("dim").get<int>();
    r.unit_determinant = j.value("unit_determinant", false);
    r.exponents = j.at("exponents").get<std::vector<double>>();
    r.std_errors = j.at("std_errors").get<std::vector<double>>();
    if (j.contains("blocks"))
      r.block_estimates = j.at("blocks").get<std::vector<std::vector<double>>>();
    r.steps_used = j.value("steps_used", 0LL);
    if (static_cast<int>(r.exponents.size()) != r.dim ||
        static_cast<int>(r.std_errors.size()) != r.dim)
      throw std::invalid_argument("estimation result: array lengths disagree with dim");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("estimation result: malformed JSON: ") + e.what());
  }
}

VHSProfile profile_from_json(const nlohmann::json& j) {
  try {
    VHSProfile p;
    p.weight = j.at("weight").get<int>();
    p.hodge_numbers = j.at("hodge_numbers").get<std::vector<int>>();
    p.genus = j.value("genus", 0);
    p.punctures = j.value("punctures", 0);
    if (j.contains("degrees"))
      for (const auto& [label, deg] : j.at("degrees").items())
        p.degrees[label] = parse_rational(deg.get<std::string>());
    p.validate();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("profile: malformed JSON: ") + e.what());
  }
}

}  // namespace g2lyap
