#pragma once

#include <string>

#include <json.hpp>

#include "g2lyap/cocycle_engine.hpp"
#include "g2lyap/hodge_formulas.hpp"
#include "g2lyap/monodromy_dataset.hpp"

namespace g2lyap {

// JSON views of the result types. Keys are emitted in nlohmann's sorted
// order, so dumps of equal values are byte-identical.
nlohmann::json to_json(const Signature& s);
nlohmann::json to_json(const WalkConfig& c);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const EstimationResult& r);
nlohmann::json to_json(const DiagnosticsReport& r);
nlohmann::json to_json(const SpectrumComparison& c);
nlohmann::json to_json(const VHSProfile& p);
nlohmann::json to_json(const FormulaPrediction& p);
nlohmann::json to_json(const PredictionComparison& c);

// One exponent per row: index,value,std_error
std::string estimation_csv(const EstimationResult& r);

// Inverse of to_json(EstimationResult), for feeding saved runs back in.
// Accepts either a bare result object or a driver artifact wrapping one
// under "result". Throws std::invalid_argument on malformed input.
EstimationResult estimation_result_from_json(const nlohmann::json& j);

VHSProfile profile_from_json(const nlohmann::json& j);

std::string checksum_hex(std::uint64_t checksum);

}  // namespace g2lyap
