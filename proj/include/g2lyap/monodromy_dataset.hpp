#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "g2lyap/exact_linalg.hpp"
#include "g2lyap/exact_matrix.hpp"

namespace g2lyap {

struct DatasetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DatasetMetadata {
  int genus = 0;
  int punctures = 0;
  std::vector<int> hodge_numbers;  // [h^{n,0}, ..., h^{0,n}]
  int weight() const { return static_cast<int>(hodge_numbers.size()) - 1; }
};

// Named set of invertible matrices (with formal inverses understood) that a
// random word walks over.
struct CocycleGenerators {
  std::string name;
  int dim = 0;
  std::vector<std::pair<std::string, ExactMatrix>> generators;
  DatasetMetadata metadata;
  std::uint64_t checksum = 0;  // FNV-1a 64 of the canonical JSON asset text

  int count() const { return static_cast<int>(generators.size()); }
  const std::string& label(int i) const { return generators[i].first; }
  const ExactMatrix& matrix(int i) const { return generators[i].second; }
};

std::vector<std::string> builtin_dataset_names();
// Throws DatasetError on unknown name or checksum mismatch.
CocycleGenerators load_builtin(const std::string& name);
// Raw JSON text of a builtin asset (the single source of truth shipped
// with the library).
const std::string& builtin_dataset_text(const std::string& name);

CocycleGenerators load_dataset_file(const std::string& path);
// Parses the asset schema {name, dim, generators:[{label, rows}], metadata}.
CocycleGenerators parse_dataset_text(const std::string& json_text);

std::uint64_t fnv1a64(const std::string& text);

// Least k <= dim with (M - I)^k = 0, or nullopt if M is not unipotent.
std::optional<int> unipotency_index(const ExactMatrix& m);

struct Relation {
  std::vector<int> word;  // signed 1-based generator indices; -g means inverse
  int sign = +1;          // word evaluates to sign * identity
  bool operator==(const Relation&) const = default;
};

// All nonempty reduced words of length <= max_len over generators and their
// inverses that evaluate to +/- identity, sorted by (length, symbol order
// +1 < -1 < +2 < -2 < ...). max_len > 8 throws std::invalid_argument.
std::vector<Relation> find_relations(const CocycleGenerators& gens, int max_len);

struct GeneratorCheck {
  std::string label;
  std::string determinant;  // exact
  std::optional<int> unipotency;
  bool invariance_residual_zero = true;  // M^T Q M == Q for every reported form
};

struct VerificationReport {
  std::string dataset;
  int dim = 0;
  std::uint64_t checksum = 0;
  int weight = 0;

  int bilinear_symmetric_dim = 0;
  int bilinear_antisymmetric_dim = 0;
  std::optional<int> trilinear_dim;  // computed when dim == 7
  // Polarization side: symmetric for even weight, antisymmetric for odd.
  std::string polarization_symmetry;
  std::optional<ExactMatrix> bilinear_form;  // generator of the 1-dim polarization space
  std::optional<Signature> form_signature;   // sign-normalized so positive >= negative
  bool form_sign_flipped = false;            // true if -Q was taken for the signature
  std::optional<AlternatingTrilinearForm> trilinear_form;

  std::vector<GeneratorCheck> generators;
  std::vector<Relation> relations;

  bool certified = false;
  std::vector<std::string> discrepancy_notes;
  std::vector<std::string> fallback_labels;  // unipotent generators, the fallback subgroup
};

// Certifies the dataset: invariant form spaces (symmetric, antisymmetric,
// and for dim 7 the alternating 3-forms), signature of the polarization
// generator, exact per-generator residuals, determinant/unipotency data and
// optionally relations up to relation_max_len (0 skips the search).
// Failures are recorded in the report, never thrown.
VerificationReport verify_invariance(const CocycleGenerators& gens, int relation_max_len = 0);

// Sub-dataset of the visibly unipotent generators (unipotency index >= 2).
// Throws DatasetError if there are none.
CocycleGenerators fallback_subgroup(const CocycleGenerators& gens);

}  // namespace g2lyap
