#pragma once

#include <vector>

#include "g2lyap/exact_matrix.hpp"

namespace g2lyap {

struct Signature {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  bool operator==(const Signature&) const = default;
};

class SymmetricBilinearForm {
 public:
  // Throws std::invalid_argument unless m is square and symmetric.
  explicit SymmetricBilinearForm(ExactMatrix m);
  const ExactMatrix& matrix() const { return m_; }
  int dim() const { return m_.rows(); }

 private:
  ExactMatrix m_;
};

// Alternating trilinear form on an n-dimensional space. Stores the C(n,3)
// independent coefficients phi(e_i, e_j, e_k) for i<j<k in lexicographic
// order; the full tensor is recovered by total antisymmetrization.
class AlternatingTrilinearForm {
 public:
  AlternatingTrilinearForm(int dim, std::vector<Rational> coefficients);

  int dim() const { return dim_; }
  static long coefficient_count(int dim);
  const std::vector<Rational>& coefficients() const { return coeff_; }

  // phi(e_i, e_j, e_k) for arbitrary index order (0 on repeated indices).
  Rational coefficient(int i, int j, int k) const;
  Rational evaluate(const std::vector<Rational>& x, const std::vector<Rational>& y,
                    const std::vector<Rational>& z) const;

 private:
  int dim_ = 0;
  std::vector<Rational> coeff_;
};

struct RankNullspace {
  int rank = 0;
  // Kernel basis in reduced-echelon normalization: one vector per free
  // column, with entry 1 at that column.
  std::vector<std::vector<Rational>> nullspace_basis;
};

RankNullspace rank_and_nullspace(const ExactMatrix& m);

// Counts of positive/zero/negative squares under congruence diagonalization
// (symmetric Gaussian reduction, exact pivoting; Sylvester-invariant).
Signature signature(const SymmetricBilinearForm& q);

enum class FormSymmetry { symmetric, antisymmetric };

// Basis of all forms Q of the requested symmetry with M^T Q M = Q for every
// generator, solved exactly over the independent upper-triangle unknowns.
// Basis matrices are scaled to primitive integer entries with the first
// nonzero entry positive. Throws std::invalid_argument on shape mismatch.
std::vector<ExactMatrix> invariant_form_space(const std::vector<ExactMatrix>& gens,
                                              FormSymmetry symmetry);

std::vector<SymmetricBilinearForm> invariant_bilinear_space(const std::vector<ExactMatrix>& gens);

// Basis of all alternating 3-forms phi with phi(Mx, My, Mz) = phi(x, y, z)
// for every generator, same normalization as above.
std::vector<AlternatingTrilinearForm> invariant_trilinear_space(const std::vector<ExactMatrix>& gens);

// Scales a rational vector to primitive integer entries, first nonzero positive.
std::vector<Rational> normalize_primitive(const std::vector<Rational>& v);

}  // namespace g2lyap
