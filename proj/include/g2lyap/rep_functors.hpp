#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "g2lyap/exact_matrix.hpp"

namespace g2lyap {

// A composable multilinear construction applied to square matrices:
// dual (inverse-transpose), exterior/symmetric powers, Kronecker tensor
// product, and block-diagonal direct sum. Application is functorial:
// apply(AB) = apply(A) * apply(B).
class FunctorSpec {
 public:
  enum class Kind { identity, dual, exterior_power, symmetric_power, tensor, direct_sum };

  static FunctorSpec identity();
  static FunctorSpec dual();
  static FunctorSpec exterior_power(int k);   // k >= 1
  static FunctorSpec symmetric_power(int k);  // k >= 1
  static FunctorSpec tensor(FunctorSpec a, FunctorSpec b);
  static FunctorSpec direct_sum(std::vector<FunctorSpec> parts);  // nonempty

  // Grammar: identity | dual | ext:k | sym:k | tensor(<spec>,<spec>) | sum(<spec>;...)
  static FunctorSpec parse(const std::string& text);
  std::string to_string() const;

  Kind kind() const { return kind_; }
  int k() const { return k_; }
  const std::vector<FunctorSpec>& children() const { return children_; }

  // Dimension of the output space for a given input dimension. Throws
  // std::invalid_argument when an exterior power exceeds the dimension.
  long output_dim(int input_dim) const;

  bool operator==(const FunctorSpec& o) const;

 private:
  FunctorSpec() = default;
  Kind kind_ = Kind::identity;
  int k_ = 0;
  std::vector<FunctorSpec> children_;
};

ExactMatrix apply_functor(const ExactMatrix& m, const FunctorSpec& f);
Eigen::MatrixXd apply_functor(const Eigen::MatrixXd& m, const FunctorSpec& f);

// Increasing k-element subsets of {0..n-1} in lexicographic order (the basis
// ordering used by exterior powers).
std::vector<std::vector<int>> lex_subsets(int n, int k);

// Exponent multi-indices of the degree-k monomials in n variables, in
// lexicographic order (the basis ordering used by symmetric powers).
std::vector<std::vector<int>> monomial_exponents(int n, int k);

long binomial(int n, int k);

}  // namespace g2lyap
