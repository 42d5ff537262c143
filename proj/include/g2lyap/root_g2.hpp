#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "g2lyap/rational.hpp"

namespace g2lyap {

// Integer vector in the sum-zero three-coordinate model. Both the e-basis
// (complex roots/weights) and the f-basis (restricted side) use the same
// coordinates; restrict_weight is the identity relabeling.
struct WeightVector {
  std::array<long long, 3> coords{0, 0, 0};

  long long sum() const { return coords[0] + coords[1] + coords[2]; }
  long long squared_length() const;

  WeightVector operator+(const WeightVector& o) const;
  WeightVector operator-() const;
  bool operator==(const WeightVector&) const = default;
  auto operator<=>(const WeightVector&) const = default;

  std::string to_string() const;
};

struct RootSystemG2 {
  std::vector<WeightVector> roots;  // 12, closed under negation
  WeightVector simple1;             // e1 - e2
  WeightVector simple2;             // -e1 + 2 e2 - e3
  std::vector<WeightVector> short_roots;
  std::vector<WeightVector> long_roots;
};

RootSystemG2 build_root_system();

enum class RepName { standard, adjoint };

struct Representation {
  std::string name;
  std::vector<WeightVector> weights;  // sorted multiset; size == dimension
  int dimension() const { return static_cast<int>(weights.size()); }
};

Representation representation_weights(RepName name);
// Throws std::invalid_argument on unknown name.
Representation representation_weights(const std::string& name);

WeightVector restrict_weight(const WeightVector& w);

// Point of the closed positive Weyl chamber with exact coordinates.
// Invariants enforced at construction: g1+g2+g3 = 0, g1-g2 >= 0, g2 >= 0.
class LyapunovVector {
 public:
  LyapunovVector(Rational g1, Rational g2, Rational g3);
  static LyapunovVector zero() { return {Rational(0), Rational(0), Rational(0)}; }

  const std::array<Rational, 3>& coords() const { return g_; }
  Rational pair_with(const WeightVector& w) const;  // <w, gamma>

 private:
  std::array<Rational, 3> g_;
};

// Exponents <r(w), gamma> over the weight multiset, sorted descending.
std::vector<Rational> predict_spectrum(const Representation& rep, const LyapunovVector& gamma);

// Inverse of the standard-representation prediction: given the nonnegative
// exponents a >= b >= c with a = b + c, returns gamma = ((b+2c)/3, (b-c)/3,
// -(2b+c)/3). Exact overload demands exact additivity; the float overload
// accepts |a-(b+c)| <= tol and converts inputs to exact rationals.
LyapunovVector recover_lyapunov_vector(const Rational& a, const Rational& b, const Rational& c);
LyapunovVector recover_lyapunov_vector(double a, double b, double c, double tol);

// Pairwise sums w_i + w_j over unordered distinct index pairs, sorted;
// size C(dim, 2). Test oracle for the exterior-square functor.
std::vector<WeightVector> exterior_square_weight_multiset(const Representation& rep);

}  // namespace g2lyap
