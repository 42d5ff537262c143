#include "g2lyap/root_g2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace g2lyap {

long long WeightVector::squared_length() const {
  return coords[0] * coords[0] + coords[1] * coords[1] + coords[2] * coords[2];
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
  return {{coords[0] + o.coords[0], coords[1] + o.coords[1], coords[2] + o.coords[2]}};
}

WeightVector WeightVector::operator-() const { return {{-coords[0], -coords[1], -coords[2]}}; }

std::string WeightVector::to_string() const {
  return "(" + std::to_string(coords[0]) + "," + std::to_string(coords[1]) + "," +
         std::to_string(coords[2]) + ")";
}

RootSystemG2 build_root_system() {
  RootSystemG2 rs;
  const std::vector<WeightVector> half = {
      {{1, -1, 0}},   // e1 - e2
      {{1, 0, -1}},   // e1 - e3
      {{0, 1, -1}},   // e2 - e3
      {{-1, 2, -1}},  // -e1 + 2 e2 - e3
      {{2, -1, -1}},  // 2 e1 - e2 - e3
      {{1, 1, -2}},   // e1 + e2 - 2 e3
  };
  for (const auto& r : half) {
    rs.roots.push_back(r);
    rs.roots.push_back(-r);
  }
  rs.simple1 = {{1, -1, 0}};
  rs.simple2 = {{-1, 2, -1}};
  for (const auto& r : rs.roots) {
    if (r.squared_length() == 2)
      rs.short_roots.push_back(r);
    else
      rs.long_roots.push_back(r);
  }
  std::sort(rs.roots.begin(), rs.roots.end());
  std::sort(rs.short_roots.begin(), rs.short_roots.end());
  std::sort(rs.long_roots.begin(), rs.long_roots.end());
  return rs;
}

Representation representation_weights(RepName name) {
  Representation rep;
  if (name == RepName::standard) {
    rep.name = "standard";
    rep.weights = {{{0, 0, 0}}};
    for (const WeightVector w : {WeightVector{{1, -1, 0}}, WeightVector{{1, 0, -1}},
                                 WeightVector{{0, 1, -1}}}) {
      rep.weights.push_back(w);
      rep.weights.push_back(-w);
    }
  } else {
    rep.name = "adjoint";
    rep.weights = build_root_system().roots;
    rep.weights.push_back({{0, 0, 0}});
    rep.weights.push_back({{0, 0, 0}});  // Cartan directions
  }
  std::sort(rep.weights.begin(), rep.weights.end());
  return rep;
}

Representation representation_weights(const std::string& name) {
  if (name == "standard") return representation_weights(RepName::standard);
  if (name == "adjoint") return representation_weights(RepName::adjoint);
  throw std::invalid_argument("unknown representation '" + name + "' (want standard|adjoint)");
}

WeightVector restrict_weight(const WeightVector& w) { return w; }

LyapunovVector::LyapunovVector(Rational g1, Rational g2, Rational g3)
    : g_{std::move(g1), std::move(g2), std::move(g3)} {
  if (g_[0] + g_[1] + g_[2] != 0)
    throw std::invalid_argument("LyapunovVector: coordinates must sum to zero");
  if (g_[0] - g_[1] < 0 || g_[1] < 0)
    throw std::invalid_argument("LyapunovVector: outside the closed positive Weyl chamber");
}

Rational LyapunovVector::pair_with(const WeightVector& w) const {
  return Rational(static_cast<long>(w.coords[0])) * g_[0] +
         Rational(static_cast<long>(w.coords[1])) * g_[1] +
         Rational(static_cast<long>(w.coords[2])) * g_[2];
}

std::vector<Rational> predict_spectrum(const Representation& rep, const LyapunovVector& gamma) {
  std::vector<Rational> out;
  out.reserve(rep.weights.size());
  for (const auto& w : rep.weights) out.push_back(gamma.pair_with(restrict_weight(w)));
  std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return out;
}

LyapunovVector recover_lyapunov_vector(const Rational& a, const Rational& b, const Rational& c) {
  if (c < 0 || b < c || a < b)
    throw std::invalid_argument("recover_lyapunov_vector: need a >= b >= c >= 0");
  if (a != b + c)
    throw std::invalid_argument("recover_lyapunov_vector: exponents violate a = b + c");
  return {(b + 2 * c) / 3, (b - c) / 3, -(2 * b + c) / 3};
}

LyapunovVector recover_lyapunov_vector(double a, double b, double c, double tol) {
  if (tol < 0) throw std::invalid_argument("recover_lyapunov_vector: negative tolerance");
  if (c < 0 || b < c || a < b)
    throw std::invalid_argument("recover_lyapunov_vector: need a >= b >= c >= 0");
  if (std::abs(a - (b + c)) > tol)
    throw std::invalid_argument("recover_lyapunov_vector: additivity defect exceeds tolerance");
  const Rational rb(b), rc(c);
  return {(rb + 2 * rc) / 3, (rb - rc) / 3, -(2 * rb + rc) / 3};
}

std::vector<WeightVector> exterior_square_weight_multiset(const Representation& rep) {
  const auto& w = rep.weights;
  std::vector<WeightVector> out;
  const int d = static_cast<int>(w.size());
  out.reserve(static_cast<std::size_t>(d) * (d - 1) / 2);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) out.push_back(w[i] + w[j]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace g2lyap
