#include "g2lyap/exact_linalg.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace g2lyap {

SymmetricBilinearForm::SymmetricBilinearForm(ExactMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw std::invalid_argument("SymmetricBilinearForm: matrix not square");
  if (!m_.is_symmetric()) throw std::invalid_argument("SymmetricBilinearForm: matrix not symmetric");
}

long AlternatingTrilinearForm::coefficient_count(int dim) {
  return static_cast<long>(dim) * (dim - 1) * (dim - 2) / 6;
}

AlternatingTrilinearForm::AlternatingTrilinearForm(int dim, std::vector<Rational> coefficients)
    : dim_(dim), coeff_(std::move(coefficients)) {
  if (dim_ < 0) throw std::invalid_argument("AlternatingTrilinearForm: negative dimension");
  const long want = dim_ >= 3 ? coefficient_count(dim_) : 0;
  if (static_cast<long>(coeff_.size()) != want)
    throw std::invalid_argument("AlternatingTrilinearForm: coefficient count mismatch");
}

namespace {

// Lexicographic position of the triple i<j<k among all increasing triples.
long triple_index(int dim, int i, int j, int k) {
  long idx = 0;
  for (int a = 0; a < i; ++a) idx += static_cast<long>(dim - 1 - a) * (dim - 2 - a) / 2;
  for (int b = i + 1; b < j; ++b) idx += dim - 1 - b;
  idx += k - j - 1;
  return idx;
}

}  // namespace

Rational AlternatingTrilinearForm::coefficient(int i, int j, int k) const {
  if (i == j || j == k || i == k) return Rational(0);
  int sign = 1;
  int a = i, b = j, c = k;
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  if (b > c) {
    std::swap(b, c);
    sign = -sign;
  }
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  return sign * coeff_[triple_index(dim_, a, b, c)];
}

Rational AlternatingTrilinearForm::evaluate(const std::vector<Rational>& x,
                                            const std::vector<Rational>& y,
                                            const std::vector<Rational>& z) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_ ||
      static_cast<int>(z.size()) != dim_)
    throw std::invalid_argument("AlternatingTrilinearForm: vector dimension mismatch");
  Rational acc(0);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (j == i || y[j] == 0) continue;
      for (int k = 0; k < dim_; ++k) {
        if (k == i || k == j || z[k] == 0) continue;
        acc += coefficient(i, j, k) * x[i] * y[j] * z[k];
      }
    }
  }
  return acc;
}

RankNullspace rank_and_nullspace(const ExactMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  ExactMatrix w = m;

  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot_col(cols, false);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (w(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(w(r, j), w(piv, j));
    const Rational p = w(r, c);
    for (int j = c; j < cols; ++j) w(r, j) /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || w(i, c) == 0) continue;
      const Rational f = w(i, c);
      for (int j = c; j < cols; ++j) w(i, j) -= f * w(r, j);
    }
    pivot_col_of_row.push_back(c);
    is_pivot_col[c] = true;
    ++r;
  }

  RankNullspace out;
  out.rank = r;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot_col[c]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[c] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col_of_row[i]] = -w(i, c);
    out.nullspace_basis.push_back(std::move(v));
  }
  return out;
}

Signature signature(const SymmetricBilinearForm& q) {
  const int n = q.dim();
  ExactMatrix w = q.matrix();
  Signature sig;
  int k = 0;
  while (k < n) {
    int piv = -1;
    for (int i = k; i < n; ++i) {
      if (w(i, i) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) {
      // all remaining diagonal entries vanish: look for an off-diagonal entry
      // and fold it onto the diagonal (row/col addition keeps congruence)
      int fi = -1, fj = -1;
      for (int i = k; i < n && fi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (w(i, j) != 0) {
            fi = i;
            fj = j;
            break;
          }
      if (fi < 0) {
        sig.zero += n - k;
        break;
      }
      for (int j = 0; j < n; ++j) w(fi, j) += w(fj, j);
      for (int i = 0; i < n; ++i) w(i, fi) += w(i, fj);
      continue;
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(w(k, j), w(piv, j));
      for (int i = 0; i < n; ++i) std::swap(w(i, k), w(i, piv));
    }
    const Rational p = w(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (w(i, k) == 0) continue;
      const Rational f = w(i, k) / p;
      for (int j = 0; j < n; ++j) w(i, j) -= f * w(k, j);
      for (int j = 0; j < n; ++j) w(j, i) -= f * w(j, k);
    }
    if (p > 0)
      ++sig.positive;
    else
      ++sig.negative;
    ++k;
  }
  return sig;
}

std::vector<Rational> normalize_primitive(const std::vector<Rational>& v) {
  mpz_class den_lcm(1);
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Rational> w(v.size());
  mpz_class num_gcd(0);
  for (std::size_t t = 0; t < v.size(); ++t) {
    w[t] = v[t] * Rational(den_lcm);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), w[t].get_num().get_mpz_t());
  }
  if (num_gcd == 0) return w;  // zero vector
  Rational scale = Rational(num_gcd);
  int lead_sign = 0;
  for (const auto& x : w) {
    if (x != 0) {
      lead_sign = sgn(x);
      break;
    }
  }
  if (lead_sign < 0) scale = -scale;
  for (auto& x : w) x /= scale;
  return w;
}

namespace {

void check_generators(const std::vector<ExactMatrix>& gens) {
  if (gens.empty()) throw std::invalid_argument("invariant space: no generators");
  const int d = gens.front().rows();
  for (const auto& g : gens) {
    if (!g.is_square() || g.rows() != d)
      throw std::invalid_argument("invariant space: generator dimension mismatch");
  }
}

}  // namespace

std::vector<ExactMatrix> invariant_form_space(const std::vector<ExactMatrix>& gens,
                                              FormSymmetry symmetry) {
  check_generators(gens);
  const int d = gens.front().rows();
  const bool sym = symmetry == FormSymmetry::symmetric;
  const int s = sym ? 1 : -1;

  // independent unknowns q_ij, i<=j (symmetric) or i<j (antisymmetric)
  std::vector<std::pair<int, int>> unknowns;
  for (int i = 0; i < d; ++i)
    for (int j = sym ? i : i + 1; j < d; ++j) unknowns.emplace_back(i, j);
  const int nu = static_cast<int>(unknowns.size());

  // stacked system: (M^T Q M - Q)_{ab} = 0 over the upper triangle
  std::vector<std::pair<int, int>> eqs = unknowns;  // same index ranges
  ExactMatrix A(static_cast<int>(eqs.size()) * static_cast<int>(gens.size()), nu);
  int row = 0;
  for (const auto& m : gens) {
    for (const auto& [a, b] : eqs) {
      for (int t = 0; t < nu; ++t) {
        const auto [i, j] = unknowns[t];
        Rational c = m(i, a) * m(j, b);
        if (i != j) c += s * m(j, a) * m(i, b);
        if (i == a && j == b) c -= 1;
        A(row, t) = c;
      }
      ++row;
    }
  }

  const RankNullspace ns = rank_and_nullspace(A);
  std::vector<ExactMatrix> basis;
  basis.reserve(ns.nullspace_basis.size());
  for (const auto& v : ns.nullspace_basis) {
    const std::vector<Rational> w = normalize_primitive(v);
    ExactMatrix q(d, d);
    for (int t = 0; t < nu; ++t) {
      const auto [i, j] = unknowns[t];
      q(i, j) = w[t];
      if (i != j) q(j, i) = s * w[t];
    }
    basis.push_back(std::move(q));
  }
  return basis;
}

std::vector<SymmetricBilinearForm> invariant_bilinear_space(const std::vector<ExactMatrix>& gens) {
  std::vector<SymmetricBilinearForm> out;
  for (auto& q : invariant_form_space(gens, FormSymmetry::symmetric))
    out.emplace_back(std::move(q));
  return out;
}

std::vector<AlternatingTrilinearForm> invariant_trilinear_space(
    const std::vector<ExactMatrix>& gens) {
  check_generators(gens);
  const int d = gens.front().rows();
  if (d < 3) return {};

  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) triples.push_back({i, j, k});
  const int nu = static_cast<int>(triples.size());

  // coefficient of the unknown phi_{sorted(i,j,k)} contributed by index (i,j,k)
  auto signed_slot = [&](int i, int j, int k) -> std::pair<int, long> {
    int sign = 1;
    int a = i, b = j, c = k;
    if (a > b) {
      std::swap(a, b);
      sign = -sign;
    }
    if (b > c) {
      std::swap(b, c);
      sign = -sign;
    }
    if (a > b) {
      std::swap(a, b);
      sign = -sign;
    }
    return {sign, triple_index(d, a, b, c)};
  };

  ExactMatrix A(nu * static_cast<int>(gens.size()), nu);
  int row = 0;
  for (const auto& m : gens) {
    for (const auto& [a, b, c] : triples) {
      // phi(M e_a, M e_b, M e_c) - phi(e_a, e_b, e_c)
      for (int i = 0; i < d; ++i) {
        if (m(i, a) == 0) continue;
        for (int j = 0; j < d; ++j) {
          if (j == i || m(j, b) == 0) continue;
          for (int k = 0; k < d; ++k) {
            if (k == i || k == j || m(k, c) == 0) continue;
            const auto [sign, slot] = signed_slot(i, j, k);
            A(row, static_cast<int>(slot)) += sign * m(i, a) * m(j, b) * m(k, c);
          }
        }
      }
      A(row, static_cast<int>(triple_index(d, a, b, c))) -= 1;
      ++row;
    }
  }

  const RankNullspace ns = rank_and_nullspace(A);
  std::vector<AlternatingTrilinearForm> basis;
  basis.reserve(ns.nullspace_basis.size());
  for (const auto& v : ns.nullspace_basis)
    basis.emplace_back(d, normalize_primitive(v));
  return basis;
}

}  // namespace g2lyap
