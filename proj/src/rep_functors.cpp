#include "g2lyap/rep_functors.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace g2lyap {

FunctorSpec FunctorSpec::identity() { return {}; }

FunctorSpec FunctorSpec::dual() {
  FunctorSpec f;
  f.kind_ = Kind::dual;
  return f;
}

FunctorSpec FunctorSpec::exterior_power(int k) {
  if (k < 1) throw std::invalid_argument("FunctorSpec: exterior power needs k >= 1");
  FunctorSpec f;
  f.kind_ = Kind::exterior_power;
  f.k_ = k;
  return f;
}

FunctorSpec FunctorSpec::symmetric_power(int k) {
  if (k < 1) throw std::invalid_argument("FunctorSpec: symmetric power needs k >= 1");
  FunctorSpec f;
  f.kind_ = Kind::symmetric_power;
  f.k_ = k;
  return f;
}

FunctorSpec FunctorSpec::tensor(FunctorSpec a, FunctorSpec b) {
  FunctorSpec f;
  f.kind_ = Kind::tensor;
  f.children_.push_back(std::move(a));
  f.children_.push_back(std::move(b));
  return f;
}

FunctorSpec FunctorSpec::direct_sum(std::vector<FunctorSpec> parts) {
  if (parts.empty()) throw std::invalid_argument("FunctorSpec: direct sum needs at least one part");
  FunctorSpec f;
  f.kind_ = Kind::direct_sum;
  f.children_ = std::move(parts);
  return f;
}

bool FunctorSpec::operator==(const FunctorSpec& o) const {
  return kind_ == o.kind_ && k_ == o.k_ && children_ == o.children_;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

long FunctorSpec::output_dim(int input_dim) const {
  if (input_dim < 0) throw std::invalid_argument("FunctorSpec: negative dimension");
  switch (kind_) {
    case Kind::identity:
    case Kind::dual:
      return input_dim;
    case Kind::exterior_power:
      if (k_ > input_dim)
        throw std::invalid_argument("FunctorSpec: exterior power " + std::to_string(k_) +
                                    " exceeds dimension " + std::to_string(input_dim));
      return binomial(input_dim, k_);
    case Kind::symmetric_power:
      return binomial(input_dim + k_ - 1, k_);
    case Kind::tensor:
      return children_[0].output_dim(input_dim) * children_[1].output_dim(input_dim);
    case Kind::direct_sum: {
      long total = 0;
      for (const auto& c : children_) total += c.output_dim(input_dim);
      return total;
    }
  }
  throw std::logic_error("FunctorSpec: unreachable");
}

std::string FunctorSpec::to_string() const {
  switch (kind_) {
    case Kind::identity:
      return "identity";
    case Kind::dual:
      return "dual";
    case Kind::exterior_power:
      return "ext:" + std::to_string(k_);
    case Kind::symmetric_power:
      return "sym:" + std::to_string(k_);
    case Kind::tensor:
      return "tensor(" + children_[0].to_string() + "," + children_[1].to_string() + ")";
    case Kind::direct_sum: {
      std::string s = "sum(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) s += ";";
        s += children_[i].to_string();
      }
      return s + ")";
    }
  }
  throw std::logic_error("FunctorSpec: unreachable");
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("functor syntax: " + what + " at position " + std::to_string(pos) +
                                " in '" + text + "'");
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a functor name");
    return text.substr(start, pos - start);
  }

  int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a positive integer");
    return std::stoi(text.substr(start, pos - start));
  }

  FunctorSpec spec() {
    const std::string name = word();
    if (name == "identity") return FunctorSpec::identity();
    if (name == "dual") return FunctorSpec::dual();
    if (name == "ext") {
      expect(':');
      return FunctorSpec::exterior_power(number());
    }
    if (name == "sym") {
      expect(':');
      return FunctorSpec::symmetric_power(number());
    }
    if (name == "tensor") {
      expect('(');
      FunctorSpec a = spec();
      expect(',');
      FunctorSpec b = spec();
      expect(')');
      return FunctorSpec::tensor(std::move(a), std::move(b));
    }
    if (name == "sum") {
      expect('(');
      std::vector<FunctorSpec> parts;
      parts.push_back(spec());
      skip_ws();
      while (pos < text.size() && text[pos] == ';') {
        ++pos;
        parts.push_back(spec());
        skip_ws();
      }
      expect(')');
      return FunctorSpec::direct_sum(std::move(parts));
    }
    fail("unknown functor '" + name + "'");
  }
};

}  // namespace

FunctorSpec FunctorSpec::parse(const std::string& text) {
  Parser p{text};
  FunctorSpec f = p.spec();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

std::vector<std::vector<int>> lex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    int t = k - 1;
    while (t >= 0 && pick[t] == n - k + t) --t;
    if (t < 0) break;
    ++pick[t];
    for (int u = t + 1; u < k; ++u) pick[u] = pick[u - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

std::vector<std::vector<int>> monomial_exponents(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return out;
  std::vector<int> e(n, 0);
  // lexicographically decreasing in the exponent vector = increasing basis order
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      e[var] = remaining;
      out.push_back(e);
      e[var] = 0;
      return;
    }
    for (int take = remaining; take >= 0; --take) {
      e[var] = take;
      self(self, var + 1, remaining - take);
    }
    e[var] = 0;
  };
  rec(rec, 0, k);
  return out;
}

namespace {

template <class M>
struct MatrixOps;

template <>
struct MatrixOps<ExactMatrix> {
  using Scalar = Rational;
  static ExactMatrix zeros(int r, int c) { return ExactMatrix(r, c); }
  static ExactMatrix inverse_of(const ExactMatrix& m) { return m.inverse(); }
  static bool is_zero(const Scalar& s) { return s == 0; }
};

template <>
struct MatrixOps<Eigen::MatrixXd> {
  using Scalar = double;
  static Eigen::MatrixXd zeros(int r, int c) { return Eigen::MatrixXd::Zero(r, c); }
  static Eigen::MatrixXd inverse_of(const Eigen::MatrixXd& m) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible()) throw std::domain_error("apply_functor: dual of a singular matrix");
    return lu.inverse();
  }
  static bool is_zero(const Scalar& s) { return s == 0.0; }
};

template <class M>
M exterior_power_matrix(const M& m, int k) {
  using Ops = MatrixOps<M>;
  const int n = static_cast<int>(m.rows());
  const auto subsets = lex_subsets(n, k);
  const int dim = static_cast<int>(subsets.size());
  M out = Ops::zeros(dim, dim);
  M minor = Ops::zeros(k, k);
  for (int col = 0; col < dim; ++col) {
    for (int row = 0; row < dim; ++row) {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor(i, j) = m(subsets[row][i], subsets[col][j]);
      out(row, col) = minor.determinant();
    }
  }
  return out;
}

template <class M>
M symmetric_power_matrix(const M& m, int k) {
  using Ops = MatrixOps<M>;
  using Scalar = typename Ops::Scalar;
  const int n = static_cast<int>(m.rows());
  const auto monomials = monomial_exponents(n, k);
  std::map<std::vector<int>, int> row_of;
  for (int i = 0; i < static_cast<int>(monomials.size()); ++i) row_of[monomials[i]] = i;
  const int dim = static_cast<int>(monomials.size());
  M out = Ops::zeros(dim, dim);
  for (int col = 0; col < dim; ++col) {
    // expand prod_i (sum_j m(j,i) x_j)^{e_i} over the monomial basis
    std::map<std::vector<int>, Scalar> poly;
    poly[std::vector<int>(n, 0)] = Scalar(1);
    for (int var = 0; var < n; ++var) {
      for (int rep = 0; rep < monomials[col][var]; ++rep) {
        std::map<std::vector<int>, Scalar> next;
        for (const auto& [expo, coeff] : poly) {
          for (int j = 0; j < n; ++j) {
            if (Ops::is_zero(m(j, var))) continue;
            std::vector<int> e2 = expo;
            ++e2[j];
            next[e2] += coeff * m(j, var);
          }
        }
        poly.swap(next);
      }
    }
    for (const auto& [expo, coeff] : poly) out(row_of.at(expo), col) = coeff;
  }
  return out;
}

template <class M>
M kronecker(const M& a, const M& b) {
  using Ops = MatrixOps<M>;
  const int ra = static_cast<int>(a.rows()), ca = static_cast<int>(a.cols());
  const int rb = static_cast<int>(b.rows()), cb = static_cast<int>(b.cols());
  M out = Ops::zeros(ra * rb, ca * cb);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ca; ++j) {
      if (Ops::is_zero(a(i, j))) continue;
      for (int p = 0; p < rb; ++p)
        for (int q = 0; q < cb; ++q) out(i * rb + p, j * cb + q) = a(i, j) * b(p, q);
    }
  return out;
}

template <class M>
M apply_generic(const M& m, const FunctorSpec& f) {
  using Ops = MatrixOps<M>;
  if (m.rows() != m.cols()) throw std::invalid_argument("apply_functor: matrix must be square");
  const int n = static_cast<int>(m.rows());
  switch (f.kind()) {
    case FunctorSpec::Kind::identity:
      return m;
    case FunctorSpec::Kind::dual: {
      M mi = Ops::inverse_of(m);
      M out = mi.transpose();
      return out;
    }
    case FunctorSpec::Kind::exterior_power:
      if (f.k() > n)
        throw std::invalid_argument("apply_functor: exterior power " + std::to_string(f.k()) +
                                    " exceeds dimension " + std::to_string(n));
      return exterior_power_matrix(m, f.k());
    case FunctorSpec::Kind::symmetric_power:
      return symmetric_power_matrix(m, f.k());
    case FunctorSpec::Kind::tensor:
      return kronecker(apply_generic(m, f.children()[0]), apply_generic(m, f.children()[1]));
    case FunctorSpec::Kind::direct_sum: {
      std::vector<M> parts;
      long total = 0;
      for (const auto& c : f.children()) {
        parts.push_back(apply_generic(m, c));
        total += parts.back().rows();
      }
      M out = Ops::zeros(static_cast<int>(total), static_cast<int>(total));
      long off = 0;
      for (const auto& p : parts) {
        for (int i = 0; i < p.rows(); ++i)
          for (int j = 0; j < p.cols(); ++j) out(off + i, off + j) = p(i, j);
        off += p.rows();
      }
      return out;
    }
  }
  throw std::logic_error("apply_functor: unreachable");
}

}  // namespace

ExactMatrix apply_functor(const ExactMatrix& m, const FunctorSpec& f) {
  return apply_generic(m, f);
}

Eigen::MatrixXd apply_functor(const Eigen::MatrixXd& m, const FunctorSpec& f) {
  return apply_generic(m, f);
}

}  // namespace g2lyap
