#include "g2lyap/monodromy_dataset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "g2lyap/builtin_datasets.hpp"

namespace g2lyap {

namespace {

struct BuiltinEntry {
  const std::string* text;
  std::uint64_t checksum;
};

// Pinned FNV-1a 64 checksums of the embedded asset texts.
const std::uint64_t kG2Checksum = 0x13d0a01f7566dca2ULL;
const std::uint64_t kSl2Checksum = 0xc595b3ffc54f3553ULL;

BuiltinEntry builtin_entry(const std::string& name) {
  if (name == "g2-elliptic-surface") return {&detail::kG2EllipticSurfaceJson, kG2Checksum};
  if (name == "sl2-sanity") return {&detail::kSl2SanityJson, kSl2Checksum};
  throw DatasetError("unknown dataset '" + name + "' (available: g2-elliptic-surface, sl2-sanity)");
}

}  // namespace

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::string> builtin_dataset_names() { return {"g2-elliptic-surface", "sl2-sanity"}; }

const std::string& builtin_dataset_text(const std::string& name) {
  return *builtin_entry(name).text;
}

CocycleGenerators parse_dataset_text(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DatasetError(std::string("dataset: invalid JSON: ") + e.what());
  }

  CocycleGenerators ds;
  try {
    ds.name = j.at("name").get<std::string>();
    ds.dim = j.at("dim").get<int>();
    if (ds.dim <= 0) throw DatasetError("dataset: dim must be positive");
    std::set<std::string> seen;
    for (const auto& g : j.at("generators")) {
      const auto label = g.at("label").get<std::string>();
      if (!seen.insert(label).second)
        throw DatasetError("dataset: duplicate generator label '" + label + "'");
      const auto& rows = g.at("rows");
      if (static_cast<int>(rows.size()) != ds.dim)
        throw DatasetError("dataset: generator '" + label + "' row count != dim");
      ExactMatrix m(ds.dim, ds.dim);
      for (int i = 0; i < ds.dim; ++i) {
        const auto& row = rows.at(i);
        if (static_cast<int>(row.size()) != ds.dim)
          throw DatasetError("dataset: generator '" + label + "' column count != dim");
        for (int k = 0; k < ds.dim; ++k) {
          const auto& cell = row.at(k);
          if (!cell.is_number_integer())
            throw DatasetError("dataset: generator '" + label + "' has a non-integer entry");
          m(i, k) = Rational(cell.get<long>());
        }
      }
      if (m.determinant() == 0)
        throw DatasetError("dataset: generator '" + label + "' is singular");
      ds.generators.emplace_back(label, std::move(m));
    }
    if (ds.generators.empty()) throw DatasetError("dataset: no generators");
    if (j.contains("metadata")) {
      const auto& md = j.at("metadata");
      ds.metadata.genus = md.value("genus", 0);
      ds.metadata.punctures = md.value("punctures", 0);
      if (md.contains("hodge_numbers"))
        ds.metadata.hodge_numbers = md.at("hodge_numbers").get<std::vector<int>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw DatasetError(std::string("dataset: schema violation: ") + e.what());
  }
  ds.checksum = fnv1a64(json_text);
  return ds;
}

CocycleGenerators load_builtin(const std::string& name) {
  const BuiltinEntry entry = builtin_entry(name);
  if (fnv1a64(*entry.text) != entry.checksum)
    throw DatasetError("builtin dataset '" + name + "' failed its checksum; the embedded asset was edited");
  return parse_dataset_text(*entry.text);
}

CocycleGenerators load_dataset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot open dataset file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_dataset_text(ss.str());
}

std::optional<int> unipotency_index(const ExactMatrix& m) {
  const int d = m.dim();
  const ExactMatrix n = m - ExactMatrix::identity(d);
  ExactMatrix p = n;
  for (int k = 1; k <= d; ++k) {
    if (p.is_zero()) return k;
    p = p * n;
  }
  return std::nullopt;
}

namespace {

bool is_negated_identity(const ExactMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? -1 : 0)) return false;
  return true;
}

// Symbol order +1 < -1 < +2 < -2 < ...
bool symbol_less(int a, int b) {
  const int ka = std::abs(a), kb = std::abs(b);
  if (ka != kb) return ka < kb;
  return a > b;  // positive symbol first
}

bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return symbol_less(a[i], b[i]);
  }
  return false;
}

}  // namespace

std::vector<Relation> find_relations(const CocycleGenerators& gens, int max_len) {
  if (max_len < 0 || max_len > 8)
    throw std::invalid_argument("find_relations: max_len must be in [0, 8]");
  const int ng = gens.count();

  std::vector<int> symbols;
  std::vector<ExactMatrix> mats;
  for (int g = 0; g < ng; ++g) {
    symbols.push_back(g + 1);
    mats.push_back(gens.matrix(g));
    symbols.push_back(-(g + 1));
    mats.push_back(gens.matrix(g).inverse());
  }

  std::vector<Relation> out;
  std::vector<int> word;
  std::vector<ExactMatrix> stack;
  stack.push_back(ExactMatrix::identity(gens.dim));

  auto dfs = [&](auto&& self) -> void {
    const ExactMatrix& prod = stack.back();
    if (!word.empty()) {
      if (prod.is_identity())
        out.push_back({word, +1});
      else if (is_negated_identity(prod))
        out.push_back({word, -1});
    }
    if (static_cast<int>(word.size()) == max_len) return;
    for (std::size_t s = 0; s < symbols.size(); ++s) {
      if (!word.empty() && word.back() == -symbols[s]) continue;  // reduced words only
      word.push_back(symbols[s]);
      stack.push_back(stack.back() * mats[s]);
      self(self);
      stack.pop_back();
      word.pop_back();
    }
  };
  dfs(dfs);

  std::sort(out.begin(), out.end(),
            [](const Relation& a, const Relation& b) { return word_less(a.word, b.word); });
  return out;
}

CocycleGenerators fallback_subgroup(const CocycleGenerators& gens) {
  CocycleGenerators sub;
  sub.name = gens.name + "-unipotent-fallback";
  sub.dim = gens.dim;
  sub.metadata = gens.metadata;
  sub.checksum = gens.checksum;
  for (const auto& [label, m] : gens.generators) {
    const auto k = unipotency_index(m);
    if (k && *k >= 2) sub.generators.emplace_back(label, m);
  }
  if (sub.generators.empty())
    throw DatasetError("fallback_subgroup: no unipotent generators in '" + gens.name + "'");
  return sub;
}

namespace {

// phi(M x, M y, M z) as a coefficient vector over increasing triples.
AlternatingTrilinearForm pullback(const AlternatingTrilinearForm& phi, const ExactMatrix& m) {
  const int d = phi.dim();
  std::vector<Rational> out;
  out.reserve(AlternatingTrilinearForm::coefficient_count(d));
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int c = b + 1; c < d; ++c) {
        Rational acc(0);
        for (int i = 0; i < d; ++i) {
          if (m(i, a) == 0) continue;
          for (int j = 0; j < d; ++j) {
            if (j == i || m(j, b) == 0) continue;
            for (int k = 0; k < d; ++k) {
              if (k == i || k == j || m(k, c) == 0) continue;
              acc += phi.coefficient(i, j, k) * m(i, a) * m(j, b) * m(k, c);
            }
          }
        }
        out.push_back(acc);
      }
  return {d, std::move(out)};
}

std::string label_set(const CocycleGenerators& gens, const std::vector<int>& idx) {
  std::string s = "{";
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (t) s += ", ";
    s += gens.label(idx[t]);
  }
  return s + "}";
}

}  // namespace

VerificationReport verify_invariance(const CocycleGenerators& gens, int relation_max_len) {
  VerificationReport rep;
  rep.dataset = gens.name;
  rep.dim = gens.dim;
  rep.checksum = gens.checksum;
  rep.weight = gens.metadata.weight();

  std::vector<ExactMatrix> mats;
  for (const auto& [label, m] : gens.generators) mats.push_back(m);

  const auto sym_basis = invariant_form_space(mats, FormSymmetry::symmetric);
  const auto alt_basis = invariant_form_space(mats, FormSymmetry::antisymmetric);
  rep.bilinear_symmetric_dim = static_cast<int>(sym_basis.size());
  rep.bilinear_antisymmetric_dim = static_cast<int>(alt_basis.size());

  const bool polar_symmetric = rep.weight < 0 || rep.weight % 2 == 0;
  rep.polarization_symmetry = polar_symmetric ? "symmetric" : "antisymmetric";
  const auto& polar_basis = polar_symmetric ? sym_basis : alt_basis;
  const int polar_dim = static_cast<int>(polar_basis.size());

  if (polar_dim == 1) {
    rep.bilinear_form = polar_basis.front();
    if (polar_symmetric) {
      Signature sig = signature(SymmetricBilinearForm(polar_basis.front()));
      if (sig.negative > sig.positive) {
        std::swap(sig.positive, sig.negative);
        rep.form_sign_flipped = true;
      }
      rep.form_signature = sig;
    }
  }

  std::vector<AlternatingTrilinearForm> tri_basis;
  if (gens.dim == 7) {
    tri_basis = invariant_trilinear_space(mats);
    rep.trilinear_dim = static_cast<int>(tri_basis.size());
    if (tri_basis.size() == 1) rep.trilinear_form = tri_basis.front();
  }

  for (int g = 0; g < gens.count(); ++g) {
    GeneratorCheck check;
    check.label = gens.label(g);
    const ExactMatrix& m = gens.matrix(g);
    check.determinant = rational_to_string(m.determinant());
    check.unipotency = unipotency_index(m);
    for (const auto& q : sym_basis)
      if (m.transpose() * q * m != q) check.invariance_residual_zero = false;
    for (const auto& q : alt_basis)
      if (m.transpose() * q * m != q) check.invariance_residual_zero = false;
    for (const auto& phi : tri_basis)
      if (!(pullback(phi, m).coefficients() == phi.coefficients()))
        check.invariance_residual_zero = false;
    if (check.determinant == "0")
      rep.discrepancy_notes.push_back("generator " + check.label + " is singular");
    rep.generators.push_back(std::move(check));
  }

  for (const auto& check : rep.generators) {
    if (check.unipotency && *check.unipotency >= 2) rep.fallback_labels.push_back(check.label);
  }

  bool ok = polar_dim == 1;
  if (gens.dim == 7 && rep.trilinear_dim != 1) ok = false;
  for (const auto& check : rep.generators)
    if (!check.invariance_residual_zero) ok = false;
  rep.certified = ok;

  if (!ok) {
    if (polar_dim != 1)
      rep.discrepancy_notes.push_back("invariant " + rep.polarization_symmetry +
                                      " bilinear space has dimension " + std::to_string(polar_dim) +
                                      " (expected 1)");
    if (gens.dim == 7 && rep.trilinear_dim != 1)
      rep.discrepancy_notes.push_back("invariant alternating 3-form space has dimension " +
                                      std::to_string(*rep.trilinear_dim) + " (expected 1)");

    // name the largest generator subsets that still admit a 1-dim solution
    const FormSymmetry polar_kind =
        polar_symmetric ? FormSymmetry::symmetric : FormSymmetry::antisymmetric;
    for (int size = gens.count() - 1; size >= 1; --size) {
      std::vector<std::string> hits;
      std::vector<int> pick(size);
      // enumerate size-subsets in lexicographic order
      for (int t = 0; t < size; ++t) pick[t] = t;
      while (true) {
        std::vector<ExactMatrix> subset;
        for (int t : pick) subset.push_back(gens.matrix(t));
        if (invariant_form_space(subset, polar_kind).size() == 1)
          hits.push_back(label_set(gens, pick));
        int t = size - 1;
        while (t >= 0 && pick[t] == gens.count() - size + t) --t;
        if (t < 0) break;
        ++pick[t];
        for (int u = t + 1; u < size; ++u) pick[u] = pick[u - 1] + 1;
      }
      if (!hits.empty()) {
        std::string note = "largest generator subsets with a 1-dimensional invariant space: ";
        for (std::size_t t = 0; t < hits.size(); ++t) {
          if (t) note += ", ";
          note += hits[t];
        }
        rep.discrepancy_notes.push_back(note);
        break;
      }
    }
    if (!rep.fallback_labels.empty()) {
      std::string note = "downstream suites should run on the unipotent subgroup ";
      std::vector<int> idx;
      for (int g = 0; g < gens.count(); ++g) {
        const auto k = unipotency_index(gens.matrix(g));
        if (k && *k >= 2) idx.push_back(g);
      }
      rep.discrepancy_notes.push_back(note + label_set(gens, idx));
    }
  }

  if (relation_max_len > 0) rep.relations = find_relations(gens, relation_max_len);
  return rep;
}

}  // namespace g2lyap
