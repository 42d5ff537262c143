#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "g2lyap/monodromy_dataset.hpp"

using namespace g2lyap;

namespace {

CocycleGenerators reorder(const CocycleGenerators& ds, const std::vector<int>& perm) {
  CocycleGenerators out = ds;
  out.generators.clear();
  for (int i : perm) out.generators.push_back(ds.generators[i]);
  return out;
}

// flips one entry of one generator, keeping it invertible
CocycleGenerators corrupted_g2() {
  const std::string text = builtin_dataset_text("g2-elliptic-surface");
  nlohmann::json j = nlohmann::json::parse(text);
  for (auto& g : j.at("generators"))
    if (g.at("label") == "M_0") g.at("rows")[0][0] = g.at("rows")[0][0].get<long long>() + 1;
  return parse_dataset_text(j.dump());
}

}  // namespace

TEST_SUITE_BEGIN("monodromy-dataset");

TEST_CASE("fnv1a64 reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("builtin catalog") {
  const auto names = builtin_dataset_names();
  REQUIRE(names.size() == 2);
  CHECK(names[0] == "g2-elliptic-surface");
  CHECK(names[1] == "sl2-sanity");
  CHECK_THROWS_AS(load_builtin("no-such-dataset"), DatasetError);
}

TEST_CASE("rank-7 dataset loads with the expected metadata") {
  const CocycleGenerators ds = load_builtin("g2-elliptic-surface");
  CHECK(ds.dim == 7);
  REQUIRE(ds.count() == 4);
  CHECK(ds.label(0) == "M_plus");
  CHECK(ds.label(1) == "M_minus");
  CHECK(ds.label(2) == "M_0");
  CHECK(ds.label(3) == "M_inf");
  CHECK(ds.metadata.genus == 0);
  CHECK(ds.metadata.punctures == 4);
  CHECK(ds.metadata.hodge_numbers == std::vector<int>{2, 3, 2});
  CHECK(ds.metadata.weight() == 2);
  CHECK(ds.checksum == 0x13d0a01f7566dca2ULL);
  for (int g = 0; g < ds.count(); ++g) CHECK(ds.matrix(g).determinant() == 1);
}

TEST_CASE("dataset text round-trips bit-exactly") {
  for (const auto& name : builtin_dataset_names()) {
    const CocycleGenerators a = load_builtin(name);
    const CocycleGenerators b = parse_dataset_text(builtin_dataset_text(name));
    REQUIRE(a.count() == b.count());
    CHECK(a.checksum == b.checksum);
    for (int g = 0; g < a.count(); ++g) {
      CHECK(a.label(g) == b.label(g));
      CHECK(a.matrix(g) == b.matrix(g));
    }
  }
}

TEST_CASE("first generator differs from identity exactly in two entries") {
  const CocycleGenerators ds = load_builtin("g2-elliptic-surface");
  const ExactMatrix n = ds.matrix(0) - ExactMatrix::identity(7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      const bool support = (i == 0 && j == 2) || (i == 1 && j == 3);  // (1,3), (2,4) one-based
      CHECK((n(i, j) != 0) == support);
    }
}

TEST_CASE("unipotency indices") {
  const CocycleGenerators ds = load_builtin("g2-elliptic-surface");
  CHECK(unipotency_index(ds.matrix(0)) == 2);
  CHECK(unipotency_index(ds.matrix(1)) == 2);
  CHECK(unipotency_index(ds.matrix(2)) == std::nullopt);
  CHECK(unipotency_index(ds.matrix(3)) == std::nullopt);
  CHECK(ds.matrix(2) * ds.matrix(2) == ExactMatrix::identity(7));  // an involution

  CHECK(unipotency_index(ExactMatrix::identity(3)) == 1);
  CHECK(unipotency_index(ExactMatrix{{2, 0}, {0, 1}}) == std::nullopt);
  CHECK(unipotency_index(ExactMatrix{{1, 1}, {0, 1}}) == 2);
}

TEST_CASE("sl2 sanity pair") {
  const CocycleGenerators ds = load_builtin("sl2-sanity");
  CHECK(ds.dim == 2);
  REQUIRE(ds.count() == 2);
  CHECK(ds.checksum == 0xc595b3ffc54f3553ULL);
  for (int g = 0; g < 2; ++g) {
    CHECK(ds.matrix(g).determinant() == 1);
    CHECK(unipotency_index(ds.matrix(g)) == 2);
  }
  // free pair: no short relations
  CHECK(find_relations(ds, 6).empty());
}

TEST_CASE("verification certifies the rank-7 dataset") {
  const CocycleGenerators ds = load_builtin("g2-elliptic-surface");
  const VerificationReport rep = verify_invariance(ds);
  CHECK(rep.certified);
  CHECK(rep.dataset == "g2-elliptic-surface");
  CHECK(rep.dim == 7);
  CHECK(rep.weight == 2);
  CHECK(rep.polarization_symmetry == "symmetric");
  CHECK(rep.bilinear_symmetric_dim == 1);
  CHECK(rep.bilinear_antisymmetric_dim == 0);
  CHECK(rep.trilinear_dim == 1);
  REQUIRE(rep.form_signature.has_value());
  CHECK(rep.form_signature->positive == 4);
  CHECK(rep.form_signature->zero == 0);
  CHECK(rep.form_signature->negative == 3);
  CHECK_FALSE(rep.form_sign_flipped);
  CHECK(rep.discrepancy_notes.empty());
  REQUIRE(rep.generators.size() == 4);
  for (const auto& g : rep.generators) {
    CHECK(g.determinant == "1");
    CHECK(g.invariance_residual_zero);
  }
  CHECK(rep.fallback_labels == std::vector<std::string>{"M_plus", "M_minus"});
}

TEST_CASE("verification is order-independent") {
  const CocycleGenerators ds = load_builtin("g2-elliptic-surface");
  const VerificationReport a = verify_invariance(ds);
  const VerificationReport b = verify_invariance(reorder(ds, {3, 1, 0, 2}));
  CHECK(a.certified == b.certified);
  CHECK(a.bilinear_symmetric_dim == b.bilinear_symmetric_dim);
  CHECK(a.bilinear_antisymmetric_dim == b.bilinear_antisymmetric_dim);
  CHECK(a.trilinear_dim == b.trilinear_dim);
  REQUIRE(b.form_signature.has_value());
  CHECK(*a.form_signature == *b.form_signature);
  CHECK(*a.bilinear_form == *b.bilinear_form);
}

TEST_CASE("sl2 verification uses the antisymmetric side") {
  const VerificationReport rep = verify_invariance(load_builtin("sl2-sanity"));
  CHECK(rep.certified);
  CHECK(rep.weight == 1);
  CHECK(rep.polarization_symmetry == "antisymmetric");
  CHECK(rep.bilinear_antisymmetric_dim == 1);
  CHECK_FALSE(rep.form_signature.has_value());
  CHECK_FALSE(rep.trilinear_dim.has_value());
}

TEST_CASE("relation search finds the puncture product relation") {
  const CocycleGenerators ds = load_builtin("g2-elliptic-surface");
  const auto relations = find_relations(ds, 4);
  REQUIRE(relations.size() == 32);
  for (const auto& r : relations) CHECK(r.sign == 1);
  CHECK(relations.front().word == std::vector<int>{3, 3});
  const auto has = [&](const std::vector<int>& w) {
    return std::any_of(relations.begin(), relations.end(),
                       [&](const Relation& r) { return r.word == w; });
  };
  CHECK(has({-3, -3}));
  CHECK(has({1, 4, 2, 3}));  // M_plus * M_inf * M_minus * M_0 = identity
  // sorted by length, then by the +1 < -1 < +2 < ... symbol order
  for (std::size_t i = 1; i < relations.size(); ++i)
    CHECK(relations[i - 1].word.size() <= relations[i].word.size());
}

TEST_CASE("relation search on a constructed inverse pair") {
  CocycleGenerators ds;
  ds.name = "toy";
  ds.dim = 2;
  ds.generators.emplace_back("A", ExactMatrix{{1, 1}, {0, 1}});
  ds.generators.emplace_back("B", ExactMatrix{{1, -1}, {0, 1}});  // A inverse under a new label
  const auto relations = find_relations(ds, 2);
  REQUIRE(relations.size() == 4);
  CHECK(relations[0].word == std::vector<int>{1, 2});
  CHECK(relations[1].word == std::vector<int>{-1, -2});
  CHECK(relations[2].word == std::vector<int>{2, 1});
  CHECK(relations[3].word == std::vector<int>{-2, -1});
  CHECK_THROWS_AS(find_relations(ds, 9), std::invalid_argument);
}

TEST_CASE("verification reports discrepancies on a corrupted dataset") {
  const CocycleGenerators bad = corrupted_g2();
  const VerificationReport rep = verify_invariance(bad);
  CHECK_FALSE(rep.certified);
  CHECK(rep.bilinear_symmetric_dim == 0);
  CHECK_FALSE(rep.discrepancy_notes.empty());
  bool names_subset = false;
  for (const auto& note : rep.discrepancy_notes)
    if (note.find("{M_plus, M_minus, M_inf}") != std::string::npos) names_subset = true;
  CHECK(names_subset);
  CHECK(rep.fallback_labels == std::vector<std::string>{"M_plus", "M_minus"});
}

TEST_CASE("fallback subgroup keeps the unipotent generators") {
  const CocycleGenerators sub = fallback_subgroup(load_builtin("g2-elliptic-surface"));
  REQUIRE(sub.count() == 2);
  CHECK(sub.label(0) == "M_plus");
  CHECK(sub.label(1) == "M_minus");
  CHECK(sub.dim == 7);
  CHECK(sub.name == "g2-elliptic-surface-unipotent-fallback");

  CocycleGenerators none;
  none.name = "none";
  none.dim = 2;
  none.generators.emplace_back("D", ExactMatrix{{2, 0}, {0, 1}});
  CHECK_THROWS_AS(fallback_subgroup(none), DatasetError);
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_AS(parse_dataset_text("not json"), DatasetError);
  CHECK_THROWS_AS(parse_dataset_text(R"({"name":"x","dim":2,"generators":[]})"), DatasetError);
  CHECK_THROWS_AS(parse_dataset_text(R"({"name":"x","dim":2,"generators":[
    {"label":"A","rows":[[1,0],[0,1]]},{"label":"A","rows":[[1,1],[0,1]]}]})"),
                  DatasetError);  // duplicate label
  CHECK_THROWS_AS(parse_dataset_text(R"({"name":"x","dim":2,"generators":[
    {"label":"A","rows":[[1,0,0],[0,1,0]]}]})"),
                  DatasetError);  // wrong shape
  CHECK_THROWS_AS(parse_dataset_text(R"({"name":"x","dim":2,"generators":[
    {"label":"A","rows":[[1,0.5],[0,1]]}]})"),
                  DatasetError);  // non-integer entry
  CHECK_THROWS_AS(parse_dataset_text(R"({"name":"x","dim":2,"generators":[
    {"label":"A","rows":[[1,2],[2,4]]}]})"),
                  DatasetError);  // singular
}

TEST_CASE("dataset files load through the same parser") {
  const std::string path = "test_dataset_tmp.json";
  {
    std::ofstream f(path);
    f << builtin_dataset_text("sl2-sanity");
  }
  const CocycleGenerators ds = load_dataset_file(path);
  CHECK(ds.name == "sl2-sanity");
  CHECK(ds.checksum == 0xc595b3ffc54f3553ULL);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_dataset_file("does-not-exist.json"), DatasetError);
}

TEST_SUITE_END();
