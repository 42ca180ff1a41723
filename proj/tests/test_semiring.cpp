#include "doctest.h"

#include <algorithm>

#include "semigraph/semiring.hpp"

using namespace semigraph;

namespace {

// Re-index t by p (new index of old element i is p[i]).
SemiringTable permute(const SemiringTable& t, const std::vector<int>& p) {
  SemiringTable out;
  out.order = t.order;
  out.add.assign(t.order, std::vector<int>(t.order, 0));
  out.mul.assign(t.order, std::vector<int>(t.order, 0));
  if (!t.labels.empty()) out.labels.resize(t.labels.size());
  for (int i = 0; i < t.order; ++i) {
    if (!t.labels.empty()) out.labels[p[i]] = t.labels[i];
    for (int j = 0; j < t.order; ++j) {
      out.add[p[i]][p[j]] = p[t.add[i][j]];
      out.mul[p[i]][p[j]] = p[t.mul[i][j]];
    }
  }
  return out;
}

SemiringTable z2_ring() {
  SemiringTable t;
  t.order = 2;
  t.add = {{0, 1}, {1, 0}};
  t.mul = {{0, 0}, {0, 1}};
  return t;
}

}  // namespace

TEST_CASE("catalog tables satisfy every axiom") {
  for (const char* name : {"BOOL", "CHAIN_3", "CHAIN_4", "TRUNC_3", "TRUNC_4", "BXMODX2", "T3"}) {
    const SemiringTable t = catalog(name);
    const AxiomReport r = verify_axioms(t);
    for (int i = 0; i < kAxiomCount; ++i) {
      INFO(name << " / " << axiom_name(static_cast<Axiom>(i)));
      CHECK(r.verdicts[i].pass);
      CHECK(r.verdicts[i].counterexample.empty());
    }
    CHECK(r.core_semiring());
    CHECK(r.admissible());
  }
}

TEST_CASE("catalog BOOL is the two-element lattice") {
  const SemiringTable b = catalog("BOOL");
  CHECK(b.order == 2);
  CHECK(b.add == std::vector<std::vector<int>>{{0, 1}, {1, 1}});
  CHECK(b.mul == std::vector<std::vector<int>>{{0, 0}, {0, 1}});
  // CHAIN_2 is the same lattice under another name.
  CHECK(same_tables(catalog("CHAIN_2"), b));
  CHECK(!same_tables(catalog("T3"), b));
}

TEST_CASE("catalog zero-divisor sets") {
  CHECK(zero_divisors(catalog("BOOL")) == std::vector<int>{0});
  CHECK(zero_divisors(catalog("CHAIN_3")) == std::vector<int>{0});
  CHECK(zero_divisors(catalog("TRUNC_4")) == std::vector<int>{0});
  CHECK(zero_divisors(catalog("T3")) == std::vector<int>{0, 2});
  CHECK(zero_divisors(catalog("BXMODX2")) == std::vector<int>{0, 2});
}

TEST_CASE("catalog rejects unknown names and bad parameters") {
  CHECK_THROWS_AS(catalog("NOPE"), FormatError);
  CHECK_THROWS_AS(catalog("CHAIN_1"), FormatError);
  CHECK_THROWS_AS(catalog("TRUNC_x"), FormatError);
  CHECK_THROWS_AS(catalog("CHAIN_9999"), CapError);
}

TEST_CASE("structure validation pinpoints the bad cell") {
  SemiringTable t = catalog("T3");
  t.add[1].pop_back();
  CHECK_THROWS_WITH_AS(validate_structure(t), doctest::Contains("add[1] has 2 entries"),
                       FormatError);

  t = catalog("T3");
  t.mul[2][1] = 7;
  CHECK_THROWS_WITH_AS(validate_structure(t), doctest::Contains("mul[2][1] = 7 out of range"),
                       FormatError);

  t = catalog("T3");
  t.labels = {"0", "1"};
  CHECK_THROWS_AS(validate_structure(t), FormatError);
}

TEST_CASE("identity normalization finds and moves both identities") {
  // Swapped two-element lattice: additive identity at 1, multiplicative at 0.
  SemiringTable swapped;
  swapped.order = 2;
  swapped.add = {{0, 0}, {0, 1}};
  swapped.mul = {{0, 1}, {1, 1}};
  swapped.labels = {"one", "zero"};
  const SemiringTable fixed = normalize_identities(swapped);
  CHECK(same_tables(fixed, catalog("BOOL")));
  CHECK(fixed.labels == std::vector<std::string>{"zero", "one"});

  const SemiringTable scrambled = permute(catalog("T3"), {1, 2, 0});
  CHECK(!same_tables(scrambled, catalog("T3")));
  const SemiringTable back = normalize_identities(scrambled);
  CHECK(same_tables(back, catalog("T3")));
  CHECK(back.labels == catalog("T3").labels);
}

TEST_CASE("normalization leaves identity-free tables alone") {
  SemiringTable t;
  t.order = 2;
  t.add = {{1, 1}, {1, 1}};  // no additive identity exists
  t.mul = {{0, 0}, {0, 1}};
  const SemiringTable out = normalize_identities(t);
  CHECK(same_tables(out, t));
  CHECK(!verify_axioms(out).at(Axiom::AddIdentity).pass);
}

TEST_CASE("failing axioms come with a genuine counterexample") {
  SemiringTable t = catalog("T3");
  t.add[2][2] = 1;  // a+a=1 wrecks distributivity and zero-divisor closure
  const AxiomReport r = verify_axioms(t);
  CHECK(!r.admissible());
  CHECK(!r.at(Axiom::DistLeft).pass);
  CHECK(!r.at(Axiom::ZClosed).pass);
  for (int i = 0; i < kAxiomCount; ++i) {
    const auto ax = static_cast<Axiom>(i);
    if (r.verdicts[i].pass) continue;
    INFO(axiom_name(ax));
    CHECK(!r.verdicts[i].counterexample.empty());
    // The reported tuple must actually violate the axiom it is blamed on.
    CHECK(!axiom_holds_at(t, ax, r.verdicts[i].counterexample));
  }
}

TEST_CASE("identity axioms are checked against the fixed positions") {
  SemiringTable t = catalog("T3");
  t.mul[1][2] = 0;
  const AxiomReport r = verify_axioms(t);
  CHECK(!r.at(Axiom::MulIdentity).pass);
  CHECK(!axiom_holds_at(t, Axiom::MulIdentity, r.at(Axiom::MulIdentity).counterexample));
}

TEST_CASE("rings with additive inverses are not antinegative") {
  const SemiringTable t = z2_ring();
  const PairCheck pc = is_antinegative(t);
  CHECK(!pc.ok);
  REQUIRE(pc.witness.has_value());
  CHECK(*pc.witness == std::pair<int, int>{1, 1});
  CHECK(!verify_axioms(t).admissible());
  CHECK(verify_axioms(t).core_semiring());
}

TEST_CASE("enumeration of order two finds exactly the Boolean table") {
  const auto all = enumerate_semirings(2);
  REQUIRE(all.size() == 1);
  CHECK(same_tables(all[0], catalog("BOOL")));
}

TEST_CASE("enumeration of order three is deterministic and admissible") {
  const auto all = enumerate_semirings(3);
  CHECK(all.size() == 5);

  bool saw_t3 = false, saw_chain = false;
  for (const SemiringTable& t : all) {
    CHECK(verify_axioms(t).admissible());
    saw_t3 = saw_t3 || same_tables(t, catalog("T3"));
    saw_chain = saw_chain || same_tables(t, catalog("CHAIN_3"));
  }
  CHECK(saw_t3);
  CHECK(saw_chain);

  // Emission order is lexicographic on the concatenated tables.
  auto key = [](const SemiringTable& t) {
    std::vector<int> k;
    for (const auto& row : t.add) k.insert(k.end(), row.begin(), row.end());
    for (const auto& row : t.mul) k.insert(k.end(), row.begin(), row.end());
    return k;
  };
  for (size_t i = 1; i < all.size(); ++i) CHECK(key(all[i - 1]) < key(all[i]));

  const auto again = enumerate_semirings(3);
  REQUIRE(again.size() == all.size());
  for (size_t i = 0; i < all.size(); ++i) CHECK(same_tables(all[i], again[i]));
}

TEST_CASE("enumeration filters relax the roster") {
  EnumerationFilters relaxed;
  relaxed.antinegative = false;
  relaxed.zclosed = false;
  const auto all = enumerate_semirings(3, relaxed);
  CHECK(all.size() == 6);

  // The extra table is the three-element field.
  SemiringTable f3;
  f3.order = 3;
  f3.add = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  f3.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  int hits = 0;
  for (const SemiringTable& t : all) hits += same_tables(t, f3);
  CHECK(hits == 1);

  EnumerationFilters noncomm;
  noncomm.commutative = false;
  CHECK(enumerate_semirings(3, noncomm).size() >= 5);
}

TEST_CASE("enumeration count of order four is stable") {
  CHECK(enumerate_semirings(4).size() == 58);
}

TEST_CASE("enumeration caps out past order four") {
  CHECK_THROWS_AS(enumerate_semirings(5), CapError);
  CHECK_THROWS_AS(enumerate_semirings(1), CapError);
}
