#include "doctest.h"

#include <algorithm>

#include "semigraph/metric_dim.hpp"
#include "semigraph/theory.hpp"

using namespace semigraph;

namespace {

ProductSemiring make(const std::vector<std::string>& names) {
  std::vector<SemiringTable> fs;
  for (const std::string& n : names) fs.push_back(catalog(n));
  return direct_product(std::move(fs));
}

int solve(const ProductSemiring& p) { return metric_dimension_exact(build_total_graph(p)).dimension; }

}  // namespace

TEST_CASE("single factors classify by their zero-divisor structure") {
  CasePrediction c = classify_product(make({"BOOL"}));
  CHECK(c.kind == TheoryCase::Trivial);
  CHECK(c.predicted_dim == 0);
  CHECK(!c.hypothesis_notes.empty());  // |S|=2 is the edge of the trivial case

  c = classify_product(make({"CHAIN_3"}));
  CHECK(c.kind == TheoryCase::Trivial);
  CHECK(c.predicted_dim == 0);

  c = classify_product(make({"T3"}));
  CHECK(c.kind == TheoryCase::Generic);
  CHECK(c.z_count == 2);
  CHECK(c.predicted_dim == 1);

  c = classify_product(make({"BXMODX2"}));
  CHECK(c.kind == TheoryCase::Generic);
  CHECK(c.predicted_dim == 1);
}

TEST_CASE("all-Boolean products have a closed-form dimension") {
  CasePrediction c = classify_product(make({"BOOL", "BOOL"}));
  CHECK(c.kind == TheoryCase::AllBoolean);
  CHECK(c.predicted_dim == 1);

  c = classify_product(make({"BOOL", "BOOL", "BOOL"}));
  CHECK(c.kind == TheoryCase::AllBoolean);
  CHECK(c.predicted_dim == 3);

  c = classify_product(make({"BOOL", "BOOL", "BOOL", "BOOL"}));
  CHECK(c.predicted_dim == 4);
  CHECK(c.z_count == 15);
}

TEST_CASE("products with large factors fall in the generic case") {
  const CasePrediction c = classify_product(make({"CHAIN_3", "TRUNC_3"}));
  CHECK(c.kind == TheoryCase::Generic);
  CHECK(c.s_count == 9);
  CHECK(c.z_count == 5);  // 9 elements minus the 2*2 unit grid
  CHECK(c.predicted_dim == 2);
  CHECK(solve(make({"CHAIN_3", "TRUNC_3"})) == 2);
}

TEST_CASE("one-sided mixes classify the same in either factor order") {
  for (const auto& names : std::vector<std::vector<std::string>>{
           {"BOOL", "CHAIN_3"}, {"CHAIN_3", "BOOL"}}) {
    const CasePrediction c = classify_product(make(names));
    CHECK(c.kind == TheoryCase::Haupt2);
    CHECK(c.m == 1);
    CHECK(c.n_z == 0);
    CHECK(c.predicted_dim == 2);
    CHECK(!c.hypothesis_notes.empty());
  }
  for (const auto& names : std::vector<std::vector<std::string>>{
           {"BOOL", "T3"}, {"T3", "BOOL"}}) {
    const CasePrediction c = classify_product(make(names));
    CHECK(c.kind == TheoryCase::Haupt1);
    CHECK(c.m == 1);
    CHECK(c.n_z == 1);
    CHECK(c.predicted_dim == 3);
  }
}

TEST_CASE("a single chain factor beside small ones lands in the mixed case") {
  const CasePrediction c = classify_product(make({"CHAIN_3", "T3"}));
  CHECK(c.kind == TheoryCase::Haupt2);
  CHECK(c.m == 0);
  CHECK(c.n_z == 1);
  CHECK(c.r_order == 3);
  CHECK(c.z_count == 7);
  CHECK(c.predicted_dim == 5);
  CHECK(solve(make({"CHAIN_3", "T3"})) == 5);
}

TEST_CASE("the strict reading rejects one-sided mixes") {
  ClassifyOptions strict;
  strict.strict_haupt2 = true;

  const CasePrediction c = classify_product(make({"BOOL", "CHAIN_3"}), strict);
  CHECK(c.kind == TheoryCase::Unsupported);
  CHECK(!c.predicted_dim.has_value());
  CHECK_THROWS_AS(predict_dimension(make({"BOOL", "CHAIN_3"}), strict), UnsupportedCaseError);

  // A two-sided mix stays supported under both readings.
  const CasePrediction two = classify_product(make({"BOOL", "CHAIN_3", "T3"}), strict);
  CHECK(two.kind == TheoryCase::Haupt2);
  CHECK(two.predicted_dim == 10);
  CHECK(predict_dimension(make({"BOOL", "T3"}), strict) == 3);
}

TEST_CASE("support tuples are the zero-one grid") {
  const std::vector<Element> s = support(make({"BOOL", "T3"}));
  CHECK(s == std::vector<Element>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("the subset bound never exceeds the solved dimension") {
  for (const auto& names : std::vector<std::vector<std::string>>{
           {"BOOL", "BOOL"}, {"BOOL", "T3"}, {"CHAIN_3", "T3"}, {"T3", "T3"}}) {
    const ProductSemiring p = make(names);
    CHECK(lower_bound(p) <= solve(p));
  }
  CHECK(lower_bound(make({"BOOL", "BOOL"})) == 0);
  CHECK(lower_bound(make({"T3", "T3"})) == 5);
}

TEST_CASE("witness construction reproduces the predicted size and resolves") {
  for (const auto& names : std::vector<std::vector<std::string>>{
           {"T3"},
           {"BOOL", "BOOL"},
           {"BOOL", "T3"},
           {"BOOL", "CHAIN_3"},
           {"CHAIN_3", "T3"},
           {"CHAIN_3", "CHAIN_3"},
           {"BOOL", "BOOL", "T3"},
           {"BOOL", "CHAIN_3", "T3"},
           {"BXMODX2", "BXMODX2"}}) {
    const ProductSemiring p = make(names);
    const CasePrediction c = classify_product(p);
    REQUIRE(c.predicted_dim.has_value());
    const WitnessConstruction w = construct_witness(p, c);
    INFO("factors " << names.size());
    CHECK(static_cast<int>(w.witness.size()) == *c.predicted_dim);
    CHECK(std::is_sorted(w.witness.begin(), w.witness.end()));

    const Graph g = build_total_graph(p);
    std::vector<int> W;
    for (const Element& e : w.witness) {
      const int v = g.index_of(e);
      REQUIRE(v >= 0);
      W.push_back(v);
    }
    std::sort(W.begin(), W.end());
    CHECK(is_resolving(g, W).resolving);
  }
}

TEST_CASE("witness pieces fit together") {
  // For BOOL x T3 the non-singleton pattern classes contribute (0,a) and
  // (1,a); the singleton grid classes are put back through one support tuple.
  const ProductSemiring p = make({"BOOL", "T3"});
  const WitnessConstruction w = construct_witness(p, classify_product(p));
  CHECK(w.t_prime == std::vector<Element>{{0, 2}, {1, 2}});
  CHECK(w.t_dprime == std::vector<Element>{{0, 1}});
  CHECK(w.witness == std::vector<Element>{{0, 1}, {0, 2}, {1, 2}});

  // Every pattern class is nonempty and they partition the zero divisors.
  std::size_t total = 0;
  for (const auto& cls : w.m_classes) {
    CHECK(!cls.empty());
    total += cls.size();
  }
  CHECK(total == product_zero_divisors(p).count);
}

TEST_CASE("generic witnesses drop one representative per class") {
  const ProductSemiring p = make({"CHAIN_3", "CHAIN_3"});
  const WitnessConstruction w = construct_witness(p, classify_product(p));
  CHECK(w.witness == std::vector<Element>{{0, 2}, {2, 0}});

  // The textbook alternative set resolves too; ours is just the canonical one.
  const Graph g = build_total_graph(p);
  CHECK(is_resolving(g, {g.index_of({0, 2}), g.index_of({2, 0})}).resolving);
  const ResolvingSetResult o = metric_dimension_oracle(g);
  CHECK(o.dimension == 2);
  CHECK(o.witness == std::vector<int>{g.index_of({0, 1}), g.index_of({1, 0})});
}

TEST_CASE("campaign rows agree with hand-solved dimensions") {
  const std::vector<CampaignEntry> entries = {
      {"pair", {catalog("BOOL"), catalog("T3")}},
      {"chain", {catalog("CHAIN_3"), catalog("CHAIN_3")}},
      {"bool-pair", {catalog("BOOL"), catalog("BOOL")}},
  };
  const CampaignReport rep = verify_campaign(entries);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.clean());
  CHECK(rep.ok == 3);

  const CampaignRow& r0 = rep.rows[0];
  CHECK(r0.product == "pair");
  CHECK(r0.kind == TheoryCase::Haupt1);
  CHECK(r0.predicted == 3);
  CHECK(r0.exact == 3);
  CHECK(r0.oracle == 3);
  CHECK(r0.witness_ok);
  CHECK(r0.bound_ok);
  CHECK(r0.twin_ok);
  CHECK(r0.status == EntryStatus::Ok);

  // BOOL x BOOL is the one admissible product whose pattern classes merge
  // in the graph; the mismatch is reported truthfully but not failed.
  const CampaignRow& r2 = rep.rows[2];
  CHECK(r2.status == EntryStatus::Ok);
  CHECK(!r2.twin_ok);
  bool flagged = false;
  for (const auto& n : r2.notes) flagged = flagged || n.find("flagged") != std::string::npos;
  CHECK(flagged);
}

TEST_CASE("campaign flags genuine prediction mismatches") {
  // A non-admissible factor must surface as a hypothesis violation.
  SemiringTable z2;
  z2.order = 2;
  z2.add = {{0, 1}, {1, 0}};
  z2.mul = {{0, 0}, {0, 1}};
  const std::vector<CampaignEntry> entries = {{"ring", {z2}}};
  const CampaignReport rep = verify_campaign(entries);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].status == EntryStatus::HypothesisViolation);
  CHECK(rep.violations == 1);
  CHECK(!rep.clean());
}

TEST_CASE("campaign respects the oracle switch and thread count") {
  const std::vector<CampaignEntry> entries = {{"pair", {catalog("BOOL"), catalog("T3")}}};
  CampaignOptions opt;
  opt.use_oracle = false;
  const CampaignReport rep = verify_campaign(entries, opt);
  CHECK(!rep.rows[0].oracle.has_value());
  CHECK(rep.rows[0].exact == 3);
  CHECK(rep.clean());

  CampaignOptions threaded;
  threaded.threads = 3;
  const CampaignReport a = verify_campaign(default_campaign(), threaded);
  CHECK(a.clean());
  CHECK(render_csv(a) == render_csv(verify_campaign(default_campaign())));
}

TEST_CASE("csv rendering is stable") {
  const CampaignReport rep = verify_campaign({{"pair", {catalog("BOOL"), catalog("T3")}}});
  const std::string csv = render_csv(rep);
  CHECK(csv ==
        "product,case,m,n_z,z_count,predicted,exact,oracle,witness_ok,bound_ok,notes\n"
        "pair,HAUPT1,1,1,5,3,3,3,true,true,\n");
  const std::string text = render_text(rep);
  CHECK(text.find("entries=1 ok=1 mismatches=0") != std::string::npos);
}

TEST_CASE("the built-in campaign covers every case and stays small") {
  const std::vector<CampaignEntry> entries = default_campaign();
  CHECK(entries.size() == 23);
  bool trivial = false, boolean = false, generic = false, h1 = false, h2 = false;
  for (const CampaignEntry& e : entries) {
    ProductSemiring p = direct_product(e.factors);
    CHECK(product_zero_divisors(p).count <= 20);
    switch (classify_product(p).kind) {
      case TheoryCase::Trivial: trivial = true; break;
      case TheoryCase::AllBoolean: boolean = true; break;
      case TheoryCase::Generic: generic = true; break;
      case TheoryCase::Haupt1: h1 = true; break;
      case TheoryCase::Haupt2: h2 = true; break;
      case TheoryCase::Unsupported: break;
    }
  }
  CHECK(trivial);
  CHECK(boolean);
  CHECK(generic);
  CHECK(h1);
  CHECK(h2);
}
