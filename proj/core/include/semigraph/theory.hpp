#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semigraph/metric_dim.hpp"
#include "semigraph/product.hpp"

namespace semigraph {

enum class TheoryCase { Trivial, AllBoolean, Generic, Haupt1, Haupt2, Unsupported };

const char* case_name(TheoryCase c);

struct ClassifyOptions {
  // The two-sided hypothesis for the one-RTYPE case: default accepts
  // m + n_z >= 1, strict demands m >= 1 and n_z >= 1. See classify_product.
  bool strict_haupt2 = false;
};

struct CasePrediction {
  TheoryCase kind = TheoryCase::Unsupported;
  int n_total = 0;
  int m = 0;                // BOOL factor count
  int n_z = 0;              // ZTYPE factor count
  std::uint64_t z_count = 0;  // |Z(S)|
  std::uint64_t s_count = 0;  // |S|
  int r_order = 0;          // |R| when one RTYPE factor is present
  std::optional<int> predicted_dim;
  std::vector<std::string> hypothesis_notes;
};

// supp(S): the tuples with every coordinate in {0,1}; 2^n of them.
std::vector<Element> support(const ProductSemiring& p);

// |Z(S)| - 2^n + 1. Can be <= 0; reported as-is.
long long lower_bound(const ProductSemiring& p);

// Decide which dimension formula governs the product. First match wins and
// the answer is invariant under factor reordering:
//   (a) |Z(S)| = 1                                 -> TRIVIAL, dim 0
//   (b) every factor BOOL                          -> ALL_BOOLEAN, n>=3: n, n=2: 1
//   (c) every i has z_i >= 2 or some other u_j >= 2 -> GENERIC, |Z|-2^n+1
//   (d) factors all BOOL/ZTYPE, m>=1, n_z>=1       -> HAUPT1, |Z|-2^(m+n_z)+m+1
//   (e) one RTYPE, rest BOOL/ZTYPE, m+n_z>=1       -> HAUPT2, |Z|-2^(m+n_z+1)+2
//   (f) otherwise UNSUPPORTED (not expected to be reachable on admissible
//       input under the default options; reaching it is itself a finding)
CasePrediction classify_product(const ProductSemiring& p, const ClassifyOptions& opt = {});

// predicted_dim of the classification; throws UnsupportedCaseError on (f).
int predict_dimension(const ProductSemiring& p, const ClassifyOptions& opt = {});

// The proof-shaped sets behind each formula, all in the user's factor order.
// m_classes[i] collects the zero divisors whose per-coordinate zero-divisor
// pattern equals m_masks[i] (bit j = coordinate j is a zero divisor).
struct WitnessConstruction {
  std::vector<std::uint32_t> m_masks;
  std::vector<std::vector<Element>> m_classes;
  std::vector<Element> punctured_union;  // each class minus its least element
  std::vector<Element> twin_set;         // members of non-singleton classes
  std::vector<Element> no_twin_set;      // members of singleton classes
  std::vector<Element> t_prime;          // twin_set minus supp(S)
  std::vector<Element> t_dprime;         // the handful of support tuples added back
  std::vector<Element> witness;          // final W, ascending
};

// Builds the resolving set the relevant proof exhibits; |W| always equals
// the predicted dimension. TRIVIAL yields an empty W.
WitnessConstruction construct_witness(const ProductSemiring& p, const CasePrediction& c);

enum class EntryStatus { Ok, Mismatch, Skipped, HypothesisViolation, Unsupported };

const char* status_name(EntryStatus s);

struct CampaignEntry {
  std::string name;
  std::vector<SemiringTable> factors;
};

struct CampaignOptions {
  bool use_oracle = true;
  ClassifyOptions classify;
  int threads = 0;      // entries run in parallel; report order is input order
  int graph_cap = kGraphCap;
  int oracle_cap = kOracleCap;
};

struct CampaignRow {
  std::string product;
  EntryStatus status = EntryStatus::Ok;
  TheoryCase kind = TheoryCase::Unsupported;
  int m = 0;
  int n_z = 0;
  std::uint64_t z_count = 0;
  std::optional<int> predicted, exact, oracle;
  bool witness_ok = false;
  bool bound_ok = false;
  bool twin_ok = false;  // pattern partition == graph twin partition
  std::vector<std::string> notes;
};

struct CampaignReport {
  std::vector<CampaignRow> rows;
  int ok = 0, mismatches = 0, skipped = 0, violations = 0, unsupported = 0;
  bool clean() const { return mismatches == 0 && violations == 0 && unsupported == 0; }
};

// Classifies, solves, and cross-checks every entry: predicted vs exact vs
// oracle dimension, witness validity, the lower bound, twin-class discipline
// of solver witnesses, pattern-vs-graph twin agreement, and pattern-based
// adjacency vs the materialized table's.
CampaignReport verify_campaign(const std::vector<CampaignEntry>& entries,
                               const CampaignOptions& opt = {});

std::string render_text(const CampaignReport& report);
std::string render_csv(const CampaignReport& report);

// Every product of up to 3 factors from {BOOL, CHAIN_3, T3, BXMODX2} with
// |Z(S)| <= 20, unordered, in enumeration order.
std::vector<CampaignEntry> default_campaign();

}  // namespace semigraph
