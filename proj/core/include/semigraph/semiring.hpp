#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semigraph/errors.hpp"

// Finite semirings given by explicit operation tables.
//
// Index convention: elements are 0..order-1 where index 0 is the additive
// identity and index 1 is the multiplicative identity.  Loaders re-index
// inputs that place the identities elsewhere (normalize_identities); every
// routine past the loaders assumes the convention holds.

namespace semigraph {

struct SemiringTable {
  int order = 0;                       // q >= 2; indices 0 and 1 are distinct
  std::vector<std::vector<int>> add;   // q x q, entries in [0, q)
  std::vector<std::vector<int>> mul;   // q x q, entries in [0, q)
  std::vector<std::string> labels;     // display names; empty or size q

  std::string label(int i) const;
};

// True when order, add and mul coincide (labels are ignored).
bool same_tables(const SemiringTable& a, const SemiringTable& b);

// Shape and range checks; throws FormatError. Does not check axioms.
void validate_structure(const SemiringTable& t);

// Re-index so the additive identity sits at 0 and the multiplicative
// identity at 1, when such elements exist. Tables without one or both
// identities are returned otherwise unchanged; the axiom checker then
// reports the failure against the convention.
SemiringTable normalize_identities(SemiringTable t);

enum class Axiom : int {
  AddAssoc = 0,
  AddComm,
  AddIdentity,       // add[0][i] == i == add[i][0]
  MulAssoc,
  MulIdentity,       // mul[1][i] == i == mul[i][1]
  DistLeft,          // a(b+c) == ab + ac
  DistRight,         // (a+b)c == ac + bc
  ZeroAnnihilates,   // mul[0][i] == 0 == mul[i][0]
  MulComm,
  Antinegative,      // a+b == 0 implies a == b == 0
  ZClosed,           // Z(S) closed under addition
};
inline constexpr int kAxiomCount = 11;

const char* axiom_name(Axiom a);

struct AxiomVerdict {
  bool pass = true;
  std::vector<int> counterexample;  // element indices; empty iff pass
};

struct AxiomReport {
  std::array<AxiomVerdict, kAxiomCount> verdicts;

  const AxiomVerdict& at(Axiom a) const { return verdicts[static_cast<int>(a)]; }
  bool core_semiring() const;  // the eight structural axioms, AddAssoc..ZeroAnnihilates
  bool admissible() const;     // all eleven
};

// Exhaustive check of every axiom; each failing verdict carries the first
// counterexample in lexicographic scan order.
AxiomReport verify_axioms(const SemiringTable& t);

// Re-evaluates one axiom at one tuple. Returns false when the tuple
// violates the axiom, so a reported counterexample must yield false.
bool axiom_holds_at(const SemiringTable& t, Axiom a, const std::vector<int>& tuple);

struct PairCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> witness;  // first failing pair
};

PairCheck is_antinegative(const SemiringTable& t);

// Z(S) = elements x with xy = 0 or yx = 0 for some y != 0, ascending.
std::vector<int> zero_divisors(const SemiringTable& t);

// Closure of Z(S) under addition; witness is the first pair a,b in Z
// with a+b outside Z.
PairCheck is_zclosed(const SemiringTable& t);

// Built-in tables: "BOOL", "CHAIN_k" (k >= 2, chain lattice, add = join,
// mul = meet), "TRUNC_k" (k >= 2, naturals truncated at k-1), "BXMODX2"
// (Boolean coefficients mod x^2), "T3" ({0,a,1} with a+a=a, a*a=0).
SemiringTable catalog(const std::string& name);

struct EnumerationFilters {
  bool commutative = true;   // multiplication commutes
  bool antinegative = true;
  bool zclosed = true;
};

// Emits every operation-table pair on 2..4 elements satisfying the eight
// structural axioms and the requested filters, under the fixed identity
// convention. Deterministic lexicographic order on the concatenated add
// and mul tables; isomorphic duplicates are not removed.
void enumerate_semirings(int order, const EnumerationFilters& filters,
                         const std::function<void(const SemiringTable&)>& emit);
std::vector<SemiringTable> enumerate_semirings(int order,
                                               const EnumerationFilters& filters = {});

}  // namespace semigraph
