#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semigraph/errors.hpp"
#include "semigraph/semiring.hpp"

namespace semigraph {

// A tuple over the factors of a product, one index per coordinate.
using Element = std::vector<int>;

// Direct product of finitely many finite semirings, kept in factored form.
// Operations are componentwise; no q^2 tables are materialized unless asked.
class ProductSemiring {
 public:
  explicit ProductSemiring(std::vector<SemiringTable> factors);

  int factor_count() const { return static_cast<int>(factors_.size()); }
  const SemiringTable& factor(int i) const { return factors_[static_cast<size_t>(i)]; }
  const std::vector<SemiringTable>& factors() const { return factors_; }

  // Total number of elements as a 64-bit count (caps keep this exact).
  std::uint64_t order() const;

  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element zero() const;
  Element one() const;

  bool factor_zdiv(int i, int x) const { return zdiv_[static_cast<size_t>(i)][static_cast<size_t>(x)] != 0; }

  // Bit i set iff coordinate i is a zero divisor of its factor. Two product
  // elements are zero divisors of each other when their patterns intersect.
  std::uint32_t z_pattern(const Element& a) const;

  bool is_zero_divisor(const Element& a) const;

  std::string format(const Element& a) const;

  // Ascending enumeration index: the last coordinate varies fastest, so the
  // sequence of tuples is exactly lexicographic order.
  std::uint64_t rank(const Element& a) const;
  Element unrank(std::uint64_t r) const;

 private:
  std::vector<SemiringTable> factors_;
  std::vector<std::vector<char>> zdiv_;
};

constexpr int kMaxFactors = 30;

// Validates each factor's table shape; admissibility is checked separately.
ProductSemiring direct_product(std::vector<SemiringTable> factors);

struct MaterializedProduct {
  SemiringTable table;
  std::vector<Element> elements;  // row i of the table is elements[i]
};

// Expands the product into a single table, re-indexed so the all-zero tuple
// sits at 0 and the all-one tuple at 1.
MaterializedProduct materialize(const ProductSemiring& p, std::uint64_t cap = 4096);

enum class FactorKind { Bool, ZType, RType, Generic };

const char* factor_kind_name(FactorKind k);

struct FactorClass {
  FactorKind kind;
  int order;
  int z_count;  // |Z|, zero divisors including 0
  int u_count;  // order - z_count
};

// Requires an admissible factor; throws HypothesisError with the failing
// axiom named otherwise.
FactorClass classify_factor(const SemiringTable& t);

struct ZeroDivisorSet {
  std::vector<Element> elements;  // ascending
  std::uint64_t count;
};

ZeroDivisorSet product_zero_divisors(const ProductSemiring& p, std::uint64_t cap = 10000000);

}  // namespace semigraph
