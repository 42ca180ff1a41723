#include "semigraph/product.hpp"

#include <algorithm>

namespace semigraph {

ProductSemiring::ProductSemiring(std::vector<SemiringTable> factors) : factors_(std::move(factors)) {
  zdiv_.reserve(factors_.size());
  for (const auto& f : factors_) {
    std::vector<char> z(static_cast<size_t>(f.order), 0);
    for (int x : zero_divisors(f)) z[static_cast<size_t>(x)] = 1;
    zdiv_.push_back(std::move(z));
  }
}

std::uint64_t ProductSemiring::order() const {
  std::uint64_t n = 1;
  for (const auto& f : factors_) n *= static_cast<std::uint64_t>(f.order);
  return n;
}

Element ProductSemiring::add(const Element& a, const Element& b) const {
  Element r(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) r[i] = factors_[i].add[a[i]][b[i]];
  return r;
}

Element ProductSemiring::mul(const Element& a, const Element& b) const {
  Element r(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) r[i] = factors_[i].mul[a[i]][b[i]];
  return r;
}

Element ProductSemiring::zero() const { return Element(factors_.size(), 0); }

Element ProductSemiring::one() const { return Element(factors_.size(), 1); }

std::uint32_t ProductSemiring::z_pattern(const Element& a) const {
  std::uint32_t m = 0;
  for (size_t i = 0; i < factors_.size(); ++i)
    if (zdiv_[i][static_cast<size_t>(a[i])]) m |= 1u << i;
  return m;
}

bool ProductSemiring::is_zero_divisor(const Element& a) const {
  // In a product, (a_i) kills some non-zero tuple iff some coordinate is a
  // zero divisor of its factor: pair it with a matching annihilator there
  // and zeros elsewhere.
  return z_pattern(a) != 0;
}

std::string ProductSemiring::format(const Element& a) const {
  std::string s = "(";
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ",";
    s += factors_[i].label(a[i]);
  }
  s += ")";
  return s;
}

std::uint64_t ProductSemiring::rank(const Element& a) const {
  std::uint64_t r = 0;
  for (size_t i = 0; i < factors_.size(); ++i)
    r = r * static_cast<std::uint64_t>(factors_[i].order) + static_cast<std::uint64_t>(a[i]);
  return r;
}

Element ProductSemiring::unrank(std::uint64_t r) const {
  Element a(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    const auto q = static_cast<std::uint64_t>(factors_[i].order);
    a[i] = static_cast<int>(r % q);
    r /= q;
  }
  return a;
}

ProductSemiring direct_product(std::vector<SemiringTable> factors) {
  if (factors.empty()) throw FormatError("a product needs at least one factor");
  if (factors.size() > static_cast<size_t>(kMaxFactors))
    throw CapError("at most " + std::to_string(kMaxFactors) + " factors supported, got " +
                   std::to_string(factors.size()));
  for (size_t i = 0; i < factors.size(); ++i) {
    try {
      validate_structure(factors[i]);
    } catch (const FormatError& e) {
      throw FormatError("factor " + std::to_string(i) + ": " + e.what());
    }
  }
  return ProductSemiring(std::move(factors));
}

MaterializedProduct materialize(const ProductSemiring& p, std::uint64_t cap) {
  const std::uint64_t n = p.order();
  if (n > cap)
    throw CapError("product order " + std::to_string(n) + " exceeds materialization cap " +
                   std::to_string(cap));
  const int q = static_cast<int>(n);

  MaterializedProduct out;
  out.elements.reserve(static_cast<size_t>(q));
  for (int r = 0; r < q; ++r) out.elements.push_back(p.unrank(static_cast<std::uint64_t>(r)));

  // Ascending enumeration puts the all-zero tuple at 0 already; swap the
  // all-one tuple into slot 1 to keep the identity convention.
  const int one_at = static_cast<int>(p.rank(p.one()));
  if (one_at != 1) std::swap(out.elements[1], out.elements[static_cast<size_t>(one_at)]);

  out.table.order = q;
  out.table.add.assign(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q)));
  out.table.mul.assign(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q)));
  out.table.labels.resize(static_cast<size_t>(q));

  std::vector<int> slot(static_cast<size_t>(q));
  for (int i = 0; i < q; ++i) slot[static_cast<size_t>(p.rank(out.elements[static_cast<size_t>(i)]))] = i;
  for (int i = 0; i < q; ++i) {
    out.table.labels[static_cast<size_t>(i)] = p.format(out.elements[static_cast<size_t>(i)]);
    for (int j = 0; j < q; ++j) {
      const auto& a = out.elements[static_cast<size_t>(i)];
      const auto& b = out.elements[static_cast<size_t>(j)];
      out.table.add[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          slot[static_cast<size_t>(p.rank(p.add(a, b)))];
      out.table.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          slot[static_cast<size_t>(p.rank(p.mul(a, b)))];
    }
  }
  return out;
}

const char* factor_kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Bool: return "BOOL";
    case FactorKind::ZType: return "ZTYPE";
    case FactorKind::RType: return "RTYPE";
    case FactorKind::Generic: return "GENERIC";
  }
  return "?";
}

FactorClass classify_factor(const SemiringTable& t) {
  const auto report = verify_axioms(t);
  for (int i = 0; i < kAxiomCount; ++i)
    if (!report.verdicts[static_cast<size_t>(i)].pass)
      throw HypothesisError(std::string("factor is not admissible: ") +
                            axiom_name(static_cast<Axiom>(i)) + " fails");

  FactorClass c;
  c.order = t.order;
  c.z_count = static_cast<int>(zero_divisors(t).size());
  c.u_count = c.order - c.z_count;
  if (t.order == 2) {
    // The two-element admissible semiring is unique: both identities are
    // pinned and antinegativity forces 1+1 = 1.
    if (!same_tables(t, catalog("BOOL")))
      throw std::logic_error("admissible order-2 table differs from BOOL");
    c.kind = FactorKind::Bool;
  } else if (c.u_count == 1) {
    c.kind = FactorKind::ZType;
  } else if (c.z_count == 1) {
    c.kind = FactorKind::RType;
  } else {
    c.kind = FactorKind::Generic;
  }
  return c;
}

ZeroDivisorSet product_zero_divisors(const ProductSemiring& p, std::uint64_t cap) {
  ZeroDivisorSet out;
  std::uint64_t nonz = 1;
  for (int i = 0; i < p.factor_count(); ++i) {
    const auto& f = p.factor(i);
    nonz *= static_cast<std::uint64_t>(f.order) - zero_divisors(f).size();
  }
  out.count = p.order() - nonz;

  const std::uint64_t n = p.order();
  if (n > cap)
    throw CapError("product order " + std::to_string(n) + " exceeds enumeration cap " +
                   std::to_string(cap));
  out.elements.reserve(static_cast<size_t>(out.count));
  for (std::uint64_t r = 0; r < n; ++r) {
    Element a = p.unrank(r);
    if (p.is_zero_divisor(a)) out.elements.push_back(std::move(a));
  }
  return out;
}

}  // namespace semigraph
