#include "semigraph/semiring.hpp"

#include <algorithm>
#include <utility>

namespace semigraph {

std::string SemiringTable::label(int i) const {
  if (!labels.empty()) return labels[static_cast<size_t>(i)];
  return std::to_string(i);
}

bool same_tables(const SemiringTable& a, const SemiringTable& b) {
  return a.order == b.order && a.add == b.add && a.mul == b.mul;
}

void validate_structure(const SemiringTable& t) {
  if (t.order < 2) throw FormatError("semiring order must be at least 2, got " + std::to_string(t.order));
  const size_t q = static_cast<size_t>(t.order);
  auto check_table = [&](const std::vector<std::vector<int>>& tab, const char* name) {
    if (tab.size() != q)
      throw FormatError(std::string(name) + " has " + std::to_string(tab.size()) +
                        " rows, expected " + std::to_string(q));
    for (size_t i = 0; i < q; ++i) {
      if (tab[i].size() != q)
        throw FormatError(std::string(name) + "[" + std::to_string(i) + "] has " +
                          std::to_string(tab[i].size()) + " entries, expected " + std::to_string(q));
      for (size_t j = 0; j < q; ++j) {
        const int v = tab[i][j];
        if (v < 0 || v >= t.order)
          throw FormatError(std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(j) +
                            "] = " + std::to_string(v) + " out of range [0," + std::to_string(t.order) + ")");
      }
    }
  };
  check_table(t.add, "add");
  check_table(t.mul, "mul");
  if (!t.labels.empty() && t.labels.size() != q)
    throw FormatError("labels has " + std::to_string(t.labels.size()) + " entries, expected " +
                      std::to_string(q));
}

namespace {

std::optional<int> find_identity(const std::vector<std::vector<int>>& tab, int q) {
  for (int e = 0; e < q; ++e) {
    bool ok = true;
    for (int x = 0; x < q && ok; ++x) ok = tab[e][x] == x && tab[x][e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

SemiringTable apply_permutation(const SemiringTable& t, const std::vector<int>& p) {
  // p maps old index -> new index.
  const int q = t.order;
  SemiringTable out;
  out.order = q;
  out.add.assign(q, std::vector<int>(q, 0));
  out.mul.assign(q, std::vector<int>(q, 0));
  if (!t.labels.empty()) out.labels.resize(q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      out.add[p[i]][p[j]] = p[t.add[i][j]];
      out.mul[p[i]][p[j]] = p[t.mul[i][j]];
    }
    if (!t.labels.empty()) out.labels[p[i]] = t.labels[i];
  }
  return out;
}

std::vector<int> swap_perm(int q, int a, int b) {
  std::vector<int> p(q);
  for (int i = 0; i < q; ++i) p[i] = i;
  std::swap(p[a], p[b]);
  return p;
}

}  // namespace

SemiringTable normalize_identities(SemiringTable t) {
  validate_structure(t);
  auto ea = find_identity(t.add, t.order);
  auto em = find_identity(t.mul, t.order);
  if (ea && *ea != 0) {
    auto p = swap_perm(t.order, *ea, 0);
    if (em) em = p[*em];
    t = apply_permutation(t, p);
    ea = 0;
  }
  // A coincident pair of identities cannot satisfy both slots; leave the
  // multiplicative one where it is and let the axiom report flag it.
  if (em && *em != 1 && !(ea && *em == *ea)) {
    t = apply_permutation(t, swap_perm(t.order, *em, 1));
  }
  return t;
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::AddAssoc: return "addition associativity";
    case Axiom::AddComm: return "addition commutativity";
    case Axiom::AddIdentity: return "additive identity";
    case Axiom::MulAssoc: return "multiplication associativity";
    case Axiom::MulIdentity: return "multiplicative identity";
    case Axiom::DistLeft: return "left distributivity";
    case Axiom::DistRight: return "right distributivity";
    case Axiom::ZeroAnnihilates: return "zero annihilation";
    case Axiom::MulComm: return "multiplication commutativity";
    case Axiom::Antinegative: return "antinegativity";
    case Axiom::ZClosed: return "zero-divisors closed under addition";
  }
  return "?";
}

bool AxiomReport::core_semiring() const {
  for (int i = 0; i <= static_cast<int>(Axiom::ZeroAnnihilates); ++i)
    if (!verdicts[i].pass) return false;
  return true;
}

bool AxiomReport::admissible() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

namespace {

std::vector<char> z_mask(const SemiringTable& t) {
  const int q = t.order;
  std::vector<char> z(q, 0);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      if (y == 0) continue;
      if (t.mul[x][y] == 0 || t.mul[y][x] == 0) {
        z[x] = 1;
        break;
      }
    }
  return z;
}

}  // namespace

AxiomReport verify_axioms(const SemiringTable& t) {
  validate_structure(t);
  const int q = t.order;
  AxiomReport r;
  auto fail = [&](Axiom a, std::vector<int> tuple) {
    auto& v = r.verdicts[static_cast<int>(a)];
    if (v.pass) {
      v.pass = false;
      v.counterexample = std::move(tuple);
    }
  };

  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        if (t.add[t.add[a][b]][c] != t.add[a][t.add[b][c]]) fail(Axiom::AddAssoc, {a, b, c});
        if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]]) fail(Axiom::MulAssoc, {a, b, c});
        if (t.mul[a][t.add[b][c]] != t.add[t.mul[a][b]][t.mul[a][c]]) fail(Axiom::DistLeft, {a, b, c});
        if (t.mul[t.add[a][b]][c] != t.add[t.mul[a][c]][t.mul[b][c]]) fail(Axiom::DistRight, {a, b, c});
      }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (t.add[a][b] != t.add[b][a]) fail(Axiom::AddComm, {a, b});
      if (t.mul[a][b] != t.mul[b][a]) fail(Axiom::MulComm, {a, b});
      if (t.add[a][b] == 0 && (a != 0 || b != 0)) fail(Axiom::Antinegative, {a, b});
    }
  for (int i = 0; i < q; ++i) {
    if (t.add[0][i] != i || t.add[i][0] != i) fail(Axiom::AddIdentity, {i});
    if (t.mul[1][i] != i || t.mul[i][1] != i) fail(Axiom::MulIdentity, {i});
    if (t.mul[0][i] != 0 || t.mul[i][0] != 0) fail(Axiom::ZeroAnnihilates, {i});
  }
  const auto z = z_mask(t);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (z[a] && z[b] && !z[t.add[a][b]]) fail(Axiom::ZClosed, {a, b});
  return r;
}

bool axiom_holds_at(const SemiringTable& t, Axiom ax, const std::vector<int>& u) {
  validate_structure(t);
  auto a = [&](size_t i) { return u.at(i); };
  switch (ax) {
    case Axiom::AddAssoc: return t.add[t.add[a(0)][a(1)]][a(2)] == t.add[a(0)][t.add[a(1)][a(2)]];
    case Axiom::MulAssoc: return t.mul[t.mul[a(0)][a(1)]][a(2)] == t.mul[a(0)][t.mul[a(1)][a(2)]];
    case Axiom::DistLeft: return t.mul[a(0)][t.add[a(1)][a(2)]] == t.add[t.mul[a(0)][a(1)]][t.mul[a(0)][a(2)]];
    case Axiom::DistRight: return t.mul[t.add[a(0)][a(1)]][a(2)] == t.add[t.mul[a(0)][a(2)]][t.mul[a(1)][a(2)]];
    case Axiom::AddComm: return t.add[a(0)][a(1)] == t.add[a(1)][a(0)];
    case Axiom::MulComm: return t.mul[a(0)][a(1)] == t.mul[a(1)][a(0)];
    case Axiom::Antinegative: return !(t.add[a(0)][a(1)] == 0 && (a(0) != 0 || a(1) != 0));
    case Axiom::AddIdentity: return t.add[0][a(0)] == a(0) && t.add[a(0)][0] == a(0);
    case Axiom::MulIdentity: return t.mul[1][a(0)] == a(0) && t.mul[a(0)][1] == a(0);
    case Axiom::ZeroAnnihilates: return t.mul[0][a(0)] == 0 && t.mul[a(0)][0] == 0;
    case Axiom::ZClosed: {
      const auto z = z_mask(t);
      return !(z[a(0)] && z[a(1)] && !z[t.add[a(0)][a(1)]]);
    }
  }
  return true;
}

PairCheck is_antinegative(const SemiringTable& t) {
  validate_structure(t);
  for (int a = 0; a < t.order; ++a)
    for (int b = 0; b < t.order; ++b)
      if (t.add[a][b] == 0 && (a != 0 || b != 0)) return {false, std::pair<int, int>{a, b}};
  return {};
}

std::vector<int> zero_divisors(const SemiringTable& t) {
  validate_structure(t);
  const auto z = z_mask(t);
  std::vector<int> out;
  for (int x = 0; x < t.order; ++x)
    if (z[x]) out.push_back(x);
  return out;
}

PairCheck is_zclosed(const SemiringTable& t) {
  validate_structure(t);
  const auto z = z_mask(t);
  for (int a = 0; a < t.order; ++a)
    for (int b = 0; b < t.order; ++b)
      if (z[a] && z[b] && !z[t.add[a][b]]) return {false, std::pair<int, int>{a, b}};
  return {};
}

namespace {

SemiringTable make_bool() {
  SemiringTable t;
  t.order = 2;
  t.add = {{0, 1}, {1, 1}};
  t.mul = {{0, 0}, {0, 1}};
  t.labels = {"0", "1"};
  return t;
}

// Chain lattice 0 < a1 < ... < a_{k-2} < 1. Index 0 is the bottom, index 1
// the top, indices 2..k-1 the middle elements in ascending chain order.
SemiringTable make_chain(int k) {
  SemiringTable t;
  t.order = k;
  std::vector<int> rank(k);
  rank[0] = 0;
  rank[1] = k - 1;
  for (int i = 2; i < k; ++i) rank[i] = i - 1;
  std::vector<int> by_rank(k);
  for (int i = 0; i < k; ++i) by_rank[rank[i]] = i;
  t.add.assign(k, std::vector<int>(k));
  t.mul.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      t.add[i][j] = by_rank[std::max(rank[i], rank[j])];
      t.mul[i][j] = by_rank[std::min(rank[i], rank[j])];
    }
  t.labels.resize(k);
  t.labels[0] = "0";
  t.labels[1] = "1";
  for (int i = 2; i < k; ++i) t.labels[i] = k == 3 ? "a" : "a" + std::to_string(i - 1);
  return t;
}

SemiringTable make_trunc(int k) {
  SemiringTable t;
  t.order = k;
  t.add.assign(k, std::vector<int>(k));
  t.mul.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      t.add[i][j] = std::min(i + j, k - 1);
      t.mul[i][j] = std::min(i * j, k - 1);
    }
  t.labels.resize(k);
  for (int i = 0; i < k; ++i) t.labels[i] = std::to_string(i);
  return t;
}

// {0, 1, x, 1+x} with Boolean coefficient arithmetic and x*x = 0.
SemiringTable make_bxmodx2() {
  SemiringTable t;
  t.order = 4;
  t.add = {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
  t.mul = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 3}};
  t.labels = {"0", "1", "x", "1+x"};
  return t;
}

// Chain {0 < a < 1} with join as addition and a*a = 0; the unique
// three-element table whose only non-zero-divisor is 1.
SemiringTable make_t3() {
  SemiringTable t;
  t.order = 3;
  t.add = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};
  t.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 0}};
  t.labels = {"0", "1", "a"};
  return t;
}

constexpr int kMaxCatalogParam = 4096;

std::optional<int> parse_param(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  int k = 0;
  for (size_t i = prefix.size(); i < name.size(); ++i) {
    const char c = name[i];
    if (c < '0' || c > '9') return std::nullopt;
    k = k * 10 + (c - '0');
    if (k > kMaxCatalogParam) throw CapError("catalog parameter too large in '" + name + "'");
  }
  return k;
}

}  // namespace

SemiringTable catalog(const std::string& name) {
  if (name == "BOOL") return make_bool();
  if (name == "BXMODX2") return make_bxmodx2();
  if (name == "T3") return make_t3();
  if (auto k = parse_param(name, "CHAIN_")) {
    if (*k < 2) throw FormatError("CHAIN_k needs k >= 2, got '" + name + "'");
    return make_chain(*k);
  }
  if (auto k = parse_param(name, "TRUNC_")) {
    if (*k < 2) throw FormatError("TRUNC_k needs k >= 2, got '" + name + "'");
    return make_trunc(*k);
  }
  throw FormatError("unknown catalog name '" + name + "'");
}

namespace {

struct Cell {
  int i, j;
};

bool odometer_step(std::vector<int>& v, int base) {
  for (int p = static_cast<int>(v.size()) - 1; p >= 0; --p) {
    if (++v[p] < base) return true;
    v[p] = 0;
  }
  return false;
}

bool table_associative(const std::vector<std::vector<int>>& tab, int q) {
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        if (tab[tab[a][b]][c] != tab[a][tab[b][c]]) return false;
  return true;
}

}  // namespace

void enumerate_semirings(int order, const EnumerationFilters& filters,
                         const std::function<void(const SemiringTable&)>& emit) {
  if (order < 2 || order > 4) throw CapError("enumeration supports orders 2..4, got " + std::to_string(order));
  const int q = order;

  // Free cells after pinning the identity rows and columns. Addition is
  // symmetric, so only the upper triangle varies; multiplication rows 0/1
  // and columns 0/1 are forced by annihilation and the identity.
  std::vector<Cell> add_cells;
  for (int i = 1; i < q; ++i)
    for (int j = i; j < q; ++j) add_cells.push_back({i, j});
  std::vector<Cell> mul_cells;
  for (int i = 2; i < q; ++i)
    for (int j = 2; j < q; ++j) mul_cells.push_back({i, j});

  SemiringTable t;
  t.order = q;
  t.add.assign(q, std::vector<int>(q, 0));
  t.mul.assign(q, std::vector<int>(q, 0));
  for (int i = 0; i < q; ++i) {
    t.add[0][i] = t.add[i][0] = i;
    t.mul[1][i] = t.mul[i][1] = i;
    t.mul[0][i] = t.mul[i][0] = 0;
  }

  std::vector<int> av(add_cells.size(), 0);
  do {
    for (size_t c = 0; c < add_cells.size(); ++c) {
      t.add[add_cells[c].i][add_cells[c].j] = av[c];
      t.add[add_cells[c].j][add_cells[c].i] = av[c];
    }
    if (!table_associative(t.add, q)) continue;

    std::vector<int> mv(mul_cells.size(), 0);
    do {
      for (size_t c = 0; c < mul_cells.size(); ++c) t.mul[mul_cells[c].i][mul_cells[c].j] = mv[c];
      if (!table_associative(t.mul, q)) continue;
      bool dist = true;
      for (int a = 0; a < q && dist; ++a)
        for (int b = 0; b < q && dist; ++b)
          for (int c = 0; c < q && dist; ++c)
            dist = t.mul[a][t.add[b][c]] == t.add[t.mul[a][b]][t.mul[a][c]] &&
                   t.mul[t.add[a][b]][c] == t.add[t.mul[a][c]][t.mul[b][c]];
      if (!dist) continue;
      if (filters.commutative) {
        bool comm = true;
        for (int a = 2; a < q && comm; ++a)
          for (int b = a + 1; b < q && comm; ++b) comm = t.mul[a][b] == t.mul[b][a];
        if (!comm) continue;
      }
      if (filters.antinegative && !is_antinegative(t).ok) continue;
      if (filters.zclosed && !is_zclosed(t).ok) continue;
      emit(t);
    } while (odometer_step(mv, q));
  } while (odometer_step(av, q));
}

std::vector<SemiringTable> enumerate_semirings(int order, const EnumerationFilters& filters) {
  std::vector<SemiringTable> out;
  enumerate_semirings(order, filters, [&](const SemiringTable& t) { out.push_back(t); });
  return out;
}

}  // namespace semigraph
