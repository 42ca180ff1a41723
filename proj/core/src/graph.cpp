#include "semigraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "parallel.hpp"

namespace semigraph {

namespace {

size_t word_count(int n) { return (static_cast<size_t>(n) + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& row, int v) {
  row[static_cast<size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void require_admissible(const SemiringTable& t) {
  const auto report = verify_axioms(t);
  for (int i = 0; i < kAxiomCount; ++i)
    if (!report.verdicts[static_cast<size_t>(i)].pass)
      throw HypothesisError(std::string("semiring is not admissible: ") +
                            axiom_name(static_cast<Axiom>(i)) + " fails");
}

}  // namespace

int Graph::degree(int u) const {
  int d = 0;
  for (const auto w : rows[static_cast<size_t>(u)]) d += std::popcount(w);
  return d;
}

int Graph::index_of(const Element& e) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || *it != e) return -1;
  return static_cast<int>(it - elements.begin());
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (int u = 0; u < size(); ++u) total += static_cast<std::size_t>(degree(u));
  return total / 2;
}

Graph make_graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.labels = std::move(labels);
  const int n = g.size();
  g.rows.assign(static_cast<size_t>(n), std::vector<std::uint64_t>(word_count(n), 0));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw FormatError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range for " + std::to_string(n) + " vertices");
    if (u == v) throw FormatError("self-loop at vertex " + std::to_string(u));
    set_bit(g.rows[static_cast<size_t>(u)], v);
    set_bit(g.rows[static_cast<size_t>(v)], u);
  }
  return g;
}

Graph build_total_graph(const SemiringTable& t, bool restricted, int cap) {
  require_admissible(t);
  std::vector<char> zdiv(static_cast<size_t>(t.order), 0);
  for (int x : zero_divisors(t)) zdiv[static_cast<size_t>(x)] = 1;

  std::vector<int> verts;
  for (int x = 0; x < t.order; ++x)
    if (!restricted || zdiv[static_cast<size_t>(x)]) verts.push_back(x);
  const int n = static_cast<int>(verts.size());
  if (n > cap)
    throw CapError("graph on " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));

  Graph g;
  g.labels.reserve(static_cast<size_t>(n));
  g.elements.reserve(static_cast<size_t>(n));
  for (int x : verts) {
    g.labels.push_back(t.label(x));
    g.elements.push_back({x});
  }
  g.rows.assign(static_cast<size_t>(n), std::vector<std::uint64_t>(word_count(n), 0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (zdiv[static_cast<size_t>(t.add[verts[static_cast<size_t>(u)]][verts[static_cast<size_t>(v)]])]) {
        set_bit(g.rows[static_cast<size_t>(u)], v);
        set_bit(g.rows[static_cast<size_t>(v)], u);
      }
  return g;
}

Graph build_total_graph(const ProductSemiring& p, bool restricted, std::uint64_t cap) {
  for (int i = 0; i < p.factor_count(); ++i) {
    try {
      classify_factor(p.factor(i));
    } catch (const HypothesisError& e) {
      throw HypothesisError("factor " + std::to_string(i) + ": " + e.what());
    }
  }

  Graph g;
  if (restricted) {
    auto zs = product_zero_divisors(p, cap);
    if (zs.count > cap)
      throw CapError("graph on " + std::to_string(zs.count) + " vertices exceeds cap " +
                     std::to_string(cap));
    g.elements = std::move(zs.elements);
  } else {
    if (p.order() > cap)
      throw CapError("graph on " + std::to_string(p.order()) + " vertices exceeds cap " +
                     std::to_string(cap));
    g.elements.reserve(static_cast<size_t>(p.order()));
    for (std::uint64_t r = 0; r < p.order(); ++r) g.elements.push_back(p.unrank(r));
  }

  const int n = static_cast<int>(g.elements.size());
  g.labels.reserve(static_cast<size_t>(n));
  std::vector<std::uint32_t> pat(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    g.labels.push_back(p.format(g.elements[static_cast<size_t>(v)]));
    pat[static_cast<size_t>(v)] = p.z_pattern(g.elements[static_cast<size_t>(v)]);
  }

  // Admissible factors make x+y a zero divisor exactly when x and y share a
  // coordinate where both are zero divisors, so adjacency is a pattern test.
  g.rows.assign(static_cast<size_t>(n), std::vector<std::uint64_t>(word_count(n), 0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (pat[static_cast<size_t>(u)] & pat[static_cast<size_t>(v)]) {
        set_bit(g.rows[static_cast<size_t>(u)], v);
        set_bit(g.rows[static_cast<size_t>(v)], u);
      }
  return g;
}

DistanceMatrix distances(const Graph& g, int threads) {
  const int n = g.size();
  DistanceMatrix dm;
  dm.n = n;
  dm.d.assign(static_cast<size_t>(n) * static_cast<size_t>(n), kUnreachable);
  if (n == 0) return dm;
  const size_t words = word_count(n);

  detail::parallel_for(n, threads, [&](int s) {
    std::int16_t* row = &dm.d[static_cast<size_t>(s) * static_cast<size_t>(n)];
    std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    set_bit(visited, s);
    set_bit(frontier, s);
    row[s] = 0;
    std::int16_t dist = 0;
    for (;;) {
      ++dist;
      std::fill(next.begin(), next.end(), 0);
      for (size_t w = 0; w < words; ++w) {
        std::uint64_t bits = frontier[w];
        while (bits) {
          const int v = static_cast<int>(w * 64) + std::countr_zero(bits);
          bits &= bits - 1;
          const auto& adj = g.rows[static_cast<size_t>(v)];
          for (size_t x = 0; x < words; ++x) next[x] |= adj[x];
        }
      }
      bool any = false;
      for (size_t w = 0; w < words; ++w) {
        next[w] &= ~visited[w];
        if (!next[w]) continue;
        any = true;
        visited[w] |= next[w];
        std::uint64_t bits = next[w];
        while (bits) {
          row[static_cast<int>(w * 64) + std::countr_zero(bits)] = dist;
          bits &= bits - 1;
        }
      }
      if (!any) break;
      std::swap(frontier, next);
    }
  });
  return dm;
}

int diameter(const DistanceMatrix& dm) {
  int best = 0;
  for (const auto v : dm.d) {
    if (v == kUnreachable) return kUnreachable;
    if (v > best) best = v;
  }
  return best;
}

int diameter(const Graph& g) { return diameter(distances(g)); }

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a > b) std::swap(a, b);
    if (a != b) parent[static_cast<size_t>(b)] = a;
  }
};

}  // namespace

TwinPartition twin_partition(const Graph& g) {
  const int n = g.size();
  Dsu dsu(n);
  std::map<std::vector<std::uint64_t>, int> by_open, by_closed;
  for (int v = 0; v < n; ++v) {
    const auto& open = g.rows[static_cast<size_t>(v)];
    auto closed = open;
    set_bit(closed, v);
    if (auto [it, fresh] = by_open.try_emplace(open, v); !fresh) dsu.unite(it->second, v);
    if (auto [it, fresh] = by_closed.try_emplace(std::move(closed), v); !fresh) dsu.unite(it->second, v);
  }

  TwinPartition part;
  part.class_of.assign(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int root = dsu.find(v);
    int& cls = part.class_of[static_cast<size_t>(root)];
    if (v == root) {
      cls = static_cast<int>(part.classes.size());
      part.classes.push_back({{v}, TwinKind::Singleton});
    } else {
      part.classes[static_cast<size_t>(cls)].members.push_back(v);
    }
    part.class_of[static_cast<size_t>(v)] = cls;
  }
  for (auto& cls : part.classes)
    if (cls.members.size() > 1)
      cls.kind = g.adjacent(cls.members[0], cls.members[1]) ? TwinKind::Closed : TwinKind::Open;
  return part;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (int v = 0; v < g.size(); ++v) out += "  " + dot_quote(g.labels[static_cast<size_t>(v)]) + ";\n";
  for (const auto& [u, v] : g.edge_list())
    out += "  " + dot_quote(g.labels[static_cast<size_t>(u)]) + " -- " +
           dot_quote(g.labels[static_cast<size_t>(v)]) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace semigraph
