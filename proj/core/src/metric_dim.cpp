#include "semigraph/metric_dim.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <numeric>

namespace semigraph {

namespace {

void require_vertex(const DistanceMatrix& dm, int v) {
  if (v < 0 || v >= dm.n)
    throw FormatError("unknown vertex " + std::to_string(v) + " in a graph on " +
                      std::to_string(dm.n) + " vertices");
}

}  // namespace

std::vector<std::int16_t> representation(const DistanceMatrix& dm, int v, const std::vector<int>& W) {
  require_vertex(dm, v);
  std::vector<std::int16_t> rep;
  rep.reserve(W.size());
  for (const int w : W) {
    require_vertex(dm, w);
    rep.push_back(dm.at(v, w));
  }
  return rep;
}

std::vector<std::int16_t> representation(const Graph& g, int v, const std::vector<int>& W) {
  return representation(distances(g), v, W);
}

ResolveCheck is_resolving(const Graph& g, const DistanceMatrix& dm, const std::vector<int>& W) {
  const int n = g.size();
  const size_t k = W.size();
  for (const int w : W) require_vertex(dm, w);

  std::vector<std::int16_t> buf(static_cast<size_t>(n) * k);
  for (int v = 0; v < n; ++v)
    for (size_t i = 0; i < k; ++i) buf[static_cast<size_t>(v) * k + i] = dm.at(v, W[i]);

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto* ra = &buf[static_cast<size_t>(a) * k];
    const auto* rb = &buf[static_cast<size_t>(b) * k];
    for (size_t i = 0; i < k; ++i)
      if (ra[i] != rb[i]) return ra[i] < rb[i];
    return a < b;
  });
  for (int i = 0; i + 1 < n; ++i) {
    const int a = order[static_cast<size_t>(i)], b = order[static_cast<size_t>(i) + 1];
    if (k == 0 || std::memcmp(&buf[static_cast<size_t>(a) * k], &buf[static_cast<size_t>(b) * k],
                              k * sizeof(std::int16_t)) == 0)
      return {false, std::pair<int, int>{std::min(a, b), std::max(a, b)}};
  }
  return {};
}

ResolveCheck is_resolving(const Graph& g, const std::vector<int>& W) {
  return is_resolving(g, distances(g), W);
}

const char* method_name(SolveMethod m) { return m == SolveMethod::Oracle ? "oracle" : "pruned"; }

namespace {

// Resolution check restricted to vertices outside W. Members never collide:
// each holds the only 0 in its own column, so distinctness of the rest is
// the whole question. Buffers are reused across the search.
struct RepChecker {
  const DistanceMatrix* dm = nullptr;
  int n = 0;
  std::vector<std::int16_t> buf;
  std::vector<int> order;

  bool resolves_nonmembers(const std::vector<int>& W) {
    const size_t k = W.size();
    const int r = n - static_cast<int>(k);
    if (r <= 1) return true;
    buf.resize(static_cast<size_t>(r) * k);
    size_t row = 0, next_w = 0;
    for (int v = 0; v < n; ++v) {
      if (next_w < k && W[next_w] == v) {
        ++next_w;
        continue;
      }
      for (size_t i = 0; i < k; ++i) buf[row * k + i] = dm->at(v, W[i]);
      ++row;
    }
    if (k == 0) return false;  // r >= 2 empty representations collide
    order.resize(static_cast<size_t>(r));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const auto* ra = &buf[static_cast<size_t>(a) * k];
      const auto* rb = &buf[static_cast<size_t>(b) * k];
      for (size_t i = 0; i < k; ++i)
        if (ra[i] != rb[i]) return ra[i] < rb[i];
      return false;
    });
    for (int i = 0; i + 1 < r; ++i)
      if (std::memcmp(&buf[static_cast<size_t>(order[static_cast<size_t>(i)]) * k],
                      &buf[static_cast<size_t>(order[static_cast<size_t>(i) + 1]) * k],
                      k * sizeof(std::int16_t)) == 0)
        return false;
    return true;
  }
};

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<size_t>(i)] < n - k + i) {
      ++c[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j) - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

ResolvingSetResult metric_dimension_oracle(const Graph& g, int cap) {
  const int n = g.size();
  if (n > cap)
    throw CapError("oracle handles at most " + std::to_string(cap) + " vertices, got " +
                   std::to_string(n));
  ResolvingSetResult res;
  res.method = SolveMethod::Oracle;
  if (n <= 1) return res;

  const auto dm = distances(g);
  RepChecker chk{&dm, n, {}, {}};
  std::vector<int> comb;
  for (int k = 1; k <= n; ++k) {
    comb.resize(static_cast<size_t>(k));
    std::iota(comb.begin(), comb.end(), 0);
    do {
      if (chk.resolves_nonmembers(comb)) {
        res.dimension = k;
        res.witness = comb;
        return res;
      }
    } while (next_combination(comb, n));
  }
  return res;  // not reached: the full vertex set resolves
}

ResolvingSetResult metric_dimension_exact(const Graph& g, int cap) {
  const int n = g.size();
  if (n > cap)
    throw CapError("solver handles at most " + std::to_string(cap) + " vertices, got " +
                   std::to_string(n));
  ResolvingSetResult res;
  res.method = SolveMethod::Pruned;
  if (n <= 1) return res;

  const auto dm = distances(g);
  const auto part = twin_partition(g);
  RepChecker chk{&dm, n, {}, {}};

  std::vector<int> W;
  W.reserve(static_cast<size_t>(n));
  std::vector<int> skipped(static_cast<size_t>(part.count()), 0);

  // Depth-first over positions, include-first, so size-k candidates appear
  // in lexicographic order; a second exclusion inside one twin class is cut
  // off immediately, which matches the oracle's answer on everything kept.
  const std::function<bool(int, int)> dfs = [&](int pos, int need) -> bool {
    if (need == 0) {
      bool ok = true;
      int v = pos;
      for (; v < n; ++v)
        if (++skipped[static_cast<size_t>(part.class_of[static_cast<size_t>(v)])] > 1) {
          ok = false;
          ++v;
          break;
        }
      const bool hit = ok && chk.resolves_nonmembers(W);
      for (int u = pos; u < v; ++u) --skipped[static_cast<size_t>(part.class_of[static_cast<size_t>(u)])];
      return hit;
    }
    if (n - pos < need) return false;
    W.push_back(pos);
    if (dfs(pos + 1, need - 1)) return true;
    W.pop_back();
    int& skips = skipped[static_cast<size_t>(part.class_of[static_cast<size_t>(pos)])];
    if (skips == 0) {
      ++skips;
      const bool hit = dfs(pos + 1, need);
      --skips;
      if (hit) return true;
    }
    return false;
  };

  int start = n - part.count();
  if (start < 1) start = 1;
  for (int k = start; k <= n; ++k) {
    if (dfs(0, k)) {
      res.dimension = k;
      res.witness = W;
      return res;
    }
  }
  return res;  // not reached
}

int check_twin_lower_bound(const Graph& g) {
  if (g.size() == 0) return 0;
  return g.size() - twin_partition(g).count();
}

}  // namespace semigraph
