#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semigraph/graph.hpp"

namespace semigraph {

// Distance vector from v to the landmarks W, in W's order.
std::vector<std::int16_t> representation(const DistanceMatrix& dm, int v, const std::vector<int>& W);
std::vector<std::int16_t> representation(const Graph& g, int v, const std::vector<int>& W);

struct ResolveCheck {
  bool resolving = true;
  std::optional<std::pair<int, int>> collision;  // least colliding pair if not
};

// W resolves g iff all vertices get pairwise distinct representations.
ResolveCheck is_resolving(const Graph& g, const DistanceMatrix& dm, const std::vector<int>& W);
ResolveCheck is_resolving(const Graph& g, const std::vector<int>& W);

enum class SolveMethod { Oracle, Pruned };

const char* method_name(SolveMethod m);

struct ResolvingSetResult {
  int dimension = 0;
  std::vector<int> witness;  // ascending vertex positions
  SolveMethod method = SolveMethod::Pruned;
};

constexpr int kOracleCap = 24;

// Brute force: subsets by increasing size, lexicographic within a size,
// first resolving set wins. The reference everything else is checked against.
ResolvingSetResult metric_dimension_oracle(const Graph& g, int cap = kOracleCap);

// Same answer and same witness as the oracle, but skips candidate sets that
// leave two vertices of one twin class out (twins are never resolved from
// outside the pair, so those sets cannot resolve).
ResolvingSetResult metric_dimension_exact(const Graph& g, int cap = kGraphCap);

// |V| minus the number of twin classes: a dimension lower bound, since any
// resolving set omits at most one vertex per class.
int check_twin_lower_bound(const Graph& g);

}  // namespace semigraph
