#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semigraph/product.hpp"
#include "semigraph/semiring.hpp"

namespace semigraph {

// Undirected graph with bitset adjacency rows. Vertices carry display labels
// and, when built from a product, the underlying tuples in ascending order.
struct Graph {
  std::vector<std::string> labels;
  std::vector<Element> elements;
  std::vector<std::vector<std::uint64_t>> rows;

  int size() const { return static_cast<int>(labels.size()); }
  bool adjacent(int u, int v) const {
    return (rows[static_cast<size_t>(u)][static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  int degree(int u) const;
  // Vertex holding tuple e, or -1; elements are sorted so this bisects.
  int index_of(const Element& e) const;
  std::vector<std::pair<int, int>> edge_list() const;  // u < v, ascending
  std::size_t edge_count() const;
};

constexpr int kGraphCap = 4096;

Graph make_graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges);

// Total graph: edge x-y iff x+y is a zero divisor. restricted = true keeps
// only the zero-divisor vertices (the component the dimension results are
// about); false takes all of S. Inadmissible input is rejected.
Graph build_total_graph(const SemiringTable& t, bool restricted = true, int cap = kGraphCap);
Graph build_total_graph(const ProductSemiring& p, bool restricted = true,
                        std::uint64_t cap = kGraphCap);

constexpr std::int16_t kUnreachable = -1;

struct DistanceMatrix {
  int n = 0;
  std::vector<std::int16_t> d;  // row-major, kUnreachable for no path
  std::int16_t at(int u, int v) const {
    return d[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)];
  }
};

// BFS from every source. threads: 0 = auto (SEMIGRAPH_THREADS or hardware).
DistanceMatrix distances(const Graph& g, int threads = 0);

// Largest finite distance; kUnreachable if some pair has no path.
int diameter(const DistanceMatrix& dm);
int diameter(const Graph& g);

enum class TwinKind { Singleton, Open, Closed };

struct TwinClass {
  std::vector<int> members;  // ascending
  TwinKind kind;
};

// Partition under the twin relation: u ~ v iff N(u)=N(v) or N[u]=N[v].
// Mixed classes cannot arise, so each class is a clique (closed twins) or
// an independent set (open twins).
struct TwinPartition {
  std::vector<TwinClass> classes;  // ordered by least member
  std::vector<int> class_of;
  int count() const { return static_cast<int>(classes.size()); }
};

TwinPartition twin_partition(const Graph& g);

std::string export_dot(const Graph& g);

}  // namespace semigraph
