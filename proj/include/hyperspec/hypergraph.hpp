#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperspec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EdgeOutOfRange : Error { using Error::Error; };
struct EmptyEdge : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };
struct EdgeIndexOutOfRange : Error { using Error::Error; };
struct NotUniform : Error { using Error::Error; };
struct EmptySubset : Error { using Error::Error; };

/// An edge is a strictly sorted set of vertex indices.
using Edge = std::vector<int>;

/// Finite hypergraph on vertices 0..n-1. Immutable after construction;
/// all operations below are pure and safe to share across threads.
struct Hypergraph {
  int n = 0;
  std::vector<Edge> edges;
  std::optional<int> k;  // uniformity witness: edge size when all edges agree

  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Blocks partition 0..n-1; each block is a maximal connected sub-hypergraph.
struct ComponentPartition {
  std::vector<std::vector<int>> blocks;
};

/// Validates and normalizes: edges are sorted, within-edge repeats collapse
/// (an edge is a set), duplicate edges reject construction. k is set iff all
/// edge sizes agree; expected_k forces the witness (useful for edgeless
/// k-uniform hypergraphs) and is checked against every edge.
Hypergraph build(int n, std::vector<Edge> edges,
                 std::optional<int> expected_k = std::nullopt);

int degree(const Hypergraph& g, int v);

bool is_connected(const Hypergraph& g);

ComponentPartition components(const Hypergraph& g);

/// Walk-based cycle search: a cycle is a closed walk of length >= 2 with
/// distinct edges and distinct vertices except the endpoints.
bool has_cycle(const Hypergraph& g);

/// connected and n == 1+(k-1)m. Equivalent to connected + has_cycle == false
/// for k-uniform hypergraphs; the equivalence is exercised in tests.
bool is_hypertree(const Hypergraph& g);

/// Strong deletion: removes u and every edge containing u; indices compact.
Hypergraph delete_vertex(const Hypergraph& g, int u);

Hypergraph delete_edge(const Hypergraph& g, int e);

/// Sub-hypergraph induced by X: vertex set X re-indexed in sorted order,
/// edges are the nonempty intersections e∩X, deduplicated as sets.
/// Singleton intersections are kept, so the result need not be uniform.
Hypergraph induced(const Hypergraph& g, const std::vector<int>& x);

/// vertex -> indices of incident edges
std::vector<std::vector<int>> incidence_lists(const Hypergraph& g);

int max_degree(const Hypergraph& g);

}  // namespace hyperspec
