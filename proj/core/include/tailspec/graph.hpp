#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace tailspec {

/// Finite simple undirected graph with 1-based vertex labels and an
/// optional anchor vertex marking the tail-attachment point.
///
/// Invariants: no self-loops, no duplicate edges, all endpoints in [1, n].
/// A graph with n == 0 is the empty graph (it arises from vertex deletion).
struct Graph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // stored with first < second
    std::optional<int> anchor;

    Graph() = default;
    explicit Graph(int vertex_count);

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;  // sorted ascending
    int edge_count() const { return static_cast<int>(edges.size()); }

    bool operator==(const Graph&) const = default;
};

// tag for the two closed-form families
enum class Family { star, flower };

/// Family descriptor: tag plus the tuple (k_1, ..., k_n).
struct FamilySpec {
    Family family;
    std::vector<int> kappa;

    /// Throws std::invalid_argument on an invalid tuple
    /// (empty, k_j < 1, or k_j < 2 for flowers).
    void validate() const;

    /// The star on two rays of one edge each; it carries no discrete
    /// spectrum and is treated separately by the family solver.
    bool is_trivial_star() const;

    int ray_count() const { return static_cast<int>(kappa.size()); }
    int vertex_count() const;  // 1 + sum k_j
};

Graph build_path(int m);
Graph build_multistar(const std::vector<int>& kappa);
Graph build_flower(const std::vector<int>& kappa);

/// Disjoint union of g1 and g2 plus one bridge edge between their anchors.
/// g2's labels are shifted by g1.n; the result keeps g1's anchor.
Graph couple(const Graph& g1, const Graph& g2);

/// Induced subgraph on the vertices not in `drop`, relabeled
/// order-preservingly. The anchor survives if it is not deleted.
Graph delete_vertices(const Graph& g, const std::vector<int>& drop);

/// All simple cycles of length >= 3 through v, one entry per cycle,
/// each given as its sorted vertex set. Exhaustive DFS; intended for
/// small graphs only.
std::vector<std::vector<int>> simple_cycles_through(const Graph& g, int v);

/// True when every vertex is reachable from `from`.
bool connected_from(const Graph& g, int from);

}  // namespace tailspec
