#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace laglab {

using Edge = std::vector<int>;  // strictly increasing 1-based vertex ids

// colex on sorted tuples of equal size: compare from the last coordinate down
bool colex_less(const Edge& a, const Edge& b);

// Immutable r-uniform hypergraph on vertices 1..n. Edges are validated and
// stored in colex order at construction; all derived graphs are new values.
class Hypergraph {
public:
    Hypergraph(int n, int r, std::vector<Edge> edges);

    int n() const { return n_; }
    int r() const { return r_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(const Edge& e) const;

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && r_ == other.r_ && edges_ == other.edges_;
    }

private:
    int n_;
    int r_;
    std::vector<Edge> edges_;  // sorted colex
};

// Family of k-subsets of a vertex set (links, pair links, ...).
struct SubsetFamily {
    int k = 0;
    std::vector<Edge> members;  // sorted colex

    bool contains(const Edge& e) const;
    bool operator==(const SubsetFamily& other) const {
        return k == other.k && members == other.members;
    }
};

// link of i: the (r-1)-sets A with A ∪ {i} an edge
SubsetFamily link(const Hypergraph& g, int i);

// pair link of {i,j}: the (r-2)-sets B with B ∪ {i,j} an edge
SubsetFamily pair_link(const Hypergraph& g, int i, int j);

// link difference E_{i\j}: members of the link of i whose union with j is a
// non-edge (members containing j are excluded by definition)
SubsetFamily link_difference(const Hypergraph& g, int i, int j);

// componentwise <= with strictly smaller coordinate sum
bool is_ancestor(const Edge& lhs, const Edge& rhs);

struct CompressionCheck {
    bool left_compressed = true;
    // on failure: (edge, its missing ancestor), first hit in scan order
    std::optional<std::pair<Edge, Edge>> witness;
};

CompressionCheck is_left_compressed(const Hypergraph& g);

// Push every edge down to its lexicographically smallest missing ancestor
// until no edge has a missing ancestor. Edge count is preserved and the
// result is left-compressed; already-compressed inputs come back unchanged.
Hypergraph left_compress(const Hypergraph& g);

struct CoverCheck {
    bool all_covered = true;
    std::optional<std::pair<int, int>> uncovered;  // smallest uncovered pair
};

// every vertex pair must lie in at least one edge
CoverCheck covers_all_pairs(const Hypergraph& g);

// subgraph induced by S, relabeled order-preservingly onto 1..|S|
Hypergraph induced(const Hypergraph& g, const std::vector<int>& s);

struct OrbitPartition {
    std::vector<std::vector<int>> classes;  // each sorted; classes ordered by min element
    bool exact = false;                     // false: invariant-refinement heuristic
};

// Vertex classes exchangeable under automorphisms. Exact (permutation search)
// up to exact_cap vertices, invariant refinement above that.
OrbitPartition automorphism_orbits(const Hypergraph& g, int exact_cap = 9);

// edge-list text format: "n r" header, one edge per line, '#' comments
Hypergraph parse_edge_list(std::istream& in);
Hypergraph parse_edge_list(const std::string& text);
std::string to_edge_list(const Hypergraph& g);

}  // namespace laglab
