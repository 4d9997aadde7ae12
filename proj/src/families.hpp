#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypergraph.hpp"

namespace laglab {

// Named generators. The H-families live on t-1 vertices (complete 3-graph
// minus one edge, or minus two edges sharing 2 / 1 / 0 vertices); the tail
// families add a t-th vertex.
enum class FamilyKind { Complete, H1, H2, H3, H4, CliqueTail, Remark24, Remark62 };

struct FamilySpec {
    FamilyKind kind = FamilyKind::Complete;
    int t = 0;
    int r = 3;
    long long m = -1;                                       // CliqueTail only
    std::optional<std::vector<std::pair<int, int>>> tail;   // CliqueTail: explicit tail pairs
};

Hypergraph generate(const FamilySpec& spec);

// "complete:t:r", "H1:t".."H4:t", "cliquetail:t:m", "remark24:t", "remark62:t"
FamilySpec parse_family_spec(const std::string& text);
std::string family_spec_grammar();  // the list of valid forms, for error messages

// pairs over [n] in colex order: (1,2),(1,3),(2,3),(1,4),...
std::vector<std::pair<int, int>> colex_pairs(int n);

// Tail pairs that keep an H-family extension left-compressed: every pair
// whose presence would force the removed edges back in as ancestors is
// excluded. Returned in colex order.
std::vector<std::pair<int, int>> compressed_tail_pairs(int s, int t);

// vertex classes of the H-families, known by construction
std::vector<std::vector<int>> family_orbit_classes(int s, int t);

}  // namespace laglab
