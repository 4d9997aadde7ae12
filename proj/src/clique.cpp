#include "clique.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace laglab {

namespace {

struct Search {
    std::vector<std::uint64_t> adj;
    int best = 0;

    // vertices of P ordered by greedy coloring; colors bound the clique size
    void expand(int size, std::uint64_t p) {
        if (p == 0) {
            if (size > best) best = size;
            return;
        }
        std::vector<int> order;
        std::vector<int> color;
        std::uint64_t uncolored = p;
        int c = 0;
        while (uncolored) {
            ++c;
            std::uint64_t cls = uncolored;
            while (cls) {
                int v = std::countr_zero(cls);
                order.push_back(v);
                color.push_back(c);
                uncolored &= ~(1ull << v);
                cls &= ~(1ull << v);
                cls &= ~adj[v];  // same color class must be independent
            }
        }
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (size + color[idx] <= best) return;
            int v = order[idx];
            expand(size + 1, p & adj[v]);
            p &= ~(1ull << v);
        }
    }
};

}  // namespace

int clique_number(const Hypergraph& g, int cap) {
    if (g.r() != 2) throw std::invalid_argument("clique_number: requires a 2-graph");
    if (cap > 64) cap = 64;
    if (g.n() > cap)
        throw std::invalid_argument("clique_number: graph exceeds the exact solver cap of " +
                                    std::to_string(cap) + " vertices");
    Search s;
    s.adj.assign(g.n(), 0);
    for (const Edge& e : g.edges()) {
        int u = e[0] - 1, v = e[1] - 1;
        s.adj[u] |= 1ull << v;
        s.adj[v] |= 1ull << u;
    }
    std::uint64_t all = g.n() == 64 ? ~0ull : ((1ull << g.n()) - 1);
    s.expand(0, all);
    return s.best;
}

}  // namespace laglab
