#include "hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace laglab {

bool colex_less(const Edge& a, const Edge& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

Hypergraph::Hypergraph(int n, int r, std::vector<Edge> edges) : n_(n), r_(r), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("Hypergraph: vertex count must be >= 1");
    if (r_ < 2) throw std::invalid_argument("Hypergraph: edge size must be >= 2");
    for (const Edge& e : edges_) {
        if (static_cast<int>(e.size()) != r_)
            throw std::invalid_argument("Hypergraph: edge has wrong size");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > n_)
                throw std::invalid_argument("Hypergraph: vertex id out of range");
            if (i > 0 && e[i] <= e[i - 1])
                throw std::invalid_argument("Hypergraph: edge vertices must be strictly increasing");
        }
    }
    std::sort(edges_.begin(), edges_.end(), colex_less);
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1]) throw std::invalid_argument("Hypergraph: duplicate edge");
}

bool Hypergraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e, colex_less);
}

bool SubsetFamily::contains(const Edge& e) const {
    return std::binary_search(members.begin(), members.end(), e, colex_less);
}

namespace {

void check_vertex(const Hypergraph& g, int i) {
    if (i < 1 || i > g.n()) throw std::invalid_argument("vertex out of range");
}

SubsetFamily make_family(int k, std::vector<Edge> members) {
    std::sort(members.begin(), members.end(), colex_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return SubsetFamily{k, std::move(members)};
}

}  // namespace

SubsetFamily link(const Hypergraph& g, int i) {
    check_vertex(g, i);
    std::vector<Edge> members;
    for (const Edge& e : g.edges()) {
        if (!std::binary_search(e.begin(), e.end(), i)) continue;
        Edge a;
        a.reserve(e.size() - 1);
        for (int v : e)
            if (v != i) a.push_back(v);
        members.push_back(std::move(a));
    }
    return make_family(g.r() - 1, std::move(members));
}

SubsetFamily pair_link(const Hypergraph& g, int i, int j) {
    check_vertex(g, i);
    check_vertex(g, j);
    if (i == j) throw std::invalid_argument("pair_link: i and j must differ");
    std::vector<Edge> members;
    for (const Edge& e : g.edges()) {
        if (!std::binary_search(e.begin(), e.end(), i)) continue;
        if (!std::binary_search(e.begin(), e.end(), j)) continue;
        Edge b;
        b.reserve(e.size() - 2);
        for (int v : e)
            if (v != i && v != j) b.push_back(v);
        members.push_back(std::move(b));
    }
    return make_family(g.r() - 2, std::move(members));
}

SubsetFamily link_difference(const Hypergraph& g, int i, int j) {
    check_vertex(g, i);
    check_vertex(g, j);
    if (i == j) throw std::invalid_argument("link_difference: i and j must differ");
    SubsetFamily li = link(g, i);
    std::vector<Edge> members;
    for (const Edge& a : li.members) {
        if (std::binary_search(a.begin(), a.end(), j)) continue;  // A ∪ {j} is not an r-set
        Edge with_j(a);
        with_j.insert(std::upper_bound(with_j.begin(), with_j.end(), j), j);
        if (!g.has_edge(with_j)) members.push_back(a);
    }
    return make_family(g.r() - 1, std::move(members));
}

bool is_ancestor(const Edge& lhs, const Edge& rhs) {
    if (lhs.size() != rhs.size()) throw std::invalid_argument("is_ancestor: size mismatch");
    long sum_l = 0, sum_r = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] > rhs[i]) return false;
        sum_l += lhs[i];
        sum_r += rhs[i];
    }
    return sum_l < sum_r;
}

CompressionCheck is_left_compressed(const Hypergraph& g) {
    // E_{j\i} empty for all i < j: lowering any single vertex of an edge must
    // land on another edge. Single-swap closure implies full ancestor closure.
    for (const Edge& e : g.edges()) {
        for (std::size_t p = 0; p < e.size(); ++p) {
            int lo = (p == 0) ? 1 : e[p - 1] + 1;
            for (int v = lo; v < e[p]; ++v) {
                Edge a(e);
                a[p] = v;
                if (!g.has_edge(a)) return CompressionCheck{false, std::make_pair(e, a)};
            }
        }
    }
    return CompressionCheck{};
}

namespace {

// lexicographically smallest sorted tuple a <= e (componentwise, strictly
// smaller sum) not present in `have`; nullopt when every ancestor is present
std::optional<Edge> smallest_missing_ancestor(const Edge& e, const std::set<Edge>& have) {
    const int r = static_cast<int>(e.size());
    Edge a(r);
    std::optional<Edge> found;
    auto rec = [&](auto&& self, int pos) -> bool {
        if (found) return true;
        if (pos == r) {
            if (a != e && !have.count(a)) {
                found = a;
                return true;
            }
            return false;
        }
        int lo = (pos == 0) ? 1 : a[pos - 1] + 1;
        for (int v = lo; v <= e[pos]; ++v) {
            a[pos] = v;
            if (self(self, pos + 1)) return true;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

}  // namespace

Hypergraph left_compress(const Hypergraph& g) {
    std::set<Edge> have(g.edges().begin(), g.edges().end());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Edge> order(have.begin(), have.end());
        std::sort(order.begin(), order.end(), colex_less);
        for (const Edge& e : order) {
            if (!have.count(e)) continue;  // already replaced this pass
            auto a = smallest_missing_ancestor(e, have);
            if (a) {
                have.erase(e);
                have.insert(*a);
                changed = true;
            }
        }
    }
    return Hypergraph(g.n(), g.r(), std::vector<Edge>(have.begin(), have.end()));
}

CoverCheck covers_all_pairs(const Hypergraph& g) {
    std::vector<std::vector<char>> covered(g.n() + 1, std::vector<char>(g.n() + 1, 0));
    for (const Edge& e : g.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) covered[e[i]][e[j]] = 1;
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j)
            if (!covered[i][j]) return CoverCheck{false, std::make_pair(i, j)};
    return CoverCheck{};
}

Hypergraph induced(const Hypergraph& g, const std::vector<int>& s) {
    std::vector<int> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != s.size()) throw std::invalid_argument("induced: duplicate vertices in S");
    std::vector<int> relabel(g.n() + 1, 0);
    for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
        check_vertex(g, sorted[idx]);
        relabel[sorted[idx]] = static_cast<int>(idx) + 1;
    }
    if (sorted.empty()) throw std::invalid_argument("induced: S must be nonempty");
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Edge mapped;
        mapped.reserve(e.size());
        for (int v : e) {
            if (!relabel[v]) break;
            mapped.push_back(relabel[v]);
        }
        if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
    }
    return Hypergraph(static_cast<int>(sorted.size()), g.r(), std::move(edges));
}

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> classes_from_ids(const std::vector<int>& cls, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> seen(n + 1, -1);
    for (int v = 1; v <= n; ++v) {
        if (seen[cls[v]] < 0) {
            seen[cls[v]] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[seen[cls[v]]].push_back(v);
    }
    return out;
}

OrbitPartition exact_orbits(const Hypergraph& g) {
    const int n = g.n();
    std::vector<int> degree(n + 1, 0);
    for (const Edge& e : g.edges())
        for (int v : e) ++degree[v];

    std::set<Edge> edge_set(g.edges().begin(), g.edges().end());
    DisjointSet dsu(n + 1);

    std::vector<int> perm(n + 1, 0);
    std::vector<char> used(n + 1, 0);

    // backtracking over degree-respecting vertex bijections
    auto extend = [&](auto&& self, int v) -> void {
        if (v > n) {
            for (const Edge& e : g.edges()) {
                Edge mapped(e);
                for (int& x : mapped) x = perm[x];
                std::sort(mapped.begin(), mapped.end());
                if (!edge_set.count(mapped)) return;
            }
            for (int u = 1; u <= n; ++u) dsu.unite(u, perm[u]);
            return;
        }
        for (int img = 1; img <= n; ++img) {
            if (used[img] || degree[img] != degree[v]) continue;
            perm[v] = img;
            used[img] = 1;
            self(self, v + 1);
            used[img] = 0;
        }
    };
    extend(extend, 1);

    std::vector<int> cls(n + 1);
    for (int v = 1; v <= n; ++v) cls[v] = dsu.find(v);
    return OrbitPartition{classes_from_ids(cls, n), true};
}

OrbitPartition refined_orbits(const Hypergraph& g) {
    const int n = g.n();
    std::vector<int> cls(n + 1, 0);
    for (;;) {
        // signature of v: current class plus the multiset of edge class-profiles at v
        std::vector<std::vector<std::vector<int>>> sig(n + 1);
        for (const Edge& e : g.edges()) {
            for (int v : e) {
                std::vector<int> profile;
                for (int u : e)
                    if (u != v) profile.push_back(cls[u]);
                std::sort(profile.begin(), profile.end());
                sig[v].push_back(std::move(profile));
            }
        }
        std::vector<std::pair<std::pair<int, std::vector<std::vector<int>>>, int>> keyed;
        for (int v = 1; v <= n; ++v) {
            std::sort(sig[v].begin(), sig[v].end());
            keyed.push_back({{cls[v], sig[v]}, v});
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> next(n + 1, 0);
        int id = 0;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i > 0 && keyed[i].first != keyed[i - 1].first) ++id;
            next[keyed[i].second] = id;
        }
        if (next == cls) break;
        cls = next;
    }
    return OrbitPartition{classes_from_ids(cls, n), false};
}

}  // namespace

OrbitPartition automorphism_orbits(const Hypergraph& g, int exact_cap) {
    if (g.n() <= exact_cap) return exact_orbits(g);
    return refined_orbits(g);
}

Hypergraph parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1, r = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long> nums;
        long v;
        while (ls >> v) nums.push_back(v);
        if (!ls.eof()) throw std::invalid_argument("edge list: non-numeric token on line " + std::to_string(lineno));
        if (nums.empty()) continue;
        if (n < 0) {
            if (nums.size() != 2) throw std::invalid_argument("edge list: header must be 'n r'");
            n = static_cast<int>(nums[0]);
            r = static_cast<int>(nums[1]);
            continue;
        }
        if (static_cast<int>(nums.size()) != r)
            throw std::invalid_argument("edge list: edge on line " + std::to_string(lineno) +
                                        " has " + std::to_string(nums.size()) + " vertices, expected " +
                                        std::to_string(r));
        Edge e(nums.begin(), nums.end());
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    if (n < 0) throw std::invalid_argument("edge list: missing 'n r' header");
    try {
        return Hypergraph(n, r, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw std::invalid_argument(std::string("edge list: ") + ex.what());
    }
}

Hypergraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string to_edge_list(const Hypergraph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.r() << '\n';
    for (const Edge& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace laglab
