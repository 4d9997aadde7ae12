#include "families.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rational.hpp"

namespace laglab {

namespace {

std::vector<Edge> complete_edges(int n, int r) {
    std::vector<Edge> out;
    Edge e(r);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == r) {
            out.push_back(e);
            return;
        }
        for (int v = lo; v <= n - (r - pos - 1); ++v) {
            e[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

std::vector<Edge> removed_edges(int s, int t) {
    std::vector<Edge> rm;
    rm.push_back({t - 3, t - 2, t - 1});
    if (s == 2) rm.push_back({t - 4, t - 2, t - 1});
    if (s == 3) rm.push_back({t - 5, t - 4, t - 1});
    if (s == 4) rm.push_back({t - 6, t - 5, t - 4});
    for (Edge& e : rm) std::sort(e.begin(), e.end());
    return rm;
}

int family_min_t(int s) {
    switch (s) {
        case 1: return 5;
        case 2: return 6;
        case 3: return 7;
        default: return 8;
    }
}

Hypergraph h_family(int s, int t) {
    if (t < family_min_t(s))
        throw std::invalid_argument("H" + std::to_string(s) + " requires t >= " +
                                    std::to_string(family_min_t(s)));
    std::set<Edge> edges;
    for (Edge& e : complete_edges(t - 1, 3)) edges.insert(std::move(e));
    for (const Edge& e : removed_edges(s, t)) edges.erase(e);
    return Hypergraph(t - 1, 3, std::vector<Edge>(edges.begin(), edges.end()));
}

Hypergraph clique_tail(int t, long long m, const std::optional<std::vector<std::pair<int, int>>>& tail) {
    if (t < 4) throw std::invalid_argument("cliquetail requires t >= 4");
    long long clique_m = binomial(t - 1, 3);
    std::vector<Edge> edges = complete_edges(t - 1, 3);
    std::vector<std::pair<int, int>> pairs;
    if (tail) {
        pairs = *tail;
    } else {
        if (m < clique_m || m > clique_m + binomial(t - 1, 2))
            throw std::invalid_argument("cliquetail: m must lie in [C(t-1,3), C(t-1,3)+C(t-1,2)]");
        auto all = colex_pairs(t - 1);
        pairs.assign(all.begin(), all.begin() + static_cast<std::size_t>(m - clique_m));
    }
    for (auto [i, j] : pairs) edges.push_back({i, j, t});
    return Hypergraph(t, 3, std::move(edges));
}

Hypergraph remark24(int t) {
    if (t < 5) throw std::invalid_argument("remark24 requires t >= 5");
    std::set<Edge> edges;
    for (Edge& e : complete_edges(t, 3)) edges.insert(std::move(e));
    edges.erase(Edge{t - 3, t - 1, t});
    edges.erase(Edge{t - 2, t - 1, t});
    return Hypergraph(t, 3, std::vector<Edge>(edges.begin(), edges.end()));
}

Hypergraph remark62(int t) {
    if (t < 5) throw std::invalid_argument("remark62 requires t >= 5");
    // H1 on [t-1] plus a full compressed tail: m = C(t-1,3)+C(t-2,2)-1 edges,
    // none of the tail pairs touching the removed edge
    Hypergraph base = h_family(1, t);
    std::vector<Edge> edges = base.edges();
    auto allowed = compressed_tail_pairs(1, t);
    long long k = binomial(t - 2, 2);
    for (long long idx = 0; idx < k; ++idx) edges.push_back({allowed[idx].first, allowed[idx].second, t});
    return Hypergraph(t, 3, std::move(edges));
}

}  // namespace

std::vector<std::pair<int, int>> colex_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> compressed_tail_pairs(int s, int t) {
    auto rm = removed_edges(s, t);
    std::vector<std::pair<int, int>> out;
    for (auto [i, j] : colex_pairs(t - 1)) {
        bool ok = true;
        for (const Edge& e : rm)
            if (e[0] <= i && e[1] <= j) ok = false;  // removed edge would be an ancestor of (i,j,t)
        if (ok) out.emplace_back(i, j);
    }
    return out;
}

std::vector<std::vector<int>> family_orbit_classes(int s, int t) {
    std::vector<std::vector<int>> classes;
    auto range = [](int lo, int hi) {
        std::vector<int> v;
        for (int x = lo; x <= hi; ++x) v.push_back(x);
        return v;
    };
    switch (s) {
        case 1:
            classes = {range(1, t - 4), range(t - 3, t - 1)};
            break;
        case 2:
            classes = {range(1, t - 5), range(t - 4, t - 3), range(t - 2, t - 1)};
            break;
        case 3:
            classes = {range(1, t - 6), range(t - 5, t - 2), {t - 1}};
            break;
        case 4:
            classes = {range(1, t - 7), range(t - 6, t - 1)};
            break;
        default:
            throw std::invalid_argument("family_orbit_classes: s must be 1..4");
    }
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const std::vector<int>& c) { return c.empty(); }),
                  classes.end());
    return classes;
}

Hypergraph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Complete: {
            if (spec.t < 1) throw std::invalid_argument("complete requires t >= 1");
            if (spec.r < 2 || spec.r > spec.t)
                throw std::invalid_argument("complete requires 2 <= r <= t");
            return Hypergraph(spec.t, spec.r, complete_edges(spec.t, spec.r));
        }
        case FamilyKind::H1: return h_family(1, spec.t);
        case FamilyKind::H2: return h_family(2, spec.t);
        case FamilyKind::H3: return h_family(3, spec.t);
        case FamilyKind::H4: return h_family(4, spec.t);
        case FamilyKind::CliqueTail: return clique_tail(spec.t, spec.m, spec.tail);
        case FamilyKind::Remark24: return remark24(spec.t);
        case FamilyKind::Remark62: return remark62(spec.t);
    }
    throw std::logic_error("generate: unknown family");
}

std::string family_spec_grammar() {
    return "complete:t:r, H1:t, H2:t, H3:t, H4:t, cliquetail:t:m, remark24:t, remark62:t";
}

FamilySpec parse_family_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ':')) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("empty family spec; valid families: " + family_spec_grammar());

    auto want = [&](std::size_t count) {
        if (parts.size() != count)
            throw std::invalid_argument("family '" + parts[0] + "' takes " + std::to_string(count - 1) +
                                        " parameter(s); valid families: " + family_spec_grammar());
    };
    auto num = [&](std::size_t idx) -> long long {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(parts[idx], &pos);
            if (pos != parts[idx].size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw std::invalid_argument("family spec: '" + parts[idx] + "' is not an integer");
        }
    };

    FamilySpec spec;
    const std::string& name = parts[0];
    if (name == "complete") {
        want(3);
        spec.kind = FamilyKind::Complete;
        spec.t = static_cast<int>(num(1));
        spec.r = static_cast<int>(num(2));
    } else if (name == "H1" || name == "H2" || name == "H3" || name == "H4") {
        want(2);
        spec.kind = name == "H1"   ? FamilyKind::H1
                    : name == "H2" ? FamilyKind::H2
                    : name == "H3" ? FamilyKind::H3
                                   : FamilyKind::H4;
        spec.t = static_cast<int>(num(1));
    } else if (name == "cliquetail") {
        want(3);
        spec.kind = FamilyKind::CliqueTail;
        spec.t = static_cast<int>(num(1));
        spec.m = num(2);
    } else if (name == "remark24" || name == "remark62") {
        want(2);
        spec.kind = name == "remark24" ? FamilyKind::Remark24 : FamilyKind::Remark62;
        spec.t = static_cast<int>(num(1));
    } else {
        throw std::invalid_argument("unknown family '" + name + "'; valid families: " + family_spec_grammar());
    }
    return spec;
}

}  // namespace laglab
