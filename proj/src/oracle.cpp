#include "polychrome/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <future>
#include <numeric>

namespace polychrome {

OracleBudget OracleBudget::capped(int n)
{
    OracleBudget b;
    b.max_matching_n = std::min(b.max_matching_n, n);
    b.max_cycle_n = std::min(b.max_cycle_n, n);
    b.max_two_regular_n = std::min(b.max_two_regular_n, n);
    b.max_r_regular_n = std::min(b.max_r_regular_n, n);
    b.max_enumeration_n = std::min(b.max_enumeration_n, n);
    return b;
}

namespace {

using Adj = std::vector<uint32_t>;  // adjacency bitmasks, n <= 24

Adj allowed_graph(const EdgeColoring& c, int banned)
{
    int n = c.n();
    Adj adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (c.color(u, v) != banned) {
                adj[u] |= 1u << v;
                adj[v] |= 1u << u;
            }
    return adj;
}

// ---- maximum matching via subset DP ------------------------------------

struct MatchingOracle {
    const Adj& adj;
    std::vector<int8_t> memo;

    explicit MatchingOracle(const Adj& a) : adj(a), memo(size_t{1} << a.size(), -1) {}

    int nu(uint32_t mask)
    {
        if (mask == 0) return 0;
        int8_t& slot = memo[mask];
        if (slot >= 0) return slot;
        int v = __builtin_ctz(mask);
        uint32_t rest = mask & ~(1u << v);
        int best = nu(rest);  // v unmatched
        uint32_t nbrs = adj[v] & rest;
        while (nbrs) {
            int u = __builtin_ctz(nbrs);
            nbrs &= nbrs - 1;
            best = std::max(best, 1 + nu(rest & ~(1u << u)));
        }
        slot = static_cast<int8_t>(best);
        return best;
    }

    // The matching the canonical descent finds: lowest vertex first, lowest
    // partner first.
    std::vector<Edge> extract(uint32_t mask)
    {
        std::vector<Edge> out;
        while (mask) {
            int v = __builtin_ctz(mask);
            uint32_t rest = mask & ~(1u << v);
            if (nu(mask) == nu(rest)) {
                mask = rest;
                continue;
            }
            uint32_t nbrs = adj[v] & rest;
            while (nbrs) {
                int u = __builtin_ctz(nbrs);
                nbrs &= nbrs - 1;
                if (1 + nu(rest & ~(1u << u)) == nu(mask)) {
                    out.push_back(make_edge(v, u));
                    mask = rest & ~(1u << u);
                    break;
                }
            }
        }
        return out;
    }
};

// ---- fixed-length cycle search ------------------------------------------

// First cycle of length exactly len in canonical order: smallest vertex
// first, ascending extensions, second vertex below the last one.
struct CycleFinder {
    const Adj& adj;
    int n;
    int len;
    std::vector<int> path;
    std::vector<bool> used;

    CycleFinder(const Adj& a, int len) : adj(a), n(static_cast<int>(a.size())), len(len)
    {
        used.assign(n, false);
    }

    std::optional<std::vector<int>> run()
    {
        for (int s = 0; s + len <= n; ++s) {
            path = {s};
            used.assign(n, false);
            used[s] = true;
            if (extend()) return path;
        }
        return std::nullopt;
    }

    bool extend()
    {
        int last = path.back();
        if (static_cast<int>(path.size()) == len)
            return (adj[last] >> path[0]) & 1u && path[1] < last;
        for (int v = path[0] + 1; v < n; ++v) {
            if (used[v] || !((adj[last] >> v) & 1u)) continue;
            used[v] = true;
            path.push_back(v);
            if (extend()) return true;
            path.pop_back();
            used[v] = false;
        }
        return false;
    }
};

Subgraph cycle_to_subgraph(const std::vector<int>& cyc)
{
    std::vector<Edge> edges;
    for (size_t i = 0; i < cyc.size(); ++i)
        edges.push_back(make_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    return Subgraph::from_pairs(std::move(edges));
}

// ---- 2-factor search on a vertex subset ----------------------------------

// Covers `mask` by vertex-disjoint cycles (length >= 3).  Each new cycle
// starts at the lowest uncovered vertex, so within a cycle that vertex is
// minimal; orientation is fixed by second < last.
struct TwoFactorFinder {
    const Adj& adj;
    std::vector<Edge> edges;

    explicit TwoFactorFinder(const Adj& a) : adj(a) {}

    bool cover(uint32_t mask)
    {
        if (mask == 0) return true;
        // fast degree check: every uncovered vertex needs two uncovered neighbors
        for (uint32_t m = mask; m;) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            if (__builtin_popcount(adj[v] & mask) < 2) return false;
        }
        int start = __builtin_ctz(mask);
        return build(mask & ~(1u << start), start, start, start, 1);
    }

    // grow a path from `start`; close back when length >= 3
    bool build(uint32_t mask, int start, int last, int second, int len)
    {
        if (len >= 3 && ((adj[last] >> start) & 1u) && second < last) {
            edges.push_back(make_edge(last, start));
            if (cover(mask)) return true;
            edges.pop_back();
        }
        uint32_t nbrs = adj[last] & mask;
        while (nbrs) {
            int v = __builtin_ctz(nbrs);
            nbrs &= nbrs - 1;
            edges.push_back(make_edge(last, v));
            if (build(mask & ~(1u << v), start, v, len == 1 ? v : second, len + 1))
                return true;
            edges.pop_back();
        }
        return false;
    }
};

// ---- r-regular subgraph search -------------------------------------------

// Exact-degree subgraph on the vertex list `verts`: every vertex ends with
// degree r.  Processes vertices in ascending order, choosing the partners
// above each vertex by ascending combinations.
struct RegularFinder {
    const Adj& adj;
    std::vector<int> verts;
    int r;
    bool want_connected;
    std::vector<int> deg;
    std::vector<Edge> edges;

    RegularFinder(const Adj& a, std::vector<int> verts, int r, bool connected)
        : adj(a), verts(std::move(verts)), r(r), want_connected(connected)
    {
        deg.assign(a.size(), 0);
    }

    bool run() { return place(0); }

    bool place(size_t i)
    {
        if (i == verts.size()) return !want_connected || connected();
        int v = verts[i];
        int need = r - deg[v];
        if (need < 0) return false;
        if (need == 0) return place(i + 1);
        std::vector<int> cands;
        for (size_t j = i + 1; j < verts.size(); ++j) {
            int u = verts[j];
            if (((adj[v] >> u) & 1u) && deg[u] < r) cands.push_back(u);
        }
        if (static_cast<int>(cands.size()) < need) return false;
        std::vector<int> pick;
        return choose(i, v, cands, 0, need, pick);
    }

    bool choose(size_t i, int v, const std::vector<int>& cands, size_t from, int need,
                std::vector<int>& pick)
    {
        if (need == 0) {
            for (int u : pick) {
                edges.push_back(make_edge(v, u));
                ++deg[u];
                ++deg[v];
            }
            if (place(i + 1)) return true;
            for (int u : pick) {
                edges.pop_back();
                --deg[u];
                --deg[v];
            }
            return false;
        }
        for (size_t j = from; cands.size() - j >= static_cast<size_t>(need); ++j) {
            pick.push_back(cands[j]);
            if (choose(i, v, cands, j + 1, need - 1, pick)) return true;
            pick.pop_back();
        }
        return false;
    }

    bool connected() const
    {
        if (verts.empty()) return false;
        std::vector<std::vector<int>> nb(adj.size());
        for (const auto& [u, v] : edges) {
            nb[u].push_back(v);
            nb[v].push_back(u);
        }
        std::vector<bool> seen(adj.size(), false);
        std::vector<int> stack{verts[0]};
        seen[verts[0]] = true;
        size_t count = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++count;
            for (int y : nb[x])
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        return count == verts.size();
    }
};

// Ascending subsets of {0..n-1} of the given size.
void for_each_subset(int n, int size, const std::function<bool(const std::vector<int>&)>& fn)
{
    std::vector<int> pick;
    std::function<bool(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == size) return fn(pick);
        for (int v = from; v < n; ++v) {
            if (n - v < size - static_cast<int>(pick.size())) break;
            pick.push_back(v);
            if (rec(v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    rec(0);
}

}  // namespace

std::optional<Subgraph> exists_avoiding(const AvoidanceQuery& query, const OracleBudget& budget)
{
    const auto& c = query.coloring;
    const auto& fam = query.family;
    int n = c.n();
    fam.validate_for(n);
    if (query.banned < 1 || query.banned > c.k())
        throw precondition_error("banned color out of range");
    Adj adj = allowed_graph(c, query.banned);
    int span = n - fam.q;

    switch (fam.kind) {
        case FamilyKind::Matchings: {
            if (n > budget.max_matching_n)
                throw budget_error("matching oracle budget exceeded");
            MatchingOracle oracle(adj);
            uint32_t full = (1u << n) - 1;
            if (oracle.nu(full) < span / 2) return std::nullopt;
            auto edges = oracle.extract(full);
            edges.resize(span / 2);  // any m disjoint allowed edges will do
            return Subgraph::from_pairs(std::move(edges));
        }
        case FamilyKind::Cycles: {
            if (n > budget.max_cycle_n) throw budget_error("cycle oracle budget exceeded");
            CycleFinder finder(adj, span);
            if (auto cyc = finder.run()) return cycle_to_subgraph(*cyc);
            return std::nullopt;
        }
        case FamilyKind::TwoRegular: {
            if (n > budget.max_two_regular_n)
                throw budget_error("two-regular oracle budget exceeded");
            uint32_t full = (1u << n) - 1;
            std::optional<Subgraph> found;
            for (int excluded = 0; excluded <= fam.q && !found; ++excluded) {
                for_each_subset(n, excluded, [&](const std::vector<int>& out) {
                    uint32_t mask = full;
                    for (int v : out) mask &= ~(1u << v);
                    TwoFactorFinder finder(adj);
                    if (finder.cover(mask)) {
                        found = Subgraph::from_pairs(finder.edges);
                        return true;
                    }
                    return false;
                });
            }
            return found;
        }
        case FamilyKind::RRegular:
        case FamilyKind::ConnectedRRegular: {
            if (n > budget.max_r_regular_n || fam.r > budget.max_r)
                throw budget_error("r-regular oracle budget exceeded");
            bool connected = fam.kind == FamilyKind::ConnectedRRegular;
            std::optional<Subgraph> found;
            for_each_subset(n, fam.q, [&](const std::vector<int>& out) {
                std::vector<int> verts;
                for (int v = 0; v < n; ++v)
                    if (std::find(out.begin(), out.end(), v) == out.end()) verts.push_back(v);
                RegularFinder finder(adj, std::move(verts), fam.r, connected);
                if (finder.run()) {
                    found = Subgraph::from_pairs(finder.edges);
                    return true;
                }
                return false;
            });
            return found;
        }
    }
    return std::nullopt;
}

Verdict verify(const EdgeColoring& coloring, const FamilySpec& family,
               const OracleBudget& budget, int jobs)
{
    family.validate_for(coloring.n());
    int k = coloring.k();
    std::vector<std::optional<Subgraph>> results(k + 1);

    auto run_color = [&](int t) { return exists_avoiding({coloring, family, t}, budget); };
    if (jobs > 1) {
        std::vector<std::future<std::optional<Subgraph>>> futures;
        for (int t = 1; t <= k; ++t)
            futures.push_back(std::async(std::launch::async, run_color, t));
        for (int t = 1; t <= k; ++t) results[t] = futures[t - 1].get();
    } else {
        for (int t = 1; t <= k; ++t) results[t] = run_color(t);
    }

    Verdict verdict;
    for (int t = 1; t <= k; ++t)
        if (results[t]) {
            // a witness must be a family member avoiding its color
            if (!family_member(family, coloring.n(), *results[t]) ||
                results[t]->contains_color(coloring, t))
                throw std::logic_error("oracle produced an invalid witness");
            verdict.missing.push_back({t, std::move(*results[t])});
        }
    verdict.polychromatic = verdict.missing.empty();
    return verdict;
}

bool all_cycles_polychromatic(const EdgeColoring& coloring, int len, const OracleBudget& budget)
{
    int n = coloring.n();
    if (n > budget.max_enumeration_n) throw budget_error("cycle enumeration budget exceeded");
    if (len < 3 || len > n) throw precondition_error("cycle length out of range");
    uint32_t all = (1u << coloring.k()) - 1;

    // canonical cycle enumeration with the color set carried along
    std::vector<int> path;
    std::vector<bool> used(n, false);
    bool ok = true;
    std::function<void(int, uint32_t)> rec = [&](int last, uint32_t colors) {
        if (!ok) return;
        if (static_cast<int>(path.size()) == len) {
            if (path[1] < last) {
                uint32_t full = colors | (1u << (coloring.color(last, path[0]) - 1));
                if (full != all) ok = false;
            }
            return;
        }
        for (int v = path[0] + 1; v < n && ok; ++v) {
            if (used[v]) continue;
            used[v] = true;
            path.push_back(v);
            rec(v, colors | (1u << (coloring.color(last, v) - 1)));
            path.pop_back();
            used[v] = false;
        }
    };
    for (int s = 0; s + len <= n && ok; ++s) {
        path = {s};
        used.assign(n, false);
        used[s] = true;
        rec(s, 0);
    }
    return ok;
}

bool all_two_regular_exact_polychromatic(const EdgeColoring& coloring, int span,
                                         const OracleBudget& budget)
{
    int n = coloring.n();
    if (n > budget.max_enumeration_n)
        throw budget_error("two-regular enumeration budget exceeded");
    if (span < 3 || span > n) throw precondition_error("span out of range");
    uint32_t all = (1u << coloring.k()) - 1;
    bool ok = true;

    // enumerate cycle covers of every `span`-subset, tracking colors
    std::function<void(uint32_t, uint32_t, std::vector<Edge>&)> cover =
        [&](uint32_t mask, uint32_t colors, std::vector<Edge>& edges) {
            if (!ok) return;
            if (mask == 0) {
                if (colors != all) ok = false;
                return;
            }
            int start = __builtin_ctz(mask);
            uint32_t rest = mask & ~(1u << start);
            std::function<void(uint32_t, int, int, int, uint32_t)> build =
                [&](uint32_t m, int last, int second, int len, uint32_t cols) {
                    if (!ok) return;
                    if (len >= 3 && second < last) {
                        uint32_t closed =
                            cols | (1u << (coloring.color(last, start) - 1));
                        cover(m, closed, edges);
                    }
                    for (uint32_t nb = m; nb && ok;) {
                        int v = __builtin_ctz(nb);
                        nb &= nb - 1;
                        build(m & ~(1u << v), v, len == 1 ? v : second, len + 1,
                              cols | (1u << (coloring.color(last, v) - 1)));
                    }
                };
            build(rest, start, start, 1, colors);
        };

    for_each_subset(n, span, [&](const std::vector<int>& verts) {
        uint32_t mask = 0;
        for (int v : verts) mask |= 1u << v;
        std::vector<Edge> edges;
        cover(mask, 0, edges);
        return !ok;
    });
    return ok;
}

bool check_cycle_monotonicity(const EdgeColoring& coloring, int j, const OracleBudget& budget)
{
    if (coloring.k() < 3)
        throw precondition_error("monotonicity check needs at least three colors");
    if (j < 4 || j > coloring.n()) throw precondition_error("need 4 <= j <= n");
    if (!all_cycles_polychromatic(coloring, j, budget)) return true;  // vacuous
    for (int len = j + 1; len <= coloring.n(); ++len)
        if (!all_cycles_polychromatic(coloring, len, budget)) return false;
    return true;
}

}  // namespace polychrome
