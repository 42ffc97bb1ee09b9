// Test-only brute-force enumerators, independent of the production oracle:
// direct recursive generation of matchings, cycles and 2-regular subgraphs,
// used to cross-check the search-based deciders at desk scale.

#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "polychrome/graph.hpp"

namespace polychrome::testing {

// Every matching of K_n with exactly m edges (as sorted edge lists).
inline void naive_matchings(int n, int m, const std::function<void(const Subgraph&)>& fn)
{
    std::vector<Edge> edges;
    std::vector<bool> used(n, false);
    std::function<void(int)> rec = [&](int v) {
        if (static_cast<int>(edges.size()) == m) {
            fn(Subgraph::from_pairs(edges));
            return;
        }
        if (v >= n) return;
        if (used[v]) {
            rec(v + 1);
            return;
        }
        rec(v + 1);  // leave v unmatched
        for (int u = v + 1; u < n; ++u) {
            if (used[u]) continue;
            used[v] = used[u] = true;
            edges.push_back({v, u});
            rec(v + 1);
            edges.pop_back();
            used[v] = used[u] = false;
        }
    };
    rec(0);
}

// Every cycle of length exactly len in K_n, via subset + rotation-fixed
// permutations (first vertex minimal, second below last).
inline void naive_cycles(int n, int len, const std::function<void(const Subgraph&)>& fn)
{
    std::vector<int> subset;
    std::function<void(int)> pick = [&](int from) {
        if (static_cast<int>(subset.size()) == len) {
            std::vector<int> rest(subset.begin() + 1, subset.end());
            std::sort(rest.begin(), rest.end());
            do {
                if (rest.front() > rest.back()) continue;
                std::vector<Edge> edges;
                int prev = subset[0];
                for (int v : rest) {
                    edges.push_back(make_edge(prev, v));
                    prev = v;
                }
                edges.push_back(make_edge(prev, subset[0]));
                fn(Subgraph::from_pairs(std::move(edges)));
            } while (std::next_permutation(rest.begin(), rest.end()));
            return;
        }
        for (int v = from; v < n; ++v) {
            subset.push_back(v);
            pick(v + 1);
            subset.pop_back();
        }
    };
    pick(0);
}

// Every 2-regular subgraph of K_n spanning at least min_span vertices:
// assemble disjoint naive cycles with increasing minimal vertices.
inline void naive_two_regular(int n, int min_span,
                              const std::function<void(const Subgraph&)>& fn)
{
    std::vector<Subgraph> parts;
    std::function<void(int, int)> rec = [&](int low, int covered) {
        if (covered >= min_span && !parts.empty()) {
            std::vector<Edge> all;
            for (const auto& p : parts) all.insert(all.end(), p.edges.begin(), p.edges.end());
            fn(Subgraph::from_pairs(std::move(all)));
        }
        for (int len = 3; covered + len <= n; ++len) {
            naive_cycles(n, len, [&](const Subgraph& cyc) {
                auto vs = cyc.vertices();
                if (vs.front() < low) return;
                for (const auto& p : parts)
                    for (int v : vs)
                        for (int w : p.vertices())
                            if (v == w) return;
                parts.push_back(cyc);
                rec(vs.front() + 1, covered + len);
                parts.pop_back();
            });
        }
    };
    rec(0, 0);
}

// Maximum matching size by direct enumeration.
inline int naive_max_matching(int n, const std::function<bool(int, int)>& allowed)
{
    int best = 0;
    for (int m = 1; m <= n / 2; ++m) {
        bool found = false;
        naive_matchings(n, m, [&](const Subgraph& h) {
            if (found) return;
            for (const auto& [u, v] : h.edges)
                if (!allowed(u, v)) return;
            found = true;
        });
        if (found) best = m;
    }
    return best;
}

// Every inherited sequence of length n with at most max_blocks blocks.
// Colors are canonical (numbered by first appearance), adjacent blocks
// differ, and the final block has length >= 2.
inline void ordered_sequences(int n, int max_blocks,
                              const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> seq;
    std::function<void(int, int, int)> rec = [&](int rest, int blocks, int used) {
        if (rest == 0) {
            fn(seq);
            return;
        }
        if (blocks == max_blocks) return;
        int prev = seq.empty() ? 0 : seq.back();
        for (int c = 1; c <= used + 1; ++c) {
            if (c == prev) continue;
            for (int len = 1; len <= rest; ++len) {
                if (len == rest && len < 2) continue;  // last block needs two vertices
                seq.insert(seq.end(), len, c);
                rec(rest - len, blocks + 1, std::max(used, c));
                seq.resize(seq.size() - len);
            }
        }
    };
    rec(n, 0, 0);
}

// Every tail sequence of length m behind a seed with k_seed main colors:
// positions use the last seed color (glue) or fresh colors k_seed+1, ...
// (canonical first-appearance order, at most max_fresh of them).  The last
// two positions agree; a one-position tail must reuse the glue color.
inline void quasi_tails(int m, int k_seed, int max_fresh,
                        const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> seq;
    std::function<void(int)> rec = [&](int used) {
        int at = static_cast<int>(seq.size());
        if (at == m) {
            if (m == 1 && seq[0] != k_seed) return;
            if (m >= 2 && seq[m - 1] != seq[m - 2]) return;
            fn(seq);
            return;
        }
        for (int c = k_seed; c <= k_seed + std::min(used + 1, max_fresh); ++c) {
            seq.push_back(c);
            rec(std::max(used, c - k_seed));
            seq.pop_back();
        }
    };
    rec(0);
}

// Uniformly random coloring of K_n using exactly k colors (seeded).
inline EdgeColoring random_coloring(int n, int k, std::mt19937& rng)
{
    std::uniform_int_distribution<int> dist(1, k);
    while (true) {
        std::vector<std::array<int, 3>> triples;
        std::vector<bool> seen(k + 1, false);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int c = dist(rng);
                seen[c] = true;
                triples.push_back({u, v, c});
            }
        bool all = true;
        for (int c = 1; c <= k; ++c) all = all && seen[c];
        if (all) return EdgeColoring::from_edges(n, k, triples);
    }
}

}  // namespace polychrome::testing
