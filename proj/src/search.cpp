#include "polychrome/search.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

#include "polychrome/oracle.hpp"
#include "polychrome/structure.hpp"

namespace polychrome {

std::string search_mode_name(SearchMode mode)
{
    switch (mode) {
        case SearchMode::Greedy: return "greedy";
        case SearchMode::ExhaustiveBlocks: return "blocks";
        case SearchMode::Quasi: return "quasi";
        case SearchMode::Full: return "full";
    }
    return "?";
}

namespace {

const std::vector<int> kNoSeedColors;

// All per-color clauses hold for the block layout (fresh color per block).
bool layout_ok(const std::vector<int>& sizes, FamilyKind kind, int q)
{
    std::vector<int> seq;
    for (size_t i = 0; i < sizes.size(); ++i)
        seq.insert(seq.end(), sizes[i], static_cast<int>(i) + 1);
    for (size_t i = 0; i < sizes.size(); ++i)
        if (!characterization_color_ok(seq, 0, kNoSeedColors, kind, q,
                                       static_cast<int>(i) + 1))
            return false;
    return true;
}

// Candidate sizes for the next block at prefix P: the smallest size whose
// clause can be certified inside the block, plus (two-regular only) the
// smaller equality options at fixed indices.
std::vector<int> candidate_sizes(FamilyKind kind, int q, int prefix, int n)
{
    std::vector<int> out;
    int strict = prefix + q + 1;
    switch (kind) {
        case FamilyKind::Matchings:
            out.push_back(strict);
            break;
        case FamilyKind::Cycles:
            out.push_back(prefix == 0 ? q + 1 : prefix + q);
            break;
        case FamilyKind::TwoRegular: {
            out.push_back(strict);
            if (prefix == 1) out.push_back(q + 1);  // equality at index 2+q
            if ((n - 2 + q) % 2 == 0) {             // equality at index n-2
                int s = (n - 2 + q) / 2;
                if (s >= 1 && prefix + s <= n - 2) out.push_back(s);
            }
            break;
        }
        default:
            throw precondition_error("search covers matchings, cycles and two-regular only");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SearchReport report_for_sizes(const std::vector<int>& sizes, SearchMode mode,
                              long long explored)
{
    SearchReport rep;
    rep.mode = mode;
    rep.explored = explored;
    rep.best_k = static_cast<int>(sizes.size());
    BlockSequence blocks;
    for (size_t i = 0; i < sizes.size(); ++i)
        blocks.blocks.push_back({static_cast<int>(i) + 1, sizes[i]});
    rep.blocks = blocks;
    rep.coloring = coloring_from_blocks(blocks);
    return rep;
}

}  // namespace

SearchReport best_simply_ordered(int n, const FamilySpec& family, SearchMode mode)
{
    family.validate_for(n);
    FamilyKind kind = family.kind;
    int q = family.q;
    long long explored = 0;
    std::vector<int> best{n};  // one block is always feasible
    if (!layout_ok(best, kind, q)) throw std::logic_error("single block must be feasible");

    if (mode == SearchMode::ExhaustiveBlocks) {
        if (n > 20) throw budget_error("exhaustive block search budget exceeded (n > 20)");
        std::vector<int> sizes;
        std::function<void(int)> rec = [&](int rest) {
            if (rest == 0) {
                ++explored;
                if (sizes.size() > best.size() && sizes.back() >= 2 &&
                    layout_ok(sizes, kind, q))
                    best = sizes;
                return;
            }
            for (int s = 1; s <= rest; ++s) {
                sizes.push_back(s);
                rec(rest - s);
                sizes.pop_back();
            }
        };
        rec(n);
        return report_for_sizes(best, mode, explored);
    }

    if (mode != SearchMode::Greedy)
        throw precondition_error("block search modes are greedy and blocks");

    // depth-first over the minimal candidate sizes; closing a layout puts
    // the whole remainder into the final block
    std::vector<int> sizes;
    std::function<void(int)> rec = [&](int prefix) {
        ++explored;
        int rest = n - prefix;
        if (rest >= 2) {
            std::vector<int> closed = sizes;
            closed.push_back(rest);
            if (closed.size() > best.size() && layout_ok(closed, kind, q)) best = closed;
        }
        for (int s : candidate_sizes(kind, q, prefix, n)) {
            if (prefix + s >= n) continue;  // final block handled by closing
            sizes.push_back(s);
            rec(prefix + s);
            sizes.pop_back();
        }
    };
    rec(0);
    return report_for_sizes(best, SearchMode::Greedy, explored);
}

SearchReport best_quasi(int n, FamilyKind kind, int q)
{
    if (kind != FamilyKind::Cycles && kind != FamilyKind::TwoRegular)
        throw precondition_error("quasi search covers cycles and two-regular families");
    if (q != 0 && q != 1) throw precondition_error("quasi search needs q in {0,1}");
    if (n < 3 + q) throw precondition_error("n too small for this family");
    if (n > 20) throw budget_error("quasi search budget exceeded (n > 20)");

    if (kind == FamilyKind::Cycles && q == 1 && n == 4) {
        // no seed-shaped optimum here; fall back to the full search
        SearchReport rep;
        rep.mode = SearchMode::Full;
        for (int k = 1;; ++k) {
            long long leaves = 0;
            auto witness = full_search(n, FamilySpec::cycles(q), k, &leaves);
            rep.explored += leaves;
            if (!witness) break;
            rep.best_k = k;
            rep.coloring = std::move(witness);
        }
        return rep;
    }

    auto seed = build_seed(2, q);
    std::vector<int> z_colors(seed.k);
    std::iota(z_colors.begin(), z_colors.end(), 1);

    long long explored = 0;
    std::vector<int> best_tail;
    int best_k = 0;
    auto consider = [&](const std::vector<int>& tail_inherited, int k) {
        ++explored;
        std::vector<int> seq;
        for (int v = 0; v < seed.z; ++v) seq.push_back(seed.main_color(v));
        seq.insert(seq.end(), tail_inherited.begin(), tail_inherited.end());
        for (int t = 1; t <= k; ++t)
            if (!characterization_color_ok(seq, seed.z, z_colors, kind, q, t)) return;
        if (k > best_k) {
            best_k = k;
            best_tail = tail_inherited;
        }
    };

    int avail = n - seed.z;
    for (int glued = 0; glued <= avail; ++glued) {
        std::vector<int> tail(glued, seed.k);
        int rest = avail - glued;
        // fresh single-block classes after the glued run; the final block
        // needs length >= 2 (a trailing one-vertex class has no edges)
        std::function<void(int, int)> rec = [&](int remaining, int next_color) {
            if (remaining == 0) {
                consider(tail, next_color - 1);
                return;
            }
            for (int s = 1; s <= remaining; ++s) {
                if (s == remaining && s < 2) continue;
                tail.insert(tail.end(), s, next_color);
                rec(remaining - s, next_color + 1);
                tail.resize(tail.size() - s);
            }
        };
        rec(rest, seed.k + 1);
    }

    SearchReport rep;
    rep.mode = SearchMode::Quasi;
    rep.explored = explored;
    rep.best_k = best_k;
    rep.seed_size = seed.z;
    std::vector<int> seq;
    for (int v = 0; v < seed.z; ++v) seq.push_back(seed.main_color(v));
    seq.insert(seq.end(), best_tail.begin(), best_tail.end());
    rep.blocks = BlockSequence::from_sequence(seq);
    rep.coloring = assemble_quasi(seed, best_tail);
    return rep;
}

namespace {

// (max, min)-ordered edge list of K_n: (0,1), (0,2), (1,2), (0,3), ...
std::vector<Edge> triangle_edge_order(int n)
{
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) edges.push_back({u, v});
    return edges;
}

// Lexicographic minimality of the colored K_m prefix under vertex
// relabeling with first-appearance color renumbering.
bool prefix_canonical(const std::vector<int>& assign, int m, const std::vector<Edge>& order)
{
    int e = m * (m - 1) / 2;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> relabeled(e), renumber;
    do {
        renumber.assign(e + 2, 0);
        int next = 0;
        bool smaller = false, bigger = false;
        for (int i = 0; i < e && !smaller && !bigger; ++i) {
            auto [u, v] = order[i];
            auto [a, b] = make_edge(perm[u], perm[v]);
            // locate (a,b) in the triangle order: index within K_b block
            int idx = b * (b - 1) / 2 + a;
            int c = assign[idx];
            int& slot = renumber[c];
            if (slot == 0) slot = ++next;
            relabeled[i] = slot;
            if (relabeled[i] < assign[i]) smaller = true;
            if (relabeled[i] > assign[i]) bigger = true;
        }
        if (smaller) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

}  // namespace

std::optional<EdgeColoring> full_search(int n, const FamilySpec& family, int k,
                                        long long* explored)
{
    family.validate_for(n);
    if (n > 6) throw budget_error("full search budget exceeded (n > 6)");
    int e = n * (n - 1) / 2;
    if (k < 1 || k > e) return std::nullopt;
    auto order = triangle_edge_order(n);
    std::vector<int> assign(e, 0);
    long long leaves = 0;
    std::optional<EdgeColoring> found;

    std::function<bool(int, int)> rec = [&](int i, int used) {
        if (used + (e - i) < k) return false;  // cannot reach k colors
        if (i == e) {
            ++leaves;
            std::vector<std::array<int, 3>> triples;
            for (int t = 0; t < e; ++t)
                triples.push_back({order[t].first, order[t].second, assign[t]});
            EdgeColoring c = EdgeColoring::from_edges(n, k, triples);
            if (verify(c, family).polychromatic) {
                found = std::move(c);
                return true;
            }
            return false;
        }
        auto [u, v] = order[i];
        for (int c = 1; c <= std::min(k, used + 1); ++c) {
            assign[i] = c;
            int now = std::max(used, c);
            // when vertex v's edges complete a K_{v+1}, prune non-canonical prefixes
            if (u == v - 1 && !prefix_canonical(assign, v + 1, order)) continue;
            if (rec(i + 1, now)) return true;
        }
        assign[i] = 0;
        return false;
    };
    rec(0, 0);
    if (explored) *explored += leaves;
    return found;
}

}  // namespace polychrome
