#include "polychrome/structure.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace polychrome {

std::string order_kind_name(OrderAnalysis::Kind kind)
{
    switch (kind) {
        case OrderAnalysis::Kind::Unordered: return "unordered";
        case OrderAnalysis::Kind::Ordered: return "ordered";
        case OrderAnalysis::Kind::SimplyOrdered: return "simply-ordered";
        case OrderAnalysis::Kind::QuasiOrdered: return "quasi-ordered";
        case OrderAnalysis::Kind::QuasiSimplyOrdered: return "quasi-simply-ordered";
    }
    return "?";
}

namespace {

// Greedy extraction: repeatedly remove the lowest vertex whose edges to all
// remaining vertices share one color.  Any two simultaneous candidates share
// their edge, hence their color, so the tie-break cannot change the block
// structure.  `solo_color` is the inherited color of a one-vertex set.
std::optional<std::pair<std::vector<int>, std::vector<int>>> greedy_order(
    const EdgeColoring& c, std::vector<int> remaining, int solo_color)
{
    std::vector<int> order, inherited;
    if (remaining.size() == 1) return {{std::move(remaining), {solo_color}}};
    while (remaining.size() > 1) {
        bool found = false;
        for (size_t i = 0; i < remaining.size() && !found; ++i) {
            int v = remaining[i];
            int mono = -1;
            bool ok = true;
            for (int u : remaining) {
                if (u == v) continue;
                int col = c.color(u, v);
                if (mono == -1)
                    mono = col;
                else if (mono != col) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                order.push_back(v);
                inherited.push_back(mono);
                remaining.erase(remaining.begin() + i);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    order.push_back(remaining[0]);
    inherited.push_back(inherited.back());  // last vertex copies its predecessor
    return {{std::move(order), std::move(inherited)}};
}

bool one_block_per_color(const std::vector<int>& seq, size_t from = 0)
{
    std::vector<int> seen;
    for (size_t i = from; i < seq.size(); ++i) {
        if (i > from && seq[i] == seq[i - 1]) continue;
        if (std::find(seen.begin(), seen.end(), seq[i]) != seen.end()) return false;
        seen.push_back(seq[i]);
    }
    return true;
}

struct SeedCandidate {
    int v = -1;
    int main = -1;
    int off_to = -1;
    int off_color = -1;
};

// Vertices incident to exactly n-2 edges of one color (n >= 4 keeps the
// main color unique).
std::vector<SeedCandidate> seed_candidates(const EdgeColoring& c)
{
    int n = c.n();
    std::vector<SeedCandidate> out;
    for (int v = 0; v < n; ++v) {
        std::vector<int> freq(c.k() + 1, 0);
        for (int u = 0; u < n; ++u)
            if (u != v) ++freq[c.color(u, v)];
        int main = -1;
        for (int col = 1; col <= c.k(); ++col)
            if (freq[col] == n - 2) main = col;
        if (main < 0) continue;
        SeedCandidate cand{v, main, -1, -1};
        for (int u = 0; u < n; ++u)
            if (u != v && c.color(u, v) != main) {
                cand.off_to = u;
                cand.off_color = c.color(u, v);
            }
        out.push_back(cand);
    }
    return out;
}

bool valid_seed_subset(const std::vector<SeedCandidate>& chosen)
{
    for (const auto& cand : chosen) {
        bool ok = false;
        for (const auto& other : chosen)
            if (other.v == cand.off_to && other.main == cand.off_color) ok = true;
        if (!ok) return false;
    }
    std::vector<int> mains;
    for (const auto& cand : chosen) mains.push_back(cand.main);
    std::sort(mains.begin(), mains.end());
    if (chosen.size() == 3)
        return mains[0] != mains[1] && mains[1] != mains[2];
    // size 4: two pairs of equal mains with different colors
    return mains[0] == mains[1] && mains[2] == mains[3] && mains[1] != mains[2];
}

// Seed members first (equal mains adjacent, pairs ordered by least vertex),
// then the rest ascending.
std::optional<OrderAnalysis> analyze_with_seed(const EdgeColoring& c,
                                               std::vector<SeedCandidate> chosen)
{
    std::sort(chosen.begin(), chosen.end(),
              [](const SeedCandidate& a, const SeedCandidate& b) { return a.v < b.v; });
    if (chosen.size() == 4)
        std::stable_sort(chosen.begin(), chosen.end(),
                         [&](const SeedCandidate& a, const SeedCandidate& b) {
                             return (a.main == chosen[0].main) > (b.main == chosen[0].main);
                         });

    OrderAnalysis a;
    a.z_size = static_cast<int>(chosen.size());
    for (const auto& cand : chosen) {
        a.order.push_back(cand.v);
        a.inherited.push_back(cand.main);
        a.z_main.push_back(cand.main);
        a.z_colors.push_back(cand.main);
    }
    std::sort(a.z_colors.begin(), a.z_colors.end());
    a.z_colors.erase(std::unique(a.z_colors.begin(), a.z_colors.end()), a.z_colors.end());

    std::vector<int> tail;
    for (int v = 0; v < c.n(); ++v)
        if (std::find(a.order.begin(), a.order.end(), v) == a.order.end()) tail.push_back(v);
    if (tail.empty()) {
        a.kind = OrderAnalysis::Kind::QuasiSimplyOrdered;
        return a;
    }
    auto ord = greedy_order(c, tail, a.z_main.back());
    if (!ord) return std::nullopt;
    a.order.insert(a.order.end(), ord->first.begin(), ord->first.end());
    a.inherited.insert(a.inherited.end(), ord->second.begin(), ord->second.end());
    a.kind = one_block_per_color(a.inherited, a.z_size)
                 ? OrderAnalysis::Kind::QuasiSimplyOrdered
                 : OrderAnalysis::Kind::QuasiOrdered;
    return a;
}

}  // namespace

OrderAnalysis detect_order(const EdgeColoring& c)
{
    int n = c.n();
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (auto ord = greedy_order(c, all, 1)) {
        OrderAnalysis a;
        a.order = std::move(ord->first);
        a.inherited = std::move(ord->second);
        a.kind = one_block_per_color(a.inherited) ? OrderAnalysis::Kind::SimplyOrdered
                                                  : OrderAnalysis::Kind::Ordered;
        return a;
    }

    if (n == 3) {
        // Rainbow triangle: every vertex has one edge of each color, so the
        // whole graph is a 3-seed; orient mains cyclically.
        if (c.k() == 3) {
            std::vector<SeedCandidate> chosen;
            for (int v = 0; v < 3; ++v) {
                int next = (v + 1) % 3, prev = (v + 2) % 3;
                chosen.push_back({v, c.color(v, next), prev, c.color(v, prev)});
            }
            if (valid_seed_subset(chosen))
                if (auto a = analyze_with_seed(c, chosen)) return *a;
        }
        return {};
    }

    auto cands = seed_candidates(c);
    auto consider = [&](const std::vector<int>& idx) -> std::optional<OrderAnalysis> {
        std::vector<SeedCandidate> chosen;
        for (int i : idx) chosen.push_back(cands[i]);
        if (!valid_seed_subset(chosen)) return std::nullopt;
        return analyze_with_seed(c, chosen);
    };
    int m = static_cast<int>(cands.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int d = b + 1; d < m; ++d)
                if (auto res = consider({a, b, d})) return *res;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int d = b + 1; d < m; ++d)
                for (int e = d + 1; e < m; ++e)
                    if (auto res = consider({a, b, d, e})) return *res;
    return {};
}

bool characterization_color_ok(const std::vector<int>& inherited, int z_size,
                               const std::vector<int>& z_colors, FamilyKind kind, int q,
                               int color)
{
    int n = static_cast<int>(inherited.size());
    bool on_seed_edge =
        std::find(z_colors.begin(), z_colors.end(), color) != z_colors.end();
    // cnt[j] = #positions <= j with this color (1-based)
    std::vector<int> cnt(n + 1, 0);
    for (int j = 1; j <= n; ++j) cnt[j] = cnt[j - 1] + (inherited[j - 1] == color);

    switch (kind) {
        case FamilyKind::Matchings: {
            for (int j = 1; j <= n; ++j)
                if (2 * cnt[j] > j + q) return true;
            return false;
        }
        case FamilyKind::Cycles: {
            if (q == 0 && z_size == 3 && on_seed_edge) return true;
            if (q == 1 && z_size == 4 && on_seed_edge) return true;
            for (int j = q + 1; j <= n - 1; ++j)
                if (2 * cnt[j] >= j + q) return true;
            return false;
        }
        case FamilyKind::TwoRegular: {
            if (q == 0 && z_size >= 3 && on_seed_edge) return true;
            if (q == 1 && z_size == 4 && on_seed_edge) return true;
            for (int j = 1; j <= n; ++j)
                if (2 * cnt[j] > j + q) return true;
            if (2 + q <= n && 2 * cnt[2 + q] == 2 + 2 * q) return true;
            if (n - 2 >= 1 && 2 * cnt[n - 2] == n - 2 + q) return true;
            for (int j = 4 + q; j <= n - 3; ++j)
                if (2 * cnt[j] == j + q && 2 * cnt[j + 2] == j + q + 2) return true;
            return false;
        }
        default:
            throw precondition_error("characterization covers matchings, cycles and "
                                     "two-regular families only");
    }
}

bool satisfies_characterization(const OrderAnalysis& analysis, const FamilySpec& family)
{
    if (analysis.kind == OrderAnalysis::Kind::Unordered)
        throw precondition_error("characterization needs an ordered or quasi-ordered coloring");
    if (family.kind == FamilyKind::Matchings && analysis.quasi_like())
        throw precondition_error("the matching characterization is only sound for "
                                 "purely ordered colorings");
    family.validate_for(static_cast<int>(analysis.inherited.size()));

    std::vector<int> colors = analysis.inherited;
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    for (int t : colors)
        if (!characterization_color_ok(analysis.inherited, analysis.z_size, analysis.z_colors,
                                       family.kind, family.q, t))
            return false;
    return true;
}

namespace {

struct Run {
    int start;  // 1-based
    int end;
    int color;
};

std::vector<Run> runs_of(const std::vector<int>& seq)
{
    std::vector<Run> out;
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
        if (!out.empty() && out.back().color == seq[i])
            out.back().end = i + 1;
        else
            out.push_back({i + 1, i + 1, seq[i]});
    }
    return out;
}

std::vector<int> prefix_counts(const std::vector<int>& seq, int color)
{
    int n = static_cast<int>(seq.size());
    std::vector<int> cnt(n + 1, 0);
    for (int j = 1; j <= n; ++j) cnt[j] = cnt[j - 1] + (seq[j - 1] == color);
    return cnt;
}

// Smallest witness index for the block shift, per family.  The returned j
// always satisfies seq[j-1] == color.
std::optional<int> shift_witness(const std::vector<int>& seq, FamilyKind kind, int q,
                                 int color)
{
    int n = static_cast<int>(seq.size());
    auto cnt = prefix_counts(seq, color);
    if (kind == FamilyKind::Matchings) {
        for (int j = 1; j <= n; ++j)
            if (2 * cnt[j] > j + q) return j;
        return std::nullopt;
    }
    if (kind == FamilyKind::Cycles) {
        for (int j = q + 1; j <= n - 1; ++j)
            if (2 * cnt[j] >= j + q) return j;
        return std::nullopt;
    }
    // two-regular: strict first, then the equality indices
    for (int j = 1; j <= n; ++j)
        if (2 * cnt[j] > j + q) return j;
    if (2 + q <= n && 2 * cnt[2 + q] == 2 + 2 * q) return 2 + q;
    if (n - 2 >= 1 && 2 * cnt[n - 2] == n - 2 + q) return n - 2;
    return std::nullopt;
}

// Pair-equality index for the two-regular family: 2cnt(j) = j+q and
// 2cnt(j+2) = j+q+2 with j in [4+q, n-3].
std::optional<int> pair_witness(const std::vector<int>& seq, int q, int color)
{
    int n = static_cast<int>(seq.size());
    auto cnt = prefix_counts(seq, color);
    for (int j = 4 + q; j <= n - 3; ++j)
        if (2 * cnt[j] == j + q && 2 * cnt[j + 2] == j + q + 2) return j;
    return std::nullopt;
}

// Runs of `color` that touch a position > z.
std::vector<Run> tail_runs(const std::vector<Run>& runs, int color, int z)
{
    std::vector<Run> out;
    for (const auto& r : runs)
        if (r.color == color && r.end > z) out.push_back(r);
    return out;
}

// One block shift for `color` at witness index j: delete a block strictly
// right of the witness (appending recolored vertices at the end), or move an
// earlier block next to the one holding the witness.  Returns false when
// `color` has at most one block outside the seed.
bool apply_shift(std::vector<int>& seq, int z, int color, int j)
{
    auto runs = runs_of(seq);
    if (tail_runs(runs, color, z).size() < 2) return false;
    assert(seq[j - 1] == color);

    // delete case: leftmost block of this color starting right of j
    for (const auto& r : runs)
        if (r.color == color && r.start > j) {
            assert(r.start > z);
            int len = r.end - r.start + 1;
            seq.erase(seq.begin() + (r.start - 1), seq.begin() + r.end);
            seq.insert(seq.end(), len, seq.back());
            return true;
        }

    // move case: bring the leftmost movable block next to the one holding j
    const Run* holder = nullptr;
    for (const auto& r : runs)
        if (r.color == color && r.start <= j && j <= r.end) holder = &r;
    assert(holder && holder->start > z);
    const Run* movable = nullptr;
    for (const auto& r : runs)
        if (r.color == color && r.start > z && r.end < holder->start && !movable) movable = &r;
    assert(movable);
    int len = movable->end - movable->start + 1;
    seq.erase(seq.begin() + (movable->start - 1), seq.begin() + movable->end);
    int dest = holder->start - len;  // holder shifted left by the erase
    seq.insert(seq.begin() + (dest - 1), len, color);
    return true;
}

}  // namespace

EdgeColoring block_shift_normalize(const EdgeColoring& coloring, const FamilySpec& family)
{
    auto analysis = detect_order(coloring);
    if (analysis.kind == OrderAnalysis::Kind::Unordered)
        throw precondition_error("normalization needs an ordered or quasi-ordered coloring");
    if (family.kind == FamilyKind::Matchings && analysis.quasi_like())
        throw precondition_error("matching normalization is only defined for ordered inputs");
    if (family.kind != FamilyKind::Matchings && family.kind != FamilyKind::Cycles &&
        family.kind != FamilyKind::TwoRegular)
        throw precondition_error("normalization covers matchings, cycles and two-regular only");
    if (!satisfies_characterization(analysis, family))
        throw precondition_error("input coloring is not polychromatic for the family");

    std::vector<int> seq = analysis.inherited;
    int z = analysis.z_size;
    int n = static_cast<int>(seq.size());
    FamilyKind kind = family.kind;
    int q = family.q;

    while (true) {
        auto runs = runs_of(seq);
        int target = 0;  // leftmost color with two or more blocks outside the seed
        int target_start = n + 1;
        std::vector<int> colors;
        for (const auto& r : runs)
            if (std::find(colors.begin(), colors.end(), r.color) == colors.end())
                colors.push_back(r.color);
        for (int t : colors) {
            auto tr = tail_runs(runs, t, z);
            if (tr.size() >= 2 && tr.front().start < target_start) {
                target = t;
                target_start = tr.front().start;
            }
        }
        if (target == 0) break;

        auto j_opt = shift_witness(seq, kind, q, target);
        if (!j_opt && kind == FamilyKind::TwoRegular) {
            // pair-equality case: swap the two positions after the witness,
            // merging the target's blocks and leaving it a strict witness
            auto pj = pair_witness(seq, q, target);
            if (!pj) throw precondition_error("block shift needs a polychromatic input");
            int j = *pj;  // seq is t,u,t at positions j, j+1, j+2
            assert(seq[j - 1] == target && seq[j + 1] == target && seq[j] != target);
            std::swap(seq[j], seq[j + 1]);
            j_opt = shift_witness(seq, kind, q, target);
        }
        if (!j_opt) throw precondition_error("block shift needs a polychromatic input");
        apply_shift(seq, z, target, *j_opt);

        for (int t : colors)
            if (!characterization_color_ok(seq, z, analysis.z_colors, kind, q, t))
                throw std::logic_error("block shift broke the characterization");
    }

    // rebuild the coloring from the normalized sequence
    if (z == 0) return coloring_from_blocks(BlockSequence::from_sequence(seq));
    int k = coloring.k();
    std::vector<std::array<int, 3>> triples;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c;
            if (v < z)
                c = coloring.color(analysis.order[u], analysis.order[v]);
            else if (u < z)
                c = analysis.z_main[u];
            else
                c = seq[u];
            triples.push_back({u, v, c});
        }
    return EdgeColoring::from_edges(n, k, triples);
}

}  // namespace polychrome
