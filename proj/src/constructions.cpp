#include "polychrome/constructions.hpp"

#include <cassert>
#include <numeric>

#include "polychrome/numbers.hpp"

namespace polychrome {

int SeedColoring::internal_color(int u, int v) const
{
    for (const auto& [a, b, c] : internal_)
        if ((a == u && b == v) || (a == v && b == u)) return c;
    throw precondition_error("edge not inside seed");
}

ConstructedColoring construct_simply_ordered(FamilyKind kind, int q, int n)
{
    if (q < 0) throw precondition_error("q must be nonnegative");
    std::vector<int> sizes;
    if (kind == FamilyKind::Matchings) {
        if (n - q < 2 || (n - q) % 2 != 0)
            throw precondition_error("matchings need n-q positive and even");
        int k = static_cast<int>(p_f(n, q).value);
        // class sizes (q+1), 2(q+1), 4(q+1), ..., remainder
        for (int i = 1; i < k; ++i) sizes.push_back((q + 1) << (i - 1));
        sizes.push_back(n - std::accumulate(sizes.begin(), sizes.end(), 0));
    } else if (kind == FamilyKind::TwoRegular || kind == FamilyKind::Cycles) {
        if (q < 2)
            throw precondition_error("q in {0,1} has no simply-ordered optimum; "
                                     "use the quasi construction");
        if (n < q + 3) throw precondition_error("need n >= q+3");
        if (kind == FamilyKind::Cycles) {
            if ((n - q) % 2 != 0 && n >= 2 * q + 2 && n <= 3 * q + 2)
                throw precondition_error("no simply-ordered optimum exists: a 2-coloring "
                                         "is possible here but not a simply-ordered one");
            if (q == 2 && n == 5)
                throw precondition_error("no simply-ordered optimum exists: two "
                                         "monochromatic 5-cycles beat every ordered coloring");
        }
        if (kind == FamilyKind::TwoRegular) {
            // same class sizes as the matching coloring
            int k = static_cast<int>(p_r(n, q).value);
            for (int i = 1; i < k; ++i) sizes.push_back((q + 1) << (i - 1));
        } else {
            // q+1, 2q+1, 4q+2, ..., remainder
            int k = static_cast<int>(p_c(n, q).value);
            for (int i = 1; i < k; ++i)
                sizes.push_back(i == 1 ? q + 1 : (q << (i - 1)) + (1 << (i - 2)));
        }
        sizes.push_back(n - std::accumulate(sizes.begin(), sizes.end(), 0));
    } else {
        throw precondition_error("no simply-ordered construction for this family");
    }

    BlockSequence blocks;
    for (size_t i = 0; i < sizes.size(); ++i)
        blocks.blocks.push_back({static_cast<int>(i) + 1, sizes[i]});
    assert(blocks.total_length() == n);
    return {coloring_from_blocks(blocks), blocks, 0};
}

SeedColoring build_seed(int r, int q)
{
    if (r < 1 || q < 0) throw precondition_error("need r >= 1 and q >= 0");
    if (q > 2 * r - 3)
        throw precondition_error("no multi-color seed exists: q > 2r-3 forces one color");
    SeedColoring seed;
    seed.r = r;
    seed.q = q;
    seed.k = (2 * r - 2) / (q + 1) + 1;
    seed.z = seed.k * (q + 1);
    for (int j = 0; j < seed.k; ++j) {
        std::vector<int> part(q + 1);
        std::iota(part.begin(), part.end(), j * (q + 1));
        seed.parts.push_back(std::move(part));
    }

    // Between parts at cyclic forward distance d in [1, floor((k-1)/2)] the
    // earlier part keeps its own color; at distance k/2 (k even) a circulant
    // split gives each vertex about half own-colored cross edges.
    int k = seed.k, w = q + 1;
    int half = (k - 1) / 2;
    auto cross_color = [&](int pi, int a, int pj, int b) {
        int fwd = ((pj - pi) % k + k) % k;
        if (fwd >= 1 && fwd <= half) return pi + 1;
        if (k - fwd >= 1 && k - fwd <= half) return pj + 1;
        // fwd == k/2 with k even; orient by lower part index
        int lo = std::min(pi, pj), hi = std::max(pi, pj);
        int la = (pi == lo) ? a : b;
        int hb = (pi == lo) ? b : a;
        int diff = ((hb - la) % w + w) % w;
        return diff < (w + 1) / 2 ? lo + 1 : hi + 1;
    };

    for (int u = 0; u < seed.z; ++u)
        for (int v = u + 1; v < seed.z; ++v) {
            int pu = u / w, pv = v / w;
            int c = (pu == pv) ? pu + 1 : cross_color(pu, u % w, pv, v % w);
            seed.internal_.push_back({u, v, c});
        }

    // balance invariant: every vertex sees floor/ceil of (q+1)(k-1)/2
    // off-color edges inside Z
    std::vector<int> off(seed.z, 0);
    for (const auto& [u, v, c] : seed.internal_) {
        if (seed.main_color(u) != c) ++off[u];
        if (seed.main_color(v) != c) ++off[v];
    }
    for (int v = 0; v < seed.z; ++v) {
        int t2 = (q + 1) * (k - 1);  // twice the target
        if (2 * off[v] != t2 && 2 * off[v] != t2 - 1 && 2 * off[v] != t2 + 1)
            throw std::logic_error("seed balance violated");
    }
    return seed;
}

ConstructedColoring extend_seed(const SeedColoring& seed, int n, ExtensionKind kind)
{
    if (n < seed.z) throw precondition_error("n must be at least the seed size");
    int q = seed.q;
    int avail = n - seed.z;
    bool connected = kind == ExtensionKind::Connected;

    // minimal tail class sizes: prefix + q (+1 for the regular family);
    // the connected family needs one extra vertex in the very last class
    std::vector<int> tail;
    int prefix = seed.z;
    while (true) {
        int need = prefix + q + (connected ? 0 : 1);
        int used = std::accumulate(tail.begin(), tail.end(), 0);
        if (used + need + (connected ? 1 : 0) > avail) break;
        tail.push_back(need);
        prefix += need;
    }
    if (!tail.empty()) {
        int used = std::accumulate(tail.begin(), tail.end(), 0);
        tail.back() += avail - used;  // last class absorbs the surplus
    }

    std::vector<int> tail_inherited;
    if (tail.empty()) {
        tail_inherited.assign(avail, seed.k);  // join the last seed class
    } else {
        for (size_t i = 0; i < tail.size(); ++i)
            tail_inherited.insert(tail_inherited.end(), tail[i],
                                  seed.k + 1 + static_cast<int>(i));
    }

    std::vector<int> inherited;
    for (int v = 0; v < seed.z; ++v) inherited.push_back(seed.main_color(v));
    inherited.insert(inherited.end(), tail_inherited.begin(), tail_inherited.end());
    return {assemble_quasi(seed, tail_inherited), BlockSequence::from_sequence(inherited),
            seed.z};
}

EdgeColoring assemble_quasi(const SeedColoring& seed, const std::vector<int>& tail_inherited)
{
    int n = seed.z + static_cast<int>(tail_inherited.size());
    int k = seed.k;
    for (int c : tail_inherited) k = std::max(k, c);
    std::vector<std::array<int, 3>> triples;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c;
            if (v < seed.z)
                c = seed.internal_color(u, v);
            else if (u < seed.z)
                c = seed.main_color(u);
            else
                c = tail_inherited[u - seed.z];
            triples.push_back({u, v, c});
        }
    return EdgeColoring::from_edges(n, k, triples);
}

ConstructedColoring construct_quasi(FamilyKind kind, int q, int n)
{
    if (kind != FamilyKind::TwoRegular && kind != FamilyKind::Cycles)
        throw precondition_error("quasi constructions exist for cycles and two-regular only");
    if (q != 0 && q != 1) throw precondition_error("quasi constructions need q in {0,1}");
    if (n < 3 + q) throw precondition_error("n too small for this family");
    if (kind == FamilyKind::Cycles && q == 1 && n == 4)
        throw precondition_error("no seed-shaped optimum at n=4: a proper 3-edge-coloring "
                                 "of K_4 makes every triangle rainbow");
    auto seed = build_seed(2, q);
    auto out = extend_seed(seed, n,
                           kind == FamilyKind::Cycles ? ExtensionKind::Connected
                                                      : ExtensionKind::Regular);
    // color count must match the closed form
    auto expect = kind == FamilyKind::Cycles ? p_c(n, q) : p_r(n, q);
    if (out.coloring.k() != expect.value) throw std::logic_error("quasi class count mismatch");
    return out;
}

EdgeColoring construct_bipartite_witness(int s, int n)
{
    if (s < 5) throw precondition_error("need cycle length s >= 5");
    if (n < s) throw precondition_error("need n >= s");
    int cap = (s % 2 != 0) ? 2 * s - 2 : 3 * s / 2 - 2;
    if (n > cap)
        throw precondition_error("witness not guaranteed: n exceeds " + std::to_string(cap));
    int b = s - 1;      // fixed side of the red bipartite block
    int a = n - b;      // shrinking side, 1 <= a <= cap - b
    std::vector<std::array<int, 3>> triples;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool cross = (u < a) != (v < a);
            triples.push_back({u, v, cross ? 1 : 2});
        }
    return EdgeColoring::from_edges(n, 2, triples);
}

}  // namespace polychrome
