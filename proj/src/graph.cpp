#include "polychrome/graph.hpp"

#include <numeric>

namespace polychrome {

EdgeColoring::EdgeColoring(int n, int k, std::vector<int> upper_tri)
    : n_(n), k_(k), colors_(std::move(upper_tri))
{
    validate();
}

void EdgeColoring::validate() const
{
    if (n_ < 2) throw precondition_error("coloring needs at least 2 vertices");
    size_t expect = static_cast<size_t>(n_) * (n_ - 1) / 2;
    if (colors_.size() != expect)
        throw precondition_error("coloring must assign all C(n,2) edges");
    if (k_ < 1) throw precondition_error("color count must be positive");
    std::vector<bool> seen(k_ + 1, false);
    for (int c : colors_) {
        if (c < 1 || c > k_) throw precondition_error("edge color out of range 1..k");
        seen[c] = true;
    }
    for (int c = 1; c <= k_; ++c)
        if (!seen[c])
            throw precondition_error("color " + std::to_string(c) + " unused; colors must be dense");
}

EdgeColoring EdgeColoring::from_edges(int n, int k,
                                      const std::vector<std::array<int, 3>>& triples)
{
    if (n < 2) throw precondition_error("coloring needs at least 2 vertices");
    size_t expect = static_cast<size_t>(n) * (n - 1) / 2;
    std::vector<int> tri(expect, 0);
    EdgeColoring shape(n, 1, std::vector<int>(expect, 1));  // for index()
    for (const auto& [u, v, c] : triples) {
        auto [a, b] = make_edge(u, v);
        if (b >= n) throw precondition_error("vertex out of range");
        size_t i = shape.index(a, b);
        if (tri[i] != 0) throw precondition_error("duplicate edge in coloring");
        tri[i] = c;
    }
    for (int c : tri)
        if (c == 0) throw precondition_error("missing edge in coloring");
    return EdgeColoring(n, k, std::move(tri));
}

std::vector<std::array<int, 3>> EdgeColoring::edge_triples() const
{
    std::vector<std::array<int, 3>> out;
    out.reserve(colors_.size());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            out.push_back({u, v, colors_[index(u, v)]});
    return out;
}

EdgeColoring EdgeColoring::permute_colors(const std::vector<int>& perm) const
{
    if (static_cast<int>(perm.size()) != k_ + 1)
        throw precondition_error("color permutation must have size k+1 (index 0 unused)");
    std::vector<int> tri(colors_.size());
    for (size_t i = 0; i < colors_.size(); ++i) tri[i] = perm[colors_[i]];
    return EdgeColoring(n_, k_, std::move(tri));
}

EdgeColoring EdgeColoring::permute_vertices(const std::vector<int>& perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw precondition_error("vertex permutation must have size n");
    std::vector<int> tri(colors_.size());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            auto [a, b] = make_edge(perm[u], perm[v]);
            tri[index(a, b)] = colors_[index(u, v)];
        }
    return EdgeColoring(n_, k_, std::move(tri));
}

Subgraph Subgraph::from_pairs(std::vector<Edge> pairs)
{
    for (auto& e : pairs) e = make_edge(e.first, e.second);
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw precondition_error("duplicate edge in subgraph");
    return Subgraph{std::move(pairs)};
}

std::vector<int> Subgraph::vertices() const
{
    std::vector<int> vs;
    for (const auto& [u, v] : edges) {
        vs.push_back(u);
        vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

int Subgraph::max_vertex() const
{
    int m = -1;
    for (const auto& [u, v] : edges) m = std::max(m, v);
    return m;
}

bool Subgraph::contains_color(const EdgeColoring& coloring, int color) const
{
    for (const auto& [u, v] : edges)
        if (coloring.color(u, v) == color) return true;
    return false;
}

std::string family_kind_name(FamilyKind kind)
{
    switch (kind) {
        case FamilyKind::Matchings: return "matchings";
        case FamilyKind::Cycles: return "cycles";
        case FamilyKind::TwoRegular: return "two-regular";
        case FamilyKind::RRegular: return "r-regular";
        case FamilyKind::ConnectedRRegular: return "connected-r-regular";
    }
    return "?";
}

void FamilySpec::validate_for(int n) const
{
    if (q < 0) throw precondition_error("q must be nonnegative");
    int span = n - q;
    switch (kind) {
        case FamilyKind::Matchings:
            if (span <= 0 || span % 2 != 0)
                throw precondition_error("matchings need n-q positive and even");
            break;
        case FamilyKind::Cycles:
            if (span < 3) throw precondition_error("cycles need n-q >= 3");
            break;
        case FamilyKind::TwoRegular:
            if (span < 3) throw precondition_error("two-regular subgraphs need n-q >= 3");
            break;
        case FamilyKind::RRegular:
        case FamilyKind::ConnectedRRegular:
            if (r < 1 || (kind == FamilyKind::ConnectedRRegular && r < 2))
                throw precondition_error("degree r too small");
            if (span < r + 1) throw precondition_error("r-regular subgraphs need n-q >= r+1");
            if (span % 2 != 0 && r % 2 != 0)
                throw precondition_error("r-regular subgraphs need n-q even when r is odd");
            break;
    }
}

bool FamilySpec::valid_for(int n) const
{
    try {
        validate_for(n);
        return true;
    } catch (const precondition_error&) {
        return false;
    }
}

namespace {

// Degrees over the support of h; vertices absent from h get degree 0.
std::vector<int> degrees(int n, const Subgraph& h)
{
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : h.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool connected_on_support(int n, const Subgraph& h)
{
    auto vs = h.vertices();
    if (vs.empty()) return false;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : h.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{vs[0]};
    seen[vs[0]] = true;
    size_t reached = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++reached;
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    return reached == vs.size();
}

}  // namespace

bool family_member(const FamilySpec& spec, int n, const Subgraph& h)
{
    spec.validate_for(n);
    if (h.max_vertex() >= n) throw precondition_error("subgraph vertex out of range");
    int span = n - spec.q;
    auto deg = degrees(n, h);
    auto support = h.vertices();
    int covered = static_cast<int>(support.size());

    auto all_support_degree = [&](int d) {
        for (int v : support)
            if (deg[v] != d) return false;
        return true;
    };

    switch (spec.kind) {
        case FamilyKind::Matchings:
            return covered == span && all_support_degree(1);
        case FamilyKind::Cycles:
            return covered == span && all_support_degree(2) && connected_on_support(n, h);
        case FamilyKind::TwoRegular:
            return covered >= span && all_support_degree(2);
        case FamilyKind::RRegular:
            return covered == span && all_support_degree(spec.r);
        case FamilyKind::ConnectedRRegular:
            return covered == span && all_support_degree(spec.r) && connected_on_support(n, h);
    }
    return false;
}

std::set<int> colors_on(const EdgeColoring& coloring, const Subgraph& h)
{
    std::set<int> out;
    for (const auto& [u, v] : h.edges) out.insert(coloring.color(u, v));
    return out;
}

int BlockSequence::total_length() const
{
    int total = 0;
    for (const auto& b : blocks) total += b.length;
    return total;
}

std::vector<int> BlockSequence::expand() const
{
    std::vector<int> seq;
    seq.reserve(total_length());
    for (const auto& b : blocks) seq.insert(seq.end(), b.length, b.color);
    return seq;
}

BlockSequence BlockSequence::from_sequence(const std::vector<int>& colors)
{
    BlockSequence out;
    for (int c : colors) {
        if (!out.blocks.empty() && out.blocks.back().color == c)
            ++out.blocks.back().length;
        else
            out.blocks.push_back({c, 1});
    }
    return out;
}

void BlockSequence::validate_inherited() const
{
    if (blocks.empty()) throw precondition_error("empty block sequence");
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].length < 1) throw precondition_error("block length must be positive");
        if (blocks[i].color < 1) throw precondition_error("block color must be positive");
        if (i > 0 && blocks[i].color == blocks[i - 1].color)
            throw precondition_error("adjacent blocks must differ in color");
    }
    // The last vertex inherits the color of the one before it.
    if (blocks.back().length < 2 && total_length() >= 2)
        throw precondition_error("last block must contain the final two vertices");
}

EdgeColoring coloring_from_blocks(const BlockSequence& blocks)
{
    blocks.validate_inherited();
    auto seq = blocks.expand();
    int n = static_cast<int>(seq.size());
    if (n < 2) throw precondition_error("need at least 2 vertices");
    int k = 0;
    for (int c : seq) k = std::max(k, c);
    std::vector<std::array<int, 3>> triples;
    triples.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) triples.push_back({u, v, seq[u]});
    return EdgeColoring::from_edges(n, k, triples);
}

}  // namespace polychrome
