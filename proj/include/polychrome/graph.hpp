// Core data model: edge-colored complete graphs, subgraphs, subgraph families.
//
// Conventions used throughout the project:
//   - vertices are 0-based integers 0..n-1
//   - colors are dense 1-based integers 1..k (every color must appear on
//     at least one edge)
//   - an edge coloring is defined on all C(n,2) unordered pairs and is
//     stored upper-triangular, so symmetry holds by construction

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polychrome {

struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;  // stored with first < second

inline Edge make_edge(int u, int v)
{
    if (u == v) throw precondition_error("edge endpoints must be distinct");
    return {std::min(u, v), std::max(u, v)};
}

// Complete-graph edge coloring K_n with colors 1..k.
class EdgeColoring {
public:
    EdgeColoring(int n, int k, std::vector<int> upper_tri);

    // Builds from explicit triples (u,v,c); every pair must appear exactly once.
    static EdgeColoring from_edges(int n, int k, const std::vector<std::array<int, 3>>& triples);

    int n() const { return n_; }
    int k() const { return k_; }

    int color(int u, int v) const
    {
        auto [a, b] = make_edge(u, v);
        check_vertex(b);
        return colors_[index(a, b)];
    }

    // Number of edges, C(n,2).
    int edge_count() const { return static_cast<int>(colors_.size()); }

    // Triples (u,v,c) with u < v in lexicographic order.
    std::vector<std::array<int, 3>> edge_triples() const;

    // New coloring with colors mapped through a bijection perm[1..k] -> 1..k.
    EdgeColoring permute_colors(const std::vector<int>& perm) const;
    // New coloring with vertices relabeled through perm[0..n-1].
    EdgeColoring permute_vertices(const std::vector<int>& perm) const;

    bool operator==(const EdgeColoring& other) const = default;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<int> colors_;  // upper-triangular, index(u,v) with u < v

    size_t index(int u, int v) const
    {
        // row-major over pairs u < v
        return static_cast<size_t>(u) * (2 * n_ - u - 1) / 2 + (v - u - 1);
    }
    void check_vertex(int v) const
    {
        if (v < 0 || v >= n_) throw precondition_error("vertex out of range");
    }
    void validate() const;
};

// A subgraph given by its edge set; the vertex support is implied.
struct Subgraph {
    std::vector<Edge> edges;  // normalized (u < v), sorted, no duplicates

    static Subgraph from_pairs(std::vector<Edge> pairs);

    std::vector<int> vertices() const;
    int max_vertex() const;
    bool contains_color(const EdgeColoring& coloring, int color) const;

    bool operator==(const Subgraph& other) const = default;
};

enum class FamilyKind {
    Matchings,          // perfect matchings on exactly n-q vertices
    Cycles,             // single cycles of length exactly n-q
    TwoRegular,         // disjoint unions of cycles spanning >= n-q vertices
    RRegular,           // r-regular subgraphs on exactly n-q vertices
    ConnectedRRegular,  // additionally connected
};

std::string family_kind_name(FamilyKind kind);

struct FamilySpec {
    FamilyKind kind = FamilyKind::Matchings;
    int q = 0;
    int r = 0;  // only meaningful for the r-regular kinds

    static FamilySpec matchings(int q) { return {FamilyKind::Matchings, q, 0}; }
    static FamilySpec cycles(int q) { return {FamilyKind::Cycles, q, 0}; }
    static FamilySpec two_regular(int q) { return {FamilyKind::TwoRegular, q, 0}; }
    static FamilySpec r_regular(int r, int q) { return {FamilyKind::RRegular, q, r}; }
    static FamilySpec connected_r_regular(int r, int q)
    {
        return {FamilyKind::ConnectedRRegular, q, r};
    }

    // Throws precondition_error when the family is empty/ill-defined on K_n.
    void validate_for(int n) const;
    bool valid_for(int n) const;
};

// Decides membership of H in the family over K_n.
bool family_member(const FamilySpec& spec, int n, const Subgraph& h);

// Exact set of colors appearing on the edges of H.
std::set<int> colors_on(const EdgeColoring& coloring, const Subgraph& h);

// Verification result: polychromatic, or one witness per missing color.
struct Verdict {
    struct Missing {
        int color;
        Subgraph witness;  // a family member with no edge of this color
    };
    bool polychromatic = false;
    std::vector<Missing> missing;
};

// An inherited vertex coloring as an ordered list of (color, length) blocks.
struct BlockSequence {
    struct Block {
        int color;
        int length;
        bool operator==(const Block&) const = default;
    };
    std::vector<Block> blocks;

    int total_length() const;
    std::vector<int> expand() const;  // per-vertex color sequence

    static BlockSequence from_sequence(const std::vector<int>& colors);

    // Checks the invariants of an inherited coloring of an ordered K_n:
    // adjacent blocks differ, lengths positive, last block length >= 2.
    void validate_inherited() const;

    bool operator==(const BlockSequence&) const = default;
};

// Edge coloring of a simply-ordered K_n: edge (u,v), u < v, gets the
// inherited color of u.
EdgeColoring coloring_from_blocks(const BlockSequence& blocks);

}  // namespace polychrome
