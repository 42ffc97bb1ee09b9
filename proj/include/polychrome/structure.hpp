// Structural analysis of colorings: ordered / simply-ordered / quasi-ordered
// detection, the prefix-count characterization of polychromatic ordered
// colorings, and block-shift normalization to simply-ordered form.
//
// An edge coloring is *ordered* if some vertex order v_1..v_n makes every
// vertex's edges to all later vertices monochromatic; the color of those
// rightward edges is the vertex's *inherited* color (the last vertex copies
// the one before it).  It is *simply-ordered* when every color forms one
// contiguous block of the inherited sequence.  A *quasi-ordered* coloring
// instead has a seed Z of 3 or 4 vertices, each incident to exactly n-2
// edges of its main color with its single off-color edge inside Z, and is
// ordered outside Z; seed vertices precede the rest, listed with equal main
// colors adjacent.

#pragma once

#include <optional>
#include <vector>

#include "polychrome/graph.hpp"

namespace polychrome {

struct OrderAnalysis {
    enum class Kind {
        Unordered,
        Ordered,
        SimplyOrdered,
        QuasiOrdered,        // seed present, rest ordered but not simply
        QuasiSimplyOrdered,  // seed present, rest simply-ordered
    };
    Kind kind = Kind::Unordered;
    std::vector<int> order;      // all n vertices; seed first for quasi kinds
    std::vector<int> inherited;  // color per position of `order`
    int z_size = 0;              // 0, 3 or 4
    std::vector<int> z_main;     // main colors aligned with order[0..z)
    std::vector<int> z_colors;   // sorted distinct colors on intra-seed edges

    bool ordered_like() const
    {
        return kind == Kind::Ordered || kind == Kind::SimplyOrdered;
    }
    bool quasi_like() const
    {
        return kind == Kind::QuasiOrdered || kind == Kind::QuasiSimplyOrdered;
    }
    BlockSequence blocks() const { return BlockSequence::from_sequence(inherited); }
};

std::string order_kind_name(OrderAnalysis::Kind kind);

// Strongest applicable classification with a certifying order / seed.
// Greedy and deterministic: the extracted vertex is always the lowest-index
// one whose remaining edges are monochromatic (simultaneous candidates
// always share one color, so ties never change the block structure).
OrderAnalysis detect_order(const EdgeColoring& coloring);

// Single-color clause of the characterization, evaluated on an inherited
// sequence (seed positions first).  With M_t(j) = #positions p <= j colored
// t, color t is guaranteed on every family member iff:
//   matchings:    some j has        2|M_t(j)| >  j + q
//   cycles:       some j in [q+1, n-1] has 2|M_t(j)| >= j + q, or q = 0 with
//                 a 3-seed / q = 1 with a 4-seed and t on a seed edge
//   two-regular:  some j has 2|M_t(j)| > j + q, or equality at j in
//                 {2+q, n-2}, or equality at j and j+2 for j in [4+q, n-3],
//                 or q = 0 with any seed / q = 1 with a 4-seed and t on a
//                 seed edge
bool characterization_color_ok(const std::vector<int>& inherited, int z_size,
                               const std::vector<int>& z_colors, FamilyKind kind, int q,
                               int color);

// All-colors characterization.  Scope: analysis must be ordered or
// quasi-ordered; matchings additionally require a purely ordered analysis
// (the prefix test is not sound over seeds for that family).
bool satisfies_characterization(const OrderAnalysis& analysis, const FamilySpec& family);

// Repeated block shifts (delete-and-append, or move a block next to the one
// holding the witness index, plus a two-vertex swap for the two-regular
// equality case) until every color forms a single block outside the seed.
// Preserves the color count and the polychromatic property; the input must
// be ordered (quasi-ordered) and polychromatic for the family.
EdgeColoring block_shift_normalize(const EdgeColoring& coloring, const FamilySpec& family);

}  // namespace polychrome
