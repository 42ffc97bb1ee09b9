// Builders for the optimal colorings: simply-ordered block colorings for
// matchings / cycles / two-regular families, quasi-simply-ordered colorings
// grown from small seeds, general seed colorings for r-regular families,
// and the bipartite 2-colorings used as existence witnesses for cycles.

#pragma once

#include <optional>
#include <vector>

#include "polychrome/graph.hpp"

namespace polychrome {

// A seed: a small complete graph Z on z = k(q+1) vertices partitioned into
// k parts of size q+1.  Edges inside part j have color j; edges between
// parts i and j have color i or j, balanced so every vertex of part j is
// incident inside Z to floor or ceil of (q+1)(k-1)/2 edges of colors
// other than j.
struct SeedColoring {
    int r = 0;  // degree of the target family
    int q = 0;
    int k = 0;  // number of parts / colors
    int z = 0;  // k * (q + 1)
    std::vector<std::vector<int>> parts;        // parts[j-1] = vertices of color j
    std::vector<std::array<int, 3>> internal_;  // colored edges inside Z

    int main_color(int v) const { return v / (q + 1) + 1; }
    int internal_color(int u, int v) const;
};

struct ConstructedColoring {
    EdgeColoring coloring;
    BlockSequence blocks;  // inherited color classes, seed mains first
    int z = 0;             // seed size (0 for simply-ordered)
};

// Simply-ordered optimal colorings.
//   Matchings:  q >= 0, n-q positive and even.
//   TwoRegular: q >= 2, n >= q+3.
//   Cycles:     q >= 2, n >= q+3, except n-q odd with n in [2q+2, 3q+2]
//               (a 2-coloring exists there but no simply-ordered one) and
//               (q=2, n=5) (two monochromatic 5-cycles beat every
//               simply-ordered coloring); both raise precondition_error.
ConstructedColoring construct_simply_ordered(FamilyKind kind, int q, int n);

// Quasi-simply-ordered optimal colorings for the q = 0, 1 cycle and
// two-regular families: a 3-vertex seed for q = 0, a 4-vertex seed for
// q = 1, extended with minimal tail classes.
//   TwoRegular: q in {0,1}, n >= 3 (q=0) / n >= 4 (q=1).
//   Cycles:     q = 0 needs n >= 3; q = 1 needs n >= 5 (at n = 4 the
//               optimum is a proper 3-edge-coloring, not seed-shaped).
ConstructedColoring construct_quasi(FamilyKind kind, int q, int n);

// Canonical seed for r-regular families; requires q <= 2r-3 so that at
// least two colors fit.
SeedColoring build_seed(int r, int q);

// Quasi-simply-ordered coloring of K_n grown from a seed.  Tail classes are
// added greedily at minimal sizes: for the r-regular family each new class
// must exceed the sum of all previous classes by q+1; for the connected
// family by q, with one extra vertex in the final class.  Leftover vertices
// that cannot form a new class join the last class.
enum class ExtensionKind { Regular, Connected };
ConstructedColoring extend_seed(const SeedColoring& seed, int n, ExtensionKind kind);

// Assembles the edge coloring of a seed plus an arbitrary tail: seed edges
// inside Z, main colors from Z outward, and the ordered rule (edge gets the
// earlier endpoint's color) on the tail.  tail_inherited holds the colors
// of positions z, z+1, ..., n-1.
EdgeColoring assemble_quasi(const SeedColoring& seed, const std::vector<int>& tail_inherited);

// Restriction of the extremal 2-coloring with no monochromatic s-cycle:
// a red complete bipartite block (sizes n-(s-1) and s-1), all other edges
// blue.  Red is color 1, blue color 2.
//   s odd:  s <= n <= 2s-2;  s even:  s <= n <= 3s/2 - 2;  s >= 5.
EdgeColoring construct_bipartite_witness(int s, int n);

}  // namespace polychrome
