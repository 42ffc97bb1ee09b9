// Optimality searches: maximum color count over simply-ordered block
// structures (greedy and exhaustive over compositions), over seed-based
// quasi-simply-ordered structures, and over all colorings of tiny K_n via
// orderly generation with canonical-form pruning.

#pragma once

#include <optional>
#include <string>

#include "polychrome/constructions.hpp"
#include "polychrome/graph.hpp"

namespace polychrome {

enum class SearchMode { Greedy, ExhaustiveBlocks, Quasi, Full };

std::string search_mode_name(SearchMode mode);

struct SearchReport {
    int best_k = 0;
    SearchMode mode = SearchMode::Greedy;
    long long explored = 0;                 // candidates examined
    std::optional<BlockSequence> blocks;    // best structure, seed mains included
    int seed_size = 0;                      // 0 unless a seed was used
    std::optional<EdgeColoring> coloring;   // realization of the best structure
};

// Maximum colors over simply-ordered colorings of K_n.  Greedy builds
// blocks left to right at the smallest sizes admitted by the per-color
// characterization clause (preferring the smaller option when an equality
// clause allows one); exhaustive enumerates every composition of n
// (budget n <= 20).  Both modes agree.
SearchReport best_simply_ordered(int n, const FamilySpec& family,
                                 SearchMode mode = SearchMode::Greedy);

// Maximum colors over quasi-simply-ordered colorings with the canonical
// 3-seed (q=0) or 4-seed (q=1), searching all tail layouts: an optional run
// glued to the last seed color followed by fresh single-block classes.
// kind must be Cycles or TwoRegular, q in {0,1}.  The one case with no
// seed-shaped optimum (cycles, q=1, n=4) falls back to the full search.
SearchReport best_quasi(int n, FamilyKind kind, int q);

// A polychromatic k-coloring of K_n among ALL colorings, if one exists.
// Orderly generation: edge colors are assigned in (max,min) edge order,
// new colors introduced in increasing order, and every completed K_j
// prefix must be lexicographically minimal under vertex relabeling.
// Budget n <= 6.
std::optional<EdgeColoring> full_search(int n, const FamilySpec& family, int k,
                                        long long* explored = nullptr);

}  // namespace polychrome
