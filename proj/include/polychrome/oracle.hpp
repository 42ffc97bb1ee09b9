// Exact verification that a coloring is polychromatic for a family, with an
// explicit witness for every color some member avoids.  All deciders are
// exact; instances beyond the configured budget raise budget_error rather
// than guessing.

#pragma once

#include <optional>

#include "polychrome/graph.hpp"

namespace polychrome {

struct OracleBudget {
    int max_matching_n = 24;     // subset-mask matching oracle
    int max_cycle_n = 16;        // fixed-length cycle existence
    int max_two_regular_n = 14;  // excluded-set loop + 2-factor search
    int max_r_regular_n = 10;    // degree-constrained backtracking
    int max_r = 4;
    int max_enumeration_n = 12;  // full cycle enumeration (monotonicity checks)

    // Caps every limit at n (CLI --budget).
    static OracleBudget capped(int n);
};

struct AvoidanceQuery {
    EdgeColoring coloring;
    FamilySpec family;
    int banned = 0;  // in 1..k
};

// A family member containing no edge of the banned color, if one exists.
// Deterministic: the witness is the first member in the canonical search
// order (lowest vertices first, ascending neighbor choices).
std::optional<Subgraph> exists_avoiding(const AvoidanceQuery& query,
                                        const OracleBudget& budget = {});

// Polychromatic iff no color can be avoided; one witness per failing color.
// With jobs > 1 the per-color queries run concurrently; the result does not
// depend on the schedule.
Verdict verify(const EdgeColoring& coloring, const FamilySpec& family,
               const OracleBudget& budget = {}, int jobs = 1);

// True iff (every j-cycle gets all colors) implies (every cycle of length
// in [j, n] gets all colors).  Requires k >= 3 and 4 <= j <= n; with at
// least three colors the implication always holds, so this is a property
// check, not a search.
bool check_cycle_monotonicity(const EdgeColoring& coloring, int j,
                              const OracleBudget& budget = {});

// True iff every cycle of length len gets all k colors (direct enumeration).
bool all_cycles_polychromatic(const EdgeColoring& coloring, int len,
                              const OracleBudget& budget = {});

// True iff every 2-regular subgraph spanning exactly `span` vertices gets
// all k colors (direct enumeration; used by the conjecture probes).
bool all_two_regular_exact_polychromatic(const EdgeColoring& coloring, int span,
                                         const OracleBudget& budget = {});

}  // namespace polychrome
