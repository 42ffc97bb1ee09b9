// Closed-form polychromatic numbers for the matching / cycle / two-regular
// families, classical 2-color cycle Ramsey numbers c(s), and the
// t-polychromatic cyclic Ramsey numbers pr_t(s).
//
// All piecewise boundaries are evaluated with exact integer interval tests;
// no floating-point logarithms anywhere.

#pragma once

#include <cstdint>
#include <string>

namespace polychrome {

enum class Provenance {
    MatchingInterval,       // k from (q+1)(2^k - 1) <= n < (q+1)(2^(k+1) - 1)
    CycleInterval,          // k from (2^k - 1)q + 2^(k-1) < n <= (2^(k+1) - 1)q + 2^k
    CycleTwoColoringBand,   // n-q odd, n in [2q+2, 3q+2]: value 2 via bipartite witness
    CycleQ2N5,              // two monochromatic 5-cycles on K_5: value 2
    CycleQ0Formula,         // quasi coloring with a 3-vertex seed
    CycleQ0N3Search,        // rainbow triangle, resolved by exhaustive search
    CycleQ1Formula,         // quasi coloring with a 4-vertex seed
    CycleQ1N4Search,        // proper 3-edge-coloring of K_4, resolved by search
    TwoRegularMatching,     // q >= 2: same color classes as the matching coloring
    TwoRegularQ0Formula,    // quasi coloring with a 3-vertex seed
    TwoRegularQ1Formula,    // quasi coloring with a 4-vertex seed
    ClassicalOdd,           // c(s) = 2s - 1
    ClassicalEven,          // c(s) = 3s/2 - 1
    ClassicalSmall,         // c(3) = c(4) = 6
    RamseyDelegate,         // pr_2(s) = c(s)
    RamseyBandExact,        // pr_t(s) = s
    RamseyBandPlusOne,      // pr_t(s) = s + 1
    RamseyBandPlusTwo,      // pr_t(s) = s + 2
    RamseyBandRound,        // pr_t(s) = s + round((s-2)/(2^t - 2))
    RamseySmallSearch,      // pr_3(3) = 5, resolved by exhaustive search
};

std::string provenance_name(Provenance p);

struct NumberResult {
    int64_t value = 0;
    Provenance provenance;
};

// Maximum colors so every matching spanning exactly n-q vertices gets all
// colors. Requires q >= 0 and n-q positive and even.
NumberResult p_f(int64_t n, int64_t q);

// Same for cycles of length exactly n-q. Requires n-q >= 3 and
// (q = 0 and n >= 3) or (q = 1 and n >= 4) or (q >= 2 and n >= q+3).
NumberResult p_c(int64_t n, int64_t q);

// Same for 2-regular subgraphs spanning at least n-q vertices.
NumberResult p_r(int64_t n, int64_t q);

// Smallest n such that every red/blue coloring of K_n has a monochromatic
// s-cycle. Requires s >= 3.
NumberResult classical_c(int64_t s);

// Smallest n >= s such that every t-coloring of K_n has an s-cycle missing
// some color. Requires t >= 2, s >= 3, s >= t.
NumberResult pr_t(int64_t s, int64_t t);

// Cross-validation: pr_t(s) == s + min{ q >= 0 : p_c(s+q, q) < t }.
bool pr_consistency(int64_t s, int64_t t);

}  // namespace polychrome
