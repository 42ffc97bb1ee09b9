#include "polychrome/numbers.hpp"

#include "polychrome/graph.hpp"

namespace polychrome {

std::string provenance_name(Provenance p)
{
    switch (p) {
        case Provenance::MatchingInterval: return "matching-interval";
        case Provenance::CycleInterval: return "cycle-interval";
        case Provenance::CycleTwoColoringBand: return "cycle-two-coloring-band";
        case Provenance::CycleQ2N5: return "cycle-q2-n5";
        case Provenance::CycleQ0Formula: return "cycle-q0-formula";
        case Provenance::CycleQ0N3Search: return "cycle-q0-n3-search";
        case Provenance::CycleQ1Formula: return "cycle-q1-formula";
        case Provenance::CycleQ1N4Search: return "cycle-q1-n4-search";
        case Provenance::TwoRegularMatching: return "two-regular-matching-interval";
        case Provenance::TwoRegularQ0Formula: return "two-regular-q0-formula";
        case Provenance::TwoRegularQ1Formula: return "two-regular-q1-formula";
        case Provenance::ClassicalOdd: return "classical-odd";
        case Provenance::ClassicalEven: return "classical-even";
        case Provenance::ClassicalSmall: return "classical-small";
        case Provenance::RamseyDelegate: return "ramsey-classical-delegate";
        case Provenance::RamseyBandExact: return "ramsey-band-exact";
        case Provenance::RamseyBandPlusOne: return "ramsey-band-plus-one";
        case Provenance::RamseyBandPlusTwo: return "ramsey-band-plus-two";
        case Provenance::RamseyBandRound: return "ramsey-band-round";
        case Provenance::RamseySmallSearch: return "ramsey-small-search";
    }
    return "?";
}

namespace {

// Largest k >= 1 with pred(k) true, where pred is monotone decreasing in k.
template <typename Pred>
int64_t largest_k(Pred pred)
{
    int64_t k = 1;
    if (!pred(k)) throw precondition_error("no feasible color count");
    while (pred(k + 1)) ++k;
    return k;
}

int64_t pow2(int64_t e)
{
    return int64_t{1} << e;
}

}  // namespace

NumberResult p_f(int64_t n, int64_t q)
{
    if (q < 0) throw precondition_error("q must be nonnegative");
    if (n - q < 2 || (n - q) % 2 != 0)
        throw precondition_error("matchings need n-q positive and even");
    // unique k with (q+1)(2^k - 1) <= n < (q+1)(2^(k+1) - 1)
    int64_t k = largest_k([&](int64_t k) { return (q + 1) * (pow2(k) - 1) <= n; });
    return {k, Provenance::MatchingInterval};
}

NumberResult p_c(int64_t n, int64_t q)
{
    if (q < 0) throw precondition_error("q must be nonnegative");
    if (n - q < 3) throw precondition_error("cycles need n-q >= 3");
    if (q == 0) {
        if (n == 3) return {3, Provenance::CycleQ0N3Search};
        // k with 3*2^(k-3) < n <= 3*2^(k-2), i.e. 8(n-1)/3 interval
        int64_t k = largest_k([&](int64_t k) { return k <= 2 || 3 * pow2(k - 3) < n; });
        return {k, Provenance::CycleQ0Formula};
    }
    if (q == 1) {
        if (n == 4) return {3, Provenance::CycleQ1N4Search};
        // k with 5*2^(k-2) <= n < 5*2^(k-1); valid from n = 5
        int64_t k = largest_k([&](int64_t k) { return k == 1 || 5 * pow2(k - 2) <= n; });
        return {k, Provenance::CycleQ1Formula};
    }
    if (q == 2 && n == 5) return {2, Provenance::CycleQ2N5};
    if ((n - q) % 2 != 0 && n >= 2 * q + 2 && n <= 3 * q + 2)
        return {2, Provenance::CycleTwoColoringBand};
    // k with (2^k - 1)q + 2^(k-1) < n <= (2^(k+1) - 1)q + 2^k
    int64_t k = largest_k([&](int64_t k) { return (pow2(k) - 1) * q + pow2(k - 1) < n; });
    return {k, Provenance::CycleInterval};
}

NumberResult p_r(int64_t n, int64_t q)
{
    if (q < 0) throw precondition_error("q must be nonnegative");
    if (q == 0) {
        if (n < 3) throw precondition_error("two-regular q=0 needs n >= 3");
        // k = 1 + floor(log2(n+1)): largest k with 2^(k-1) <= n+1
        int64_t k = largest_k([&](int64_t k) { return pow2(k - 1) <= n + 1; });
        return {k, Provenance::TwoRegularQ0Formula};
    }
    if (q == 1) {
        if (n < 4) throw precondition_error("two-regular q=1 needs n >= 4");
        // k with 3*2^(k-1) - 2 <= n < 3*2^k - 2
        int64_t k = largest_k([&](int64_t k) { return 3 * pow2(k - 1) - 2 <= n; });
        return {k, Provenance::TwoRegularQ1Formula};
    }
    if (n < q + 3) throw precondition_error("two-regular needs n >= q+3");
    int64_t k = largest_k([&](int64_t k) { return (q + 1) * (pow2(k) - 1) <= n; });
    return {k, Provenance::TwoRegularMatching};
}

NumberResult classical_c(int64_t s)
{
    if (s < 3) throw precondition_error("cycle length must be at least 3");
    if (s <= 4) return {6, Provenance::ClassicalSmall};
    if (s % 2 != 0) return {2 * s - 1, Provenance::ClassicalOdd};
    return {3 * s / 2 - 1, Provenance::ClassicalEven};
}

NumberResult pr_t(int64_t s, int64_t t)
{
    if (t < 2 || s < 3 || s < t) throw precondition_error("need t >= 2, s >= 3, s >= t");
    if (t == 2) {
        auto c = classical_c(s);
        return {c.value, Provenance::RamseyDelegate};
    }
    if (s == 3) {
        // Below every band; only reachable for t = 3 (since s >= t). A
        // 3-coloring of K_4 can make every triangle rainbow, while every
        // 3-coloring of K_5 has a triangle on at most 2 colors.
        return {5, Provenance::RamseySmallSearch};
    }
    if (t >= 3 && 8 * s <= 3 * pow2(t))  // s <= 3*2^(t-3) without fractions
        return {s, Provenance::RamseyBandExact};
    if (4 * s <= 5 * pow2(t) - 8)  // s <= 5*2^(t-2) - 2
        return {s + 1, Provenance::RamseyBandPlusOne};
    if (2 * s <= 5 * pow2(t) - 8)  // s <= 5*2^(t-1) - 4
        return {s + 2, Provenance::RamseyBandPlusTwo};
    // s + round((s-2)/(2^t - 2)), rounding half up
    int64_t d = pow2(t) - 2;
    int64_t rounded = (2 * (s - 2) + d) / (2 * d);
    return {s + rounded, Provenance::RamseyBandRound};
}

bool pr_consistency(int64_t s, int64_t t)
{
    int64_t expected = pr_t(s, t).value;
    for (int64_t q = 0;; ++q) {
        int64_t n = s + q;
        if (p_c(n, q).value < t) return expected == n;
        if (q > expected - s + 8) return false;  // consistency clearly broken
    }
}

}  // namespace polychrome
