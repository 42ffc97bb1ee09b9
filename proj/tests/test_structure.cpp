#include "doctest.h"

#include "helpers.hpp"
#include "polychrome/constructions.hpp"
#include "polychrome/oracle.hpp"
#include "polychrome/structure.hpp"

using namespace polychrome;

namespace {

EdgeColoring ordered_coloring(const std::vector<int>& inherited)
{
    int n = static_cast<int>(inherited.size());
    int k = *std::max_element(inherited.begin(), inherited.end());
    std::vector<std::array<int, 3>> triples;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) triples.push_back({u, v, inherited[u]});
    return EdgeColoring::from_edges(n, k, triples);
}

bool predicate(const std::vector<int>& seq, int z, const std::vector<int>& z_colors,
               FamilyKind kind, int q)
{
    std::vector<int> colors = seq;
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    for (int t : colors)
        if (!characterization_color_ok(seq, z, z_colors, kind, q, t)) return false;
    return true;
}

}  // namespace

TEST_CASE("order detection")
{
    auto simply = ordered_coloring({1, 2, 2, 3, 3, 3, 3});
    auto a = detect_order(simply);
    CHECK(a.kind == OrderAnalysis::Kind::SimplyOrdered);
    CHECK(a.inherited == std::vector<int>{1, 2, 2, 3, 3, 3, 3});

    auto ordered = ordered_coloring({1, 2, 1, 1, 3, 3, 3});
    CHECK(detect_order(ordered).kind == OrderAnalysis::Kind::Ordered);

    // proper 3-edge-coloring of K_4: every vertex sees all colors once
    auto proper = EdgeColoring::from_edges(
        4, 3, {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}});
    CHECK(detect_order(proper).kind == OrderAnalysis::Kind::Unordered);

    // the rainbow triangle is a 3-seed with an empty tail
    auto rainbow = EdgeColoring::from_edges(3, 3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    auto ra = detect_order(rainbow);
    CHECK(ra.kind == OrderAnalysis::Kind::QuasiSimplyOrdered);
    CHECK(ra.z_size == 3);

    auto quasi = construct_quasi(FamilyKind::TwoRegular, 0, 7);
    auto qa = detect_order(quasi.coloring);
    CHECK(qa.kind == OrderAnalysis::Kind::QuasiSimplyOrdered);
    CHECK(qa.z_size == 3);
    CHECK(qa.inherited == std::vector<int>{1, 2, 3, 4, 4, 4, 4});

    auto q4 = detect_order(construct_quasi(FamilyKind::TwoRegular, 1, 10).coloring);
    CHECK(q4.kind == OrderAnalysis::Kind::QuasiSimplyOrdered);
    CHECK(q4.z_size == 4);
    CHECK(q4.inherited == std::vector<int>{1, 1, 2, 2, 3, 3, 3, 3, 3, 3});

    // seed with a scrambled tail stays quasi-ordered, not quasi-simply
    auto seed = build_seed(2, 0);
    auto scrambled = assemble_quasi(seed, {4, 5, 4, 4, 4});
    CHECK(detect_order(scrambled).kind == OrderAnalysis::Kind::QuasiOrdered);
}

TEST_CASE("characterization clauses on known sequences")
{
    const std::vector<int> no_seed;
    // matchings, classes 1,2,4 on 7 vertices
    CHECK(predicate({1, 2, 2, 3, 3, 3, 3}, 0, no_seed, FamilyKind::Matchings, 0));
    // two classes of two on K_4 fail: the second color never exceeds half
    CHECK_FALSE(predicate({1, 1, 2, 2}, 0, no_seed, FamilyKind::Matchings, 0));
    // cycle classes 3,5,11 pass at q=2 via the non-strict clause
    {
        std::vector<int> seq;
        seq.insert(seq.end(), 3, 1);
        seq.insert(seq.end(), 5, 2);
        seq.insert(seq.end(), 11, 3);
        CHECK(predicate(seq, 0, no_seed, FamilyKind::Cycles, 2));
    }
    // the smaller analog 2,3,6 fails: color 1 never reaches (j+2)/2
    {
        std::vector<int> seq;
        seq.insert(seq.end(), 2, 1);
        seq.insert(seq.end(), 3, 2);
        seq.insert(seq.end(), 6, 3);
        CHECK_FALSE(predicate(seq, 0, no_seed, FamilyKind::Cycles, 2));
    }
    // 3-seed with one tail class: seed colors ride the seed clause, the tail
    // class needs the strict prefix clause
    CHECK(predicate({1, 2, 3, 4, 4, 4, 4}, 3, {1, 2, 3}, FamilyKind::TwoRegular, 0));
    // without the seed the same sequence fails for color 3
    CHECK_FALSE(predicate({1, 2, 3, 4, 4, 4, 4}, 0, no_seed, FamilyKind::TwoRegular, 0));
    // equality-at-2 clause: singleton second block works for two-regular...
    CHECK(predicate({1, 2, 3, 3, 3}, 0, no_seed, FamilyKind::TwoRegular, 0));
    // ...but not for matchings
    CHECK_FALSE(predicate({1, 2, 3, 3, 3}, 0, no_seed, FamilyKind::Matchings, 0));

    // matchings over seeds are out of scope
    auto quasi = detect_order(construct_quasi(FamilyKind::TwoRegular, 0, 7).coloring);
    CHECK_THROWS_AS(satisfies_characterization(quasi, FamilySpec::matchings(1)),
                    precondition_error);
}

TEST_CASE("characterization equals the oracle over ordered sequences")
{
    // scaled-down sweep; the acceptance suite runs the full n <= 10 version
    for (int n = 4; n <= 7; ++n) {
        testing::ordered_sequences(n, 4, [&](const std::vector<int>& seq) {
            auto coloring = ordered_coloring(seq);
            for (int q = 0; q <= 3; ++q) {
                for (FamilyKind kind :
                     {FamilyKind::Matchings, FamilyKind::Cycles, FamilyKind::TwoRegular}) {
                    FamilySpec spec{kind, q, 0};
                    if (!spec.valid_for(n)) continue;
                    bool lemma = predicate(seq, 0, {}, kind, q);
                    bool truth = verify(coloring, spec).polychromatic;
                    CAPTURE(n);
                    CAPTURE(q);
                    CAPTURE((int)kind);
                    REQUIRE(lemma == truth);
                }
            }
        });
    }
}

TEST_CASE("characterization equals the oracle over seeded sequences")
{
    for (int z : {3, 4}) {
        auto seed = build_seed(2, z == 3 ? 0 : 1);
        std::vector<int> z_colors;
        for (int c = 1; c <= seed.k; ++c) z_colors.push_back(c);
        for (int n = z; n <= z + 4; ++n) {
            testing::quasi_tails(n - z, seed.k, 2, [&](const std::vector<int>& tail) {
                auto coloring = assemble_quasi(seed, tail);
                std::vector<int> seq;
                for (int v = 0; v < z; ++v) seq.push_back(seed.main_color(v));
                seq.insert(seq.end(), tail.begin(), tail.end());
                for (int q = 0; q <= 2; ++q) {
                    for (FamilyKind kind : {FamilyKind::Cycles, FamilyKind::TwoRegular}) {
                        FamilySpec spec{kind, q, 0};
                        if (!spec.valid_for(n)) continue;
                        bool lemma = predicate(seq, z, z_colors, kind, q);
                        bool truth = verify(coloring, spec).polychromatic;
                        CAPTURE(n);
                        CAPTURE(z);
                        CAPTURE(q);
                        CAPTURE((int)kind);
                        REQUIRE(lemma == truth);
                    }
                }
            });
        }
    }
}

TEST_CASE("block shift normalization")
{
    // already simply-ordered input comes back unchanged
    auto f8 = construct_simply_ordered(FamilyKind::Matchings, 0, 8);
    CHECK(block_shift_normalize(f8.coloring, FamilySpec::matchings(0)) == f8.coloring);

    // split first class: blocks 1, 2, 2, 1, 6 of colors 1,2,2,1,3
    auto split = ordered_coloring({1, 2, 2, 1, 3, 3, 3, 3, 3, 3});
    CHECK(verify(split, FamilySpec::matchings(0)).polychromatic);
    auto merged = block_shift_normalize(split, FamilySpec::matchings(0));
    auto ma = detect_order(merged);
    CHECK(ma.kind == OrderAnalysis::Kind::SimplyOrdered);
    CHECK(merged.k() == 3);
    CHECK(verify(merged, FamilySpec::matchings(0)).polychromatic);

    // unordered input is out of scope
    auto proper = EdgeColoring::from_edges(
        4, 3, {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}});
    CHECK_THROWS_AS(block_shift_normalize(proper, FamilySpec::matchings(0)),
                    precondition_error);

    // non-polychromatic input is rejected
    auto bad = ordered_coloring({1, 1, 2, 2});
    CHECK_THROWS_AS(block_shift_normalize(bad, FamilySpec::matchings(0)),
                    precondition_error);
}

TEST_CASE("normalization preserves the verdict across the enumeration suite")
{
    // every ordered polychromatic coloring with n <= 7 normalizes to a
    // simply-ordered coloring with the same color count, still polychromatic
    for (int n = 4; n <= 7; ++n) {
        testing::ordered_sequences(n, 4, [&](const std::vector<int>& seq) {
            auto coloring = ordered_coloring(seq);
            for (int q = 0; q <= 2; ++q) {
                for (FamilyKind kind :
                     {FamilyKind::Matchings, FamilyKind::Cycles, FamilyKind::TwoRegular}) {
                    FamilySpec spec{kind, q, 0};
                    if (!spec.valid_for(n)) continue;
                    if (!predicate(seq, 0, {}, kind, q)) continue;
                    auto normalized = block_shift_normalize(coloring, spec);
                    auto na = detect_order(normalized);
                    CAPTURE(n);
                    CAPTURE(q);
                    CAPTURE((int)kind);
                    REQUIRE(na.kind == OrderAnalysis::Kind::SimplyOrdered);
                    REQUIRE(normalized.k() == coloring.k());
                    REQUIRE(verify(normalized, spec).polychromatic);
                }
            }
        });
    }

    // seeded inputs: scrambled tails merge back while the seed stays put
    for (int z : {3, 4}) {
        auto seed = build_seed(2, z == 3 ? 0 : 1);
        std::vector<int> z_colors;
        for (int c = 1; c <= seed.k; ++c) z_colors.push_back(c);
        for (int n = z + 2; n <= z + 5; ++n) {
            testing::quasi_tails(n - z, seed.k, 2, [&](const std::vector<int>& tail) {
                std::vector<int> seq;
                for (int v = 0; v < z; ++v) seq.push_back(seed.main_color(v));
                seq.insert(seq.end(), tail.begin(), tail.end());
                auto coloring = assemble_quasi(seed, tail);
                for (FamilyKind kind : {FamilyKind::Cycles, FamilyKind::TwoRegular}) {
                    int q = z == 3 ? 0 : 1;
                    FamilySpec spec{kind, q, 0};
                    if (!spec.valid_for(n)) continue;
                    if (!predicate(seq, z, z_colors, kind, q)) continue;
                    auto normalized = block_shift_normalize(coloring, spec);
                    auto na = detect_order(normalized);
                    REQUIRE(na.kind == OrderAnalysis::Kind::QuasiSimplyOrdered);
                    REQUIRE(normalized.k() == coloring.k());
                    REQUIRE(verify(normalized, spec).polychromatic);
                }
            });
        }
    }
}
