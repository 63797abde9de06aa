#include "schur/partition.hpp"

#include "doctest.h"

#include <algorithm>

namespace schur {
namespace {

Partition P(std::vector<long long> parts) { return Partition(std::move(parts)); }

// Strip predicates stated independently of the enumeration code: a vertical
// strip removes at most one cell per row, a horizontal strip adds at most
// one cell per column (checked on conjugates).
bool is_vertical_strip_inside(const Partition& alpha, const Partition& lambda)
{
    if (!alpha.contains(lambda))
        return false;
    for (std::size_t i = 1; i <= alpha.length(); ++i)
        if (alpha.part(i) - lambda.part(i) > 1)
            return false;
    return true;
}

bool is_horizontal_strip_over(const Partition& lambda, const Partition& mu)
{
    if (!mu.contains(lambda))
        return false;
    Partition mc = mu.conjugate();
    Partition lc = lambda.conjugate();
    for (std::size_t j = 1; j <= mc.length(); ++j)
        if (mc.part(j) - lc.part(j) > 1)
            return false;
    return true;
}

TEST_CASE("partition construction canonicalizes and validates")
{
    CHECK(P({3, 1, 0, 0}) == P({3, 1}));
    CHECK(P({}).empty());
    CHECK(P({0, 0}).empty());
    CHECK(P({5, 4, 3, 3}).weight() == 15);
    CHECK(P({5, 4, 3, 3}).part(1) == 5);
    CHECK(P({5, 4, 3, 3}).part(9) == 0);
    CHECK_THROWS_AS(P({3, -1}), std::invalid_argument);
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0, 1}), std::invalid_argument);
}

TEST_CASE("conjugate and containment")
{
    CHECK(P({5, 4, 3, 3}).conjugate() == P({4, 4, 4, 2, 1}));
    CHECK(P({1, 1, 1}).conjugate() == P({3}));
    CHECK(P({}).conjugate() == P({}));
    for (const Partition& lam : partitions_up_to_weight(8))
        CHECK(lam.conjugate().conjugate() == lam);
    CHECK(P({3, 2}).contains(P({2, 2})));
    CHECK_FALSE(P({3, 2}).contains(P({1, 1, 1})));
}

TEST_CASE("partition enumeration is complete and ordered")
{
    auto fives = partitions_of_weight(5);
    CHECK(fives.size() == 7);
    CHECK(fives.front() == P({5}));
    CHECK(fives.back() == P({1, 1, 1, 1, 1}));
    CHECK(std::is_sorted(fives.begin(), fives.end(), LexGreater{}));

    CHECK(partitions_of_weight(0).size() == 1);
    CHECK(partitions_up_to_weight(0).size() == 1);
    // 1 + 1 + 2 + 3 + 5 + 7 + 11
    CHECK(partitions_up_to_weight(6).size() == 30);
}

TEST_CASE("vertical strip removals match the brute-force filter")
{
    for (const Partition& alpha : partitions_up_to_weight(8))
        for (long long k = 0; k <= alpha.weight() + 1; ++k) {
            std::vector<Partition> expected;
            for (const Partition& lam : partitions_of_weight(alpha.weight() - k))
                if (is_vertical_strip_inside(alpha, lam))
                    expected.push_back(lam);
            std::sort(expected.begin(), expected.end(), LexGreater{});
            CHECK(vertical_strip_removals(alpha, k) == expected);
        }
}

TEST_CASE("vertical strip removal examples")
{
    CHECK(vertical_strip_removals(P({5, 4, 3, 3}), 0) ==
          std::vector<Partition>{P({5, 4, 3, 3})});
    CHECK(vertical_strip_removals(P({5, 4, 3, 3}), 1) ==
          std::vector<Partition>{P({5, 4, 3, 2}), P({5, 3, 3, 3}), P({4, 4, 3, 3})});
    CHECK(vertical_strip_removals(P({5, 4, 3, 3}), 3).size() == 3);
    CHECK(vertical_strip_removals(P({5, 4, 3, 3}), 4) ==
          std::vector<Partition>{P({4, 3, 2, 2})});
    CHECK(vertical_strip_removals(P({5, 4, 3, 3}), 5).empty());
    CHECK(vertical_strip_removals(P({1}), 1) == std::vector<Partition>{P({})});
}

TEST_CASE("horizontal strip additions match the brute-force filter")
{
    for (const Partition& lam : partitions_up_to_weight(7))
        for (long long k = 0; k <= 4; ++k) {
            std::vector<Partition> expected;
            for (const Partition& mu : partitions_of_weight(lam.weight() + k))
                if (is_horizontal_strip_over(lam, mu))
                    expected.push_back(mu);
            std::sort(expected.begin(), expected.end(), LexGreater{});
            CHECK(horizontal_strip_additions(lam, k) == expected);
        }
}

TEST_CASE("horizontal strip addition examples")
{
    CHECK(horizontal_strip_additions(P({}), 3) == std::vector<Partition>{P({3})});
    CHECK(horizontal_strip_additions(P({2}), 2) ==
          std::vector<Partition>{P({4}), P({3, 1}), P({2, 2})});
    CHECK(horizontal_strip_additions(P({1, 1}), 1) ==
          std::vector<Partition>{P({2, 1}), P({1, 1, 1})});
}

TEST_CASE("removable corners sit in distinct columns, leftmost first")
{
    // mu fixes which rows still carry their full alpha-row; a corner of
    // alpha survives in row i when mu keeps row i long and row i+1 short.
    CHECK(alpha_removable_corners(P({5, 4, 3, 3}), P({5, 4, 3, 3})) ==
          std::vector<Cell>{Cell{4, 3}, Cell{2, 4}, Cell{1, 5}});
    CHECK(alpha_removable_corners(P({5, 4, 3, 3}), P({8, 4, 3, 3})) ==
          std::vector<Cell>{Cell{4, 3}, Cell{2, 4}, Cell{1, 5}});
    CHECK(alpha_removable_corners(P({5, 4, 3, 3}), P({4, 4, 4, 3, 3})).empty());
    CHECK(alpha_removable_corners(P({2, 2}), P({2, 2, 2})).empty());
    CHECK(alpha_removable_corners(P({}), P({3})).empty());

    for (const Partition& alpha : partitions_up_to_weight(6))
        for (const Partition& mu : partitions_up_to_weight(6)) {
            auto corners = alpha_removable_corners(alpha, mu);
            for (std::size_t i = 1; i < corners.size(); ++i)
                CHECK(corners[i - 1].column < corners[i].column);
        }
}

TEST_CASE("checked arithmetic overflows loudly")
{
    CHECK(checked_add(1, 2) == 3);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK_THROWS_AS(checked_add(0x7fffffffffffffffLL, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(0x4000000000000000LL, 2), std::overflow_error);
}

TEST_CASE("prepended sequence")
{
    CHECK(prepended(-2, P({5, 4, 3, 3})) == IntegerSequence({-2, 5, 4, 3, 3}));
    CHECK(prepended(0, P({})) == IntegerSequence({0}));
}

} // namespace
} // namespace schur
