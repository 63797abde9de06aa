#include "schur/vertex.hpp"

#include "schur/straighten.hpp"
#include "schur/verify.hpp"

#include "doctest.h"

#include <set>

namespace schur {
namespace {

Partition P(std::vector<long long> parts) { return Partition(std::move(parts)); }

SchurExpansion E(std::vector<std::pair<std::vector<long long>, long long>> terms)
{
    SchurExpansion out;
    for (auto& [parts, coeff] : terms)
        out.add(Partition(std::move(parts)), coeff);
    return out;
}

const Partition kAlpha = P({5, 4, 3, 3});

TEST_CASE("series window for (5,4,3,3) on [-6,8]")
{
    const std::map<long long, SchurExpansion> expected = {
        {-6, {}},
        {-5, {}},
        {-4, E({{{4, 3, 2, 2}, 1}})},
        {-3, E({{{4, 3, 2, 2, 1}, 1}})},
        {-2, E({{{4, 3, 2, 2, 2}, 1}})},
        {-1, {}},
        {0, {}},
        {1, E({{{4, 3, 3, 3, 3}, 1}})},
        {2, {}},
        {3, E({{{4, 4, 4, 3, 3}, -1}})},
        {4, {}},
        {5, E({{{5, 5, 4, 3, 3}, 1}})},
        {6, E({{{6, 5, 4, 3, 3}, 1}})},
        {7, E({{{7, 5, 4, 3, 3}, 1}})},
        {8, E({{{8, 5, 4, 3, 3}, 1}})},
    };
    for (const VertexSeries& series :
         {vertex_lhs(kAlpha, -6, 8), vertex_lemma(kAlpha, -6, 8), vertex_rhs(kAlpha, -6, 8)}) {
        CHECK(series.alpha == kAlpha);
        CHECK(series.coefficients == expected);
    }
}

TEST_CASE("series coefficients vanish below minus the length")
{
    VertexSeries series = vertex_lhs(kAlpha, -12, -5);
    for (long long n = -12; n <= -5; ++n)
        CHECK(series.at(n).is_zero());
    CHECK(vertex_rhs(kAlpha, -12, -5) == series);
}

TEST_CASE("window access and bounds")
{
    VertexSeries series = vertex_lhs(P({1}), 0, 2);
    CHECK(series.at(0).is_zero());
    CHECK(series.at(1) == E({{{1, 1}, 1}}));
    CHECK_THROWS_AS(series.at(3), std::invalid_argument);
    CHECK_THROWS_AS(series.at(-1), std::invalid_argument);
    CHECK_THROWS_AS(vertex_lhs(P({1}), 2, 1), std::invalid_argument);
}

TEST_CASE("lemma terms walk one cell-count at a time")
{
    auto terms = vertex_lemma_terms(kAlpha, 8);
    REQUIRE(terms.size() == 9);

    std::set<long long> seen;
    for (const LemmaTerm& t : terms) {
        CHECK(t.n == t.k - t.ht);
        CHECK(t.sign == (t.ht % 2 == 0 ? 1 : -1));
        CHECK(t.mu.weight() == kAlpha.weight() + t.n);
        seen.insert(t.n);
    }
    CHECK(seen == std::set<long long>{-4, -3, -2, 1, 3, 5, 6, 7, 8});

    CHECK(terms[0] == LemmaTerm{0, -4, 1, P({4, 3, 2, 2}), 4});
    CHECK(terms[1] == LemmaTerm{1, -3, 1, P({4, 3, 2, 2, 1}), 4});
    CHECK(terms[4] == LemmaTerm{4, 3, -1, P({4, 4, 4, 3, 3}), 1});
    CHECK(terms[5] == LemmaTerm{5, 5, 1, P({5, 5, 4, 3, 3}), 0});
}

TEST_CASE("every small alpha agrees three ways")
{
    SweepResult r = sweep_vertex_three_way(partitions_up_to_weight(5), -8, 5);
    CHECK(r.cases > 0);
    CHECK(r.failed == 0);
}

TEST_CASE("raw terms carry their defining invariants")
{
    auto raw = vertex_rhs_raw(kAlpha, -2, 3);
    CHECK(!raw.empty());
    for (const RawTerm& t : raw) {
        CHECK(t.sign == (t.j % 2 == 0 ? 1 : -1));
        CHECK(t.n == t.mu.weight() - kAlpha.weight());
        CHECK(kAlpha.contains(t.lambda));
        CHECK(t.mu.contains(t.lambda));
        CHECK(kAlpha.weight() - t.lambda.weight() == t.j);
    }
}

TEST_CASE("pairing is a sign-reversing involution on non-survivors")
{
    for (const Partition& alpha : {P({}), P({1}), P({2, 1}), P({3, 3, 1}), kAlpha})
        for (long long n = -static_cast<long long>(alpha.length()) - 1; n <= 4; ++n)
            for (const RawTerm& t : vertex_rhs_raw(alpha, n, n)) {
                auto partner = pair_term(alpha, t);
                if (!partner)
                    continue;
                CHECK(partner->mu == t.mu);
                CHECK(partner->n == t.n);
                CHECK(partner->sign == -t.sign);
                CHECK(partner->j != t.j);
                auto back = pair_term(alpha, *partner);
                REQUIRE(back.has_value());
                CHECK(*back == t);
            }
}

TEST_CASE("pair_term rejects malformed terms")
{
    RawTerm t;
    t.j = 1;
    t.lambda = P({5, 4, 3, 2});
    t.mu = P({6, 5, 3, 2});
    t.n = t.mu.weight() - kAlpha.weight();
    t.sign = -1;

    RawTerm bad = t;
    bad.sign = 1;
    CHECK_THROWS_AS(pair_term(kAlpha, bad), std::invalid_argument);

    bad = t;
    bad.n += 1;
    CHECK_THROWS_AS(pair_term(kAlpha, bad), std::invalid_argument);

    bad = t;
    bad.j = 7; // more cells than alpha has rows
    CHECK_THROWS_AS(pair_term(kAlpha, bad), std::invalid_argument);

    bad = t;
    bad.lambda = P({5, 4, 3, 1}); // removes two cells from the last row
    CHECK_THROWS_AS(pair_term(kAlpha, bad), std::invalid_argument);

    bad = t;
    bad.mu = P({6, 6, 3, 2}); // mu_2 > lambda_1 breaks interlacing
    CHECK_THROWS_AS(pair_term(kAlpha, bad), std::invalid_argument);
}

TEST_CASE("involution report for tiny inputs")
{
    InvolutionReport empty2 = involution_report(P({}), 2);
    CHECK(empty2.paired.empty());
    REQUIRE(empty2.survivors.size() == 1);
    CHECK(empty2.survivors[0].mu == P({2}));
    CHECK(empty2.survivors[0].sign == 1);

    InvolutionReport one1 = involution_report(P({1}), 1);
    REQUIRE(one1.paired.size() == 1);
    REQUIRE(one1.survivors.size() == 1);
    CHECK(one1.paired[0].first.mu == P({2}));
    CHECK(one1.paired[0].second.mu == P({2}));
    CHECK(one1.paired[0].first.sign == 1);
    CHECK(one1.paired[0].second.sign == -1);
    CHECK(one1.corner_used[0] == Cell{1, 1});
    CHECK(one1.survivors[0].mu == P({1, 1}));
    CHECK(one1.survivors[0].sign == 1);
}

TEST_CASE("involution report matches the lemma for the running example")
{
    InvolutionReport report = involution_report(kAlpha, 3);
    REQUIRE(report.survivors.size() == 1);
    CHECK(report.survivors[0].mu == P({4, 4, 4, 3, 3}));
    CHECK(report.survivors[0].sign == -1);

    // raw term count recomputed from the strip enumerations alone
    std::size_t raw_count = 0;
    for (long long j = 0; j <= static_cast<long long>(kAlpha.length()); ++j)
        for (const Partition& lam : vertical_strip_removals(kAlpha, j))
            raw_count += horizontal_strip_additions(lam, 3 + j).size();
    CHECK(report.paired.size() * 2 + report.survivors.size() == raw_count);
    CHECK(report.corner_used.size() == report.paired.size());
}

TEST_CASE("involution survives every small window")
{
    SweepResult r = sweep_involution_soundness(partitions_up_to_weight(5), -8, 5);
    CHECK(r.cases > 0);
    CHECK(r.failed == 0);
}

} // namespace
} // namespace schur
