#include "schur/io.hpp"

#include "schur/tableaux.hpp"

#include "doctest.h"

#include <utility>
#include <vector>

namespace schur {
namespace {

Partition P(std::vector<long long> parts) { return Partition(std::move(parts)); }

TEST_CASE("parsing bracketed lists")
{
    CHECK(parse_bracketed_integers("[3,1]") == std::vector<long long>{3, 1});
    CHECK(parse_bracketed_integers("[]").empty());
    CHECK(parse_bracketed_integers(" [ 5 ,4, 3,3 ] ") == std::vector<long long>{5, 4, 3, 3});
    CHECK(parse_bracketed_integers("[-2,5]") == std::vector<long long>{-2, 5});

    CHECK_THROWS_WITH_AS(parse_bracketed_integers("3,1"),
                         "expected a bracketed list, got '3,1'", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_bracketed_integers("[3,x]"), "invalid integer token 'x'",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_bracketed_integers("[3,,1]"), "empty integer token",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_bracketed_integers("["), std::invalid_argument);
    CHECK_THROWS_AS(parse_bracketed_integers("[12a]"), std::invalid_argument);

    CHECK(parse_partition("[3,1]") == P({3, 1}));
    CHECK(parse_partition("[2,2,0,0]") == P({2, 2}));
    CHECK_THROWS_AS(parse_partition("[1,3]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("[-1]"), std::invalid_argument);
    CHECK(parse_integer_sequence("[1,3]") == IntegerSequence({1, 3}));
    CHECK(parse_integer_sequence("[-2,5,4,3,3]") == IntegerSequence({-2, 5, 4, 3, 3}));
}

TEST_CASE("parsing ranges")
{
    CHECK(parse_range("-6:8") == std::pair<long long, long long>{-6, 8});
    CHECK(parse_range("3:3") == std::pair<long long, long long>{3, 3});
    CHECK(parse_range(" -2 : 5 ") == std::pair<long long, long long>{-2, 5});

    CHECK_THROWS_AS(parse_range("5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range(":5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("5:"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_range("5:3"), "empty range '5:3'", std::invalid_argument);
    CHECK_THROWS_AS(parse_range("a:b"), std::invalid_argument);
}

TEST_CASE("partition and sequence formatting round-trips")
{
    CHECK(format_partition(P({})) == "[]");
    CHECK(format_partition(P({5, 4, 3, 3})) == "[5,4,3,3]");
    CHECK(format_integer_sequence(IntegerSequence({-2, 5, 0})) == "[-2,5,0]");
    for (const Partition& p : partitions_up_to_weight(6))
        CHECK(parse_partition(format_partition(p)) == p);
}

TEST_CASE("expansion text is lexicographically decreasing")
{
    CHECK(format_expansion(SchurExpansion()) == "0");
    CHECK(format_expansion(SchurExpansion::single(P({2, 1}))) == "+1*s[2,1]");
    CHECK(format_expansion(SchurExpansion::single(P({}), -3)) == "-3*s[]");

    SchurExpansion e;
    e.add(P({4, 4, 4, 2, 1}), -1);
    e.add(P({6, 5, 4}), -1);
    e.add(P({6, 3, 3, 2, 1}), -1);
    CHECK(format_expansion(e) == "-1*s[6,5,4] -1*s[6,3,3,2,1] -1*s[4,4,4,2,1]");

    e.add(P({6, 5, 4}), 1); // cancels the key entirely
    CHECK(format_expansion(e) == "-1*s[6,3,3,2,1] -1*s[4,4,4,2,1]");
}

TEST_CASE("straightening text")
{
    CHECK(format_straightening(staircase_straighten(IntegerSequence({5, 3, 2, 7}))) ==
          "+[5,5,4,3]");
    CHECK(format_straightening(staircase_straighten(IntegerSequence({4, 5}))) == "zero");
    CHECK(format_straightening(row_exchange_straighten(IntegerSequence({1, 3}))) == "-[2,2]");
}

TEST_CASE("series lines")
{
    CHECK(format_series_lines(vertex_lhs(P({1}), -2, 2)) == "alpha=[1] n=-2:2\n"
                                                            "t^{-2}: 0\n"
                                                            "t^{-1}: -1*s[]\n"
                                                            "t^{0}: 0\n"
                                                            "t^{1}: +1*s[1,1]\n"
                                                            "t^{2}: +1*s[2,1]\n");
}

TEST_CASE("monomial polynomial text is graded lexicographic")
{
    CHECK(format_monomial_polynomial(MonomialPolynomial::zero(2), 2) == "0");
    CHECK(format_monomial_polynomial(MonomialPolynomial::one(2), 2) == "+1");
    CHECK(format_monomial_polynomial(h_expand(2, 2), 2) == "+1*x1^2 +1*x1*x2 +1*x2^2");
    CHECK(format_monomial_polynomial(signed_tableaux_expand(P({1}), AlphabetSpec{1, 1}), 1) ==
          "+1*x1 -1*y1");

    MonomialPolynomial mixed(2);
    mixed.add_term({1, 0}, 1);
    mixed.add_term({2, 0}, 1);
    mixed.add_term({1, 1}, 2);
    mixed.add_term({0, 2}, -1);
    CHECK(format_monomial_polynomial(mixed, 2) == "+1*x1 +1*x1^2 +2*x1*x2 -1*x2^2");
    CHECK(format_monomial_polynomial(mixed, 0) == "+1*y1 +1*y1^2 +2*y1*y2 -1*y2^2");
}

TEST_CASE("json round-trips")
{
    for (const Partition& p : partitions_up_to_weight(6))
        CHECK(partition_from_json(partition_to_json(p)) == p);
    CHECK(partition_to_json(P({3, 1})).dump() == "[3,1]");
    CHECK_THROWS_AS(partition_from_json(nlohmann::json::object()), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(nlohmann::json::parse("[1.5]")), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(nlohmann::json::parse("[1,3]")), std::invalid_argument);

    SchurExpansion e;
    e.add(P({2, 1}), 4);
    e.add(P({}), -1);
    e.add(P({3}), 2);
    CHECK(expansion_from_json(expansion_to_json(e)) == e);
    CHECK(expansion_to_json(e).dump() ==
          R"([{"coeff":2,"partition":[3]},{"coeff":4,"partition":[2,1]},{"coeff":-1,"partition":[]}])");
    CHECK(expansion_from_json(nlohmann::json::array()) == SchurExpansion());
    CHECK_THROWS_AS(expansion_from_json(nlohmann::json::parse("{}")), std::invalid_argument);
    CHECK_THROWS_AS(expansion_from_json(nlohmann::json::parse(R"([{"coeff":1}])")),
                    std::invalid_argument);
}

TEST_CASE("straightening and series json")
{
    CHECK(straightening_to_json(staircase_straighten(IntegerSequence({3, 1}))).dump() ==
          R"({"partition":[3,1],"sign":1})");
    CHECK(straightening_to_json(staircase_straighten(IntegerSequence({4, 5}))).dump() ==
          R"({"zero":true})");

    const VertexSeries series = vertex_lhs(P({1}), -2, 2);
    const nlohmann::json j = series_to_json(series);
    CHECK(j.at("alpha") == nlohmann::json::parse("[1]"));
    CHECK(j.at("n_min") == -2);
    CHECK(j.at("n_max") == 2);
    CHECK(j.at("coefficients").size() == 5);
    CHECK(j.at("coefficients")[0].at("n") == -2);
    for (std::size_t i = 0; i < 5; ++i) {
        const nlohmann::json& entry = j.at("coefficients")[i];
        CHECK(expansion_from_json(entry.at("terms")) ==
              series.at(entry.at("n").get<long long>()));
    }
}

} // namespace
} // namespace schur
