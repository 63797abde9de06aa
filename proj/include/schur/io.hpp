#pragma once

// Text and JSON forms shared by the CLI and the golden tests. All text
// output is deterministic: expansions print lexicographically decreasing,
// polynomials in graded-lexicographic order.

#include "schur/expansion.hpp"
#include "schur/monomial.hpp"
#include "schur/straighten.hpp"
#include "schur/vertex.hpp"

#include "json.hpp"

#include <string>

namespace schur {

/// Parses "[a,b,c]" (whitespace tolerated) into raw integers. Throws
/// std::invalid_argument naming the bad token.
std::vector<long long> parse_bracketed_integers(const std::string& text);
IntegerSequence parse_integer_sequence(const std::string& text);
Partition parse_partition(const std::string& text);

/// Parses "a:b" (both ends inclusive, negatives allowed) into a pair.
/// Throws std::invalid_argument when malformed or a > b.
std::pair<long long, long long> parse_range(const std::string& text);

/// "[5,4,3,3]"; the empty partition is "[]".
std::string format_partition(const Partition& p);
std::string format_integer_sequence(const IntegerSequence& seq);

/// "+1*s[5,4,3,3]" terms space-joined, lexicographically decreasing by
/// partition; the zero expansion is "0".
std::string format_expansion(const SchurExpansion& e);

/// "zero" or "+[5,5,4,3]" / "-[4,4,4,3,3]".
std::string format_straightening(const StraighteningResult& r);

/// One line per n in the window: "t^{n}: <expansion>".
std::string format_series_lines(const VertexSeries& series);

/// Signed terms in graded-lexicographic exponent order (total degree
/// ascending, then exponents lexicographically decreasing), each as
/// "c*x1^2*x2*y1" with unit exponents elided; variables 0..p-1 print as
/// x1..xp, the rest as y1..yq. The zero polynomial is "0".
std::string format_monomial_polynomial(const MonomialPolynomial& poly, int p);

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

/// [{"coeff": c, "partition": [..]}, ...] lexicographically decreasing.
nlohmann::json expansion_to_json(const SchurExpansion& e);
SchurExpansion expansion_from_json(const nlohmann::json& j);

nlohmann::json straightening_to_json(const StraighteningResult& r);
nlohmann::json series_to_json(const VertexSeries& series);

} // namespace schur
