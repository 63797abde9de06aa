#include "schur/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace schur {

namespace {

std::string trimmed(const std::string& s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

long long parse_integer_token(const std::string& token)
{
    const std::string t = trimmed(token);
    if (t.empty())
        throw std::invalid_argument("empty integer token");
    std::size_t consumed = 0;
    long long value = 0;
    try {
        value = std::stoll(t, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid integer token '" + t + "'");
    }
    if (consumed != t.size())
        throw std::invalid_argument("invalid integer token '" + t + "'");
    return value;
}

} // namespace

std::vector<long long> parse_bracketed_integers(const std::string& text)
{
    const std::string t = trimmed(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw std::invalid_argument("expected a bracketed list, got '" + text + "'");
    const std::string inner = trimmed(t.substr(1, t.size() - 2));
    std::vector<long long> out;
    if (inner.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = inner.find(',', start);
        out.push_back(parse_integer_token(inner.substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

IntegerSequence parse_integer_sequence(const std::string& text)
{
    return IntegerSequence(parse_bracketed_integers(text));
}

Partition parse_partition(const std::string& text)
{
    return Partition(parse_bracketed_integers(text));
}

std::pair<long long, long long> parse_range(const std::string& text)
{
    const std::string t = trimmed(text);
    std::size_t colon = t.find(':', 1);
    if (colon == std::string::npos)
        throw std::invalid_argument("expected a range 'a:b', got '" + text + "'");
    long long lo = parse_integer_token(t.substr(0, colon));
    long long hi = parse_integer_token(t.substr(colon + 1));
    if (lo > hi)
        throw std::invalid_argument("empty range '" + text + "'");
    return {lo, hi};
}

namespace {

std::string join_parts(const std::vector<long long>& parts)
{
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(parts[i]);
    }
    return out + "]";
}

} // namespace

std::string format_partition(const Partition& p)
{
    return join_parts(p.parts());
}

std::string format_integer_sequence(const IntegerSequence& seq)
{
    return join_parts(seq.parts);
}

std::string format_expansion(const SchurExpansion& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& [partition, coeff] : e.terms()) {
        if (!out.empty())
            out += " ";
        out += coeff > 0 ? "+" : "-";
        out += std::to_string(coeff > 0 ? coeff : -coeff);
        out += "*s";
        out += format_partition(partition);
    }
    return out;
}

std::string format_straightening(const StraighteningResult& r)
{
    if (r.is_zero())
        return "zero";
    return (r.sign() > 0 ? "+" : "-") + format_partition(r.partition());
}

std::string format_series_lines(const VertexSeries& series)
{
    std::string out = "alpha=" + format_partition(series.alpha) + " n=" +
                      std::to_string(series.n_min) + ":" + std::to_string(series.n_max) + "\n";
    for (long long n = series.n_min; n <= series.n_max; ++n)
        out += "t^{" + std::to_string(n) + "}: " + format_expansion(series.at(n)) + "\n";
    return out;
}

std::string format_monomial_polynomial(const MonomialPolynomial& poly, int p)
{
    if (poly.is_zero())
        return "0";
    std::vector<std::pair<long long, MonomialPolynomial::Exponents>> order;
    order.reserve(poly.term_count());
    for (const auto& [e, c] : poly.terms()) {
        long long degree = 0;
        for (int v : e)
            degree += v;
        order.emplace_back(degree, e);
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        return a.second > b.second;
    });

    std::string out;
    for (const auto& [degree, e] : order) {
        long long c = poly.coefficient(e);
        if (!out.empty())
            out += " ";
        out += c > 0 ? "+" : "-";
        out += std::to_string(c > 0 ? c : -c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            out += "*";
            out += static_cast<int>(i) < p ? "x" + std::to_string(i + 1)
                                           : "y" + std::to_string(i - static_cast<std::size_t>(p) + 1);
            if (e[i] > 1)
                out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

nlohmann::json partition_to_json(const Partition& p)
{
    return nlohmann::json(p.parts());
}

Partition partition_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("partition JSON must be an array");
    std::vector<long long> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument("partition JSON entries must be integers");
        parts.push_back(v.get<long long>());
    }
    return Partition(std::move(parts));
}

nlohmann::json expansion_to_json(const SchurExpansion& e)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [partition, coeff] : e.terms())
        out.push_back({{"coeff", coeff}, {"partition", partition_to_json(partition)}});
    return out;
}

SchurExpansion expansion_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expansion JSON must be an array");
    SchurExpansion out;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("partition"))
            throw std::invalid_argument("expansion JSON terms need coeff and partition");
        out.add(partition_from_json(term.at("partition")), term.at("coeff").get<long long>());
    }
    return out;
}

nlohmann::json straightening_to_json(const StraighteningResult& r)
{
    if (r.is_zero())
        return {{"zero", true}};
    return {{"sign", r.sign()}, {"partition", partition_to_json(r.partition())}};
}

nlohmann::json series_to_json(const VertexSeries& series)
{
    nlohmann::json coefficients = nlohmann::json::array();
    for (long long n = series.n_min; n <= series.n_max; ++n)
        coefficients.push_back({{"n", n}, {"terms", expansion_to_json(series.at(n))}});
    return {{"alpha", partition_to_json(series.alpha)},
            {"n_min", series.n_min},
            {"n_max", series.n_max},
            {"coefficients", coefficients}};
}

} // namespace schur
