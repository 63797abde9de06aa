#include "schur/vertex.hpp"

#include "schur/straighten.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace schur {

namespace {

std::string describe_term(const RawTerm& t)
{
    auto bracketed = [](const Partition& p) {
        std::string s = "[";
        for (std::size_t i = 0; i < p.length(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(p.parts()[i]);
        }
        return s + "]";
    };
    return "term j=" + std::to_string(t.j) + " lambda=" + bracketed(t.lambda) +
           " mu=" + bracketed(t.mu) + " n=" + std::to_string(t.n) +
           " sign=" + (t.sign > 0 ? std::string("+1") : std::string("-1"));
}

VertexSeries empty_series(const Partition& alpha, long long n_min, long long n_max)
{
    if (n_min > n_max)
        throw std::invalid_argument("series window is empty: n_min > n_max");
    VertexSeries s;
    s.alpha = alpha;
    s.n_min = n_min;
    s.n_max = n_max;
    for (long long n = n_min; n <= n_max; ++n)
        s.coefficients[n] = SchurExpansion();
    return s;
}

} // namespace

const SchurExpansion& VertexSeries::at(long long n) const
{
    if (n < n_min || n > n_max)
        throw std::invalid_argument("exponent " + std::to_string(n) +
                                    " is outside the series window");
    return coefficients.at(n);
}

VertexSeries vertex_lhs(const Partition& alpha, long long n_min, long long n_max)
{
    VertexSeries s = empty_series(alpha, n_min, n_max);
    for (long long n = n_min; n <= n_max; ++n)
        s.coefficients[n] =
            SchurExpansion::from_straightening(staircase_straighten(prepended(n, alpha)));
    return s;
}

std::vector<LemmaTerm> vertex_lemma_terms(const Partition& alpha, long long n_max)
{
    std::vector<LemmaTerm> out;
    const long long l = static_cast<long long>(alpha.length());
    for (long long k = 0;; ++k) {
        long long ht = 0;
        for (long long i = 1; i <= l; ++i)
            if (alpha.part(static_cast<std::size_t>(i)) > k)
                ++ht;
        long long n = k - ht;
        if (n > n_max)
            break;

        std::vector<long long> cols(alpha.conjugate().parts());
        if (static_cast<long long>(cols.size()) < k)
            cols.resize(static_cast<std::size_t>(k), 0);
        for (long long c = 0; c < k; ++c)
            ++cols[static_cast<std::size_t>(c)];
        Partition intermediate = Partition(std::move(cols)).conjugate();

        std::vector<long long> mu_parts(intermediate.parts());
        for (long long i = 1; i <= l; ++i) {
            if (alpha.part(static_cast<std::size_t>(i)) <= k)
                continue;
            if (intermediate.part(static_cast<std::size_t>(i)) !=
                alpha.part(static_cast<std::size_t>(i)))
                throw std::logic_error("cell additions disturbed a row scheduled for removal");
            mu_parts[static_cast<std::size_t>(i - 1)] -= 1;
        }
        Partition mu(std::move(mu_parts));
        if (mu.weight() != checked_add(alpha.weight(), n))
            throw std::logic_error("lemma term weight mismatch");
        if (!out.empty() && out.back().n >= n)
            throw std::logic_error("lemma exponents failed to increase");
        out.push_back(LemmaTerm{k, n, ht % 2 == 0 ? 1 : -1, std::move(mu), ht});
    }
    return out;
}

VertexSeries vertex_lemma(const Partition& alpha, long long n_min, long long n_max)
{
    VertexSeries s = empty_series(alpha, n_min, n_max);
    for (const LemmaTerm& term : vertex_lemma_terms(alpha, n_max))
        if (term.n >= n_min)
            s.coefficients[term.n].add(term.mu, term.sign);
    return s;
}

std::vector<RawTerm> vertex_rhs_raw(const Partition& alpha, long long n_min, long long n_max)
{
    if (n_min > n_max)
        throw std::invalid_argument("series window is empty: n_min > n_max");
    const long long w = alpha.weight();
    std::vector<RawTerm> out;
    for (long long n = n_min; n <= n_max; ++n)
        for (long long j = 0; j <= static_cast<long long>(alpha.length()); ++j) {
            if (n + j < 0)
                continue;
            int sign = j % 2 == 0 ? 1 : -1;
            for (const Partition& lambda : vertical_strip_removals(alpha, j))
                for (const Partition& mu : horizontal_strip_additions(lambda, n + j)) {
                    if (mu.weight() != w + n)
                        throw std::logic_error("raw term weight mismatch");
                    out.push_back(RawTerm{j, lambda, mu, n, sign});
                }
        }
    return out;
}

VertexSeries vertex_rhs(const Partition& alpha, long long n_min, long long n_max)
{
    VertexSeries s = empty_series(alpha, n_min, n_max);
    for (const RawTerm& term : vertex_rhs_raw(alpha, n_min, n_max))
        s.coefficients[term.n].add(term.mu, term.sign);
    return s;
}

std::optional<RawTerm> pair_term(const Partition& alpha, const RawTerm& term)
{
    const long long l = static_cast<long long>(alpha.length());
    if (term.j < 0 || term.j > l)
        throw std::invalid_argument(describe_term(term) + ": j outside 0..length(alpha)");
    long long removed = 0;
    for (long long i = 1; i <= l + 1; ++i) {
        long long a = alpha.part(static_cast<std::size_t>(i));
        long long lam = term.lambda.part(static_cast<std::size_t>(i));
        if (lam > a || lam < a - 1)
            throw std::invalid_argument(describe_term(term) +
                                        ": lambda is not a vertical strip removal at row " +
                                        std::to_string(i));
        removed += a - lam;
        if (term.mu.part(static_cast<std::size_t>(i)) < lam ||
            term.mu.part(static_cast<std::size_t>(i + 1)) > lam)
            throw std::invalid_argument(describe_term(term) +
                                        ": mu/lambda is not a horizontal strip at row " +
                                        std::to_string(i));
    }
    if (removed != term.j)
        throw std::invalid_argument(describe_term(term) + ": j does not match |alpha| - |lambda|");
    if (term.n != checked_add(term.mu.weight(), -alpha.weight()))
        throw std::invalid_argument(describe_term(term) + ": n does not match |mu| - |alpha|");
    if (term.sign != (term.j % 2 == 0 ? 1 : -1))
        throw std::invalid_argument(describe_term(term) + ": sign does not match (-1)^j");

    std::vector<Cell> corners = alpha_removable_corners(alpha, term.mu);
    if (corners.empty())
        return std::nullopt;
    const Cell corner = corners.front();

    std::vector<long long> lam_parts(term.lambda.parts());
    lam_parts.resize(static_cast<std::size_t>(l), 0);
    std::size_t row = static_cast<std::size_t>(corner.row - 1);
    RawTerm partner = term;
    if (lam_parts[row] == alpha.part(static_cast<std::size_t>(corner.row))) {
        lam_parts[row] -= 1;
        partner.j = term.j + 1;
    } else {
        lam_parts[row] += 1;
        partner.j = term.j - 1;
    }
    partner.lambda = Partition(std::move(lam_parts));
    partner.sign = -term.sign;
    return partner;
}

InvolutionReport involution_report(const Partition& alpha, long long n)
{
    std::vector<RawTerm> raw = vertex_rhs_raw(alpha, n, n);
    InvolutionReport report;
    report.alpha = alpha;
    report.n = n;

    std::map<std::vector<long long>, std::size_t> index;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        std::vector<long long> key = raw[i].lambda.parts();
        key.push_back(-1);
        key.insert(key.end(), raw[i].mu.parts().begin(), raw[i].mu.parts().end());
        if (!index.emplace(std::move(key), i).second)
            throw VerificationError(describe_term(raw[i]) + ": duplicate raw term");
    }
    auto find_term = [&](const RawTerm& t) {
        std::vector<long long> key = t.lambda.parts();
        key.push_back(-1);
        key.insert(key.end(), t.mu.parts().begin(), t.mu.parts().end());
        auto it = index.find(key);
        if (it == index.end())
            throw VerificationError(describe_term(t) + ": partner is not a raw term");
        return it->second;
    };

    for (std::size_t i = 0; i < raw.size(); ++i) {
        const RawTerm& term = raw[i];
        std::optional<RawTerm> partner = pair_term(alpha, term);
        if (!partner) {
            for (std::size_t r = 1; r <= alpha.length(); ++r) {
                long long a = alpha.part(r);
                bool removal_forced =
                    term.mu.part(r) == a - 1 && term.lambda.part(r) == a - 1;
                bool keep_forced = term.mu.part(r + 1) >= a && term.lambda.part(r) == a;
                if (!removal_forced && !keep_forced)
                    throw VerificationError(describe_term(term) +
                                            ": fixed point violates the forced-row property at row " +
                                            std::to_string(r));
            }
            report.survivors.push_back(term);
            continue;
        }
        if (partner->mu != term.mu || partner->n != term.n || partner->sign != -term.sign)
            throw VerificationError(describe_term(term) + ": partner changes mu, n, or keeps the sign");
        std::size_t pi = find_term(*partner);
        std::optional<RawTerm> back = pair_term(alpha, raw[pi]);
        if (!back || find_term(*back) != i)
            throw VerificationError(describe_term(term) + ": pairing is not an involution");
        if (term.j < partner->j) {
            report.paired.emplace_back(term, *partner);
            report.corner_used.push_back(alpha_removable_corners(alpha, term.mu).front());
        }
    }

    if (report.paired.size() * 2 + report.survivors.size() != raw.size())
        throw VerificationError("pairing does not partition the raw terms");

    SchurExpansion from_survivors;
    for (const RawTerm& s : report.survivors)
        from_survivors.add(s.mu, s.sign);
    SchurExpansion from_lemma;
    for (const LemmaTerm& t : vertex_lemma_terms(alpha, n))
        if (t.n == n)
            from_lemma.add(t.mu, t.sign);
    if (from_survivors != from_lemma)
        throw VerificationError("survivors disagree with the direct description at n = " +
                                std::to_string(n));
    return report;
}

} // namespace schur
