#include "schur/verify.hpp"

#include "schur/io.hpp"
#include "schur/ops.hpp"
#include "schur/straighten.hpp"
#include "schur/tableaux.hpp"
#include "schur/vertex.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace schur {

namespace {

constexpr std::size_t kMaxFailureReports = 20;

long long window_low(const Partition& alpha, long long n_lo)
{
    return std::max(n_lo, -static_cast<long long>(alpha.length()) - 2);
}

} // namespace

void SweepResult::check(bool passed, const std::string& description)
{
    ++cases;
    if (!passed) {
        ++failed;
        if (failures.size() < kMaxFailureReports)
            failures.push_back(description);
    }
}

SweepResult& SweepResult::merge(const SweepResult& other)
{
    cases += other.cases;
    failed += other.failed;
    for (const std::string& f : other.failures)
        if (failures.size() < kMaxFailureReports)
            failures.push_back(f);
    return *this;
}

SweepResult sweep_straighten_agreement(long long max_weight, long long random_cases)
{
    SweepResult result;
    auto run_one = [&](const IntegerSequence& seq) {
        StraighteningResult a = staircase_straighten(seq);
        StraighteningResult b = row_exchange_straighten(seq);
        bool passed = a == b;
        if (passed && !a.is_zero())
            passed = a.partition().weight() == seq.sum();
        result.check(passed, "seq=" + format_integer_sequence(seq) +
                                 " staircase=" + format_straightening(a) +
                                 " row-exchange=" + format_straightening(b));
    };

    const long long lo = -max_weight;
    const long long hi = max_weight + 2;
    run_one(IntegerSequence{});
    for (long long a = lo; a <= hi; ++a) {
        run_one(IntegerSequence({a}));
        for (long long b = lo; b <= hi; ++b) {
            run_one(IntegerSequence({a, b}));
            for (long long c = lo; c <= hi; ++c)
                run_one(IntegerSequence({a, b, c}));
        }
    }

    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<long long> length_dist(0, 6);
    std::uniform_int_distribution<long long> entry_dist(-6, 8);
    for (long long i = 0; i < random_cases; ++i) {
        std::vector<long long> parts(static_cast<std::size_t>(length_dist(rng)));
        for (long long& p : parts)
            p = entry_dist(rng);
        run_one(IntegerSequence(std::move(parts)));
    }
    return result;
}

SweepResult sweep_vertex_three_way(const std::vector<Partition>& alphas, long long n_lo,
                                   long long n_hi)
{
    SweepResult result;
    for (const Partition& alpha : alphas) {
        const long long lo = window_low(alpha, n_lo);
        if (lo > n_hi)
            continue;
        VertexSeries lhs = vertex_lhs(alpha, lo, n_hi);
        VertexSeries lemma = vertex_lemma(alpha, lo, n_hi);
        VertexSeries rhs = vertex_rhs(alpha, lo, n_hi);
        for (long long n = lo; n <= n_hi; ++n) {
            const SchurExpansion& a = lhs.at(n);
            bool passed = a == lemma.at(n) && a == rhs.at(n);
            if (passed && n < -static_cast<long long>(alpha.length()))
                passed = a.is_zero();
            if (passed && !a.is_zero())
                passed = a.size() == 1 && (a.terms().begin()->second == 1 ||
                                           a.terms().begin()->second == -1);
            result.check(passed, "alpha=" + format_partition(alpha) + " n=" +
                                     std::to_string(n) + " lhs=" + format_expansion(a) +
                                     " lemma=" + format_expansion(lemma.at(n)) +
                                     " rhs=" + format_expansion(rhs.at(n)));
        }
    }
    return result;
}

SweepResult sweep_involution_soundness(const std::vector<Partition>& alphas, long long n_lo,
                                       long long n_hi)
{
    SweepResult result;
    for (const Partition& alpha : alphas) {
        const long long lo = window_low(alpha, n_lo);
        for (long long n = lo; n <= n_hi; ++n) {
            std::string note;
            bool passed = true;
            try {
                InvolutionReport report = involution_report(alpha, n);
                for (std::size_t i = 0; i < report.paired.size(); ++i) {
                    const auto& [first, second] = report.paired[i];
                    if (first.mu != second.mu || first.n != second.n ||
                        first.sign != -second.sign) {
                        passed = false;
                        note = "couple " + std::to_string(i + 1) + " is not sign-reversing";
                        break;
                    }
                }
            } catch (const VerificationError& err) {
                passed = false;
                note = err.what();
            }
            result.check(passed, "alpha=" + format_partition(alpha) + " n=" +
                                     std::to_string(n) + ": " + note);
        }
    }
    return result;
}

SweepResult sweep_perp_agreement(const std::vector<Partition>& alphas, long long max_i)
{
    SweepResult result;
    for (const Partition& alpha : alphas)
        for (long long i = 1; i <= max_i; ++i) {
            SchurExpansion a = p_perp(i, alpha);
            SchurExpansion b = murnaghan_nakayama_perp(i, alpha);
            result.check(a == b, "alpha=" + format_partition(alpha) + " i=" +
                                     std::to_string(i) + " p-perp=" + format_expansion(a) +
                                     " border-strip=" + format_expansion(b));
        }
    return result;
}

SweepResult sweep_gamma_one(const std::vector<Partition>& alphas, long long extra_degree)
{
    SweepResult result;
    for (const Partition& alpha : alphas) {
        const long long max_degree = alpha.weight() + extra_degree;
        GradedExpansion graded = gamma_one(alpha, max_degree);
        for (long long n = -static_cast<long long>(alpha.length()) - 1; n <= extra_degree;
             ++n) {
            SchurExpansion straightened = SchurExpansion::from_straightening(
                staircase_straighten(prepended(n, alpha)));
            const SchurExpansion& piece = graded.piece(alpha.weight() + n);
            result.check(piece == straightened,
                         "alpha=" + format_partition(alpha) + " n=" + std::to_string(n) +
                             " gamma1=" + format_expansion(piece) +
                             " straightened=" + format_expansion(straightened));
        }
    }
    return result;
}

SweepResult check_jt_vs_ssyt(int p, long long max_degree)
{
    SweepResult result;
    const AlphabetSpec spec{p, 0};
    const long long entry_lo = -4;
    const long long entry_hi = 6;

    auto run_one = [&](const IntegerSequence& seq) {
        StraighteningResult straightened = staircase_straighten(seq);
        MonomialPolynomial expected(p);
        if (!straightened.is_zero()) {
            if (straightened.partition().weight() <= max_degree)
                expected = ssyt_expand(straightened.partition(), p)
                               .scaled(straightened.sign());
        }
        MonomialPolynomial determinant = jt_determinant_expand(seq, spec, max_degree);
        result.check(determinant == expected,
                     "seq=" + format_integer_sequence(seq) + " determinant vs ssyt at p=" +
                         std::to_string(p));
    };

    run_one(IntegerSequence{});
    std::vector<long long> parts;
    std::function<void(std::size_t)> iterate = [&](std::size_t len) {
        if (len == 4)
            return;
        for (long long v = entry_lo; v <= entry_hi; ++v) {
            parts.push_back(v);
            run_one(IntegerSequence(parts));
            iterate(len + 1);
            parts.pop_back();
        }
    };
    iterate(0);
    return result;
}

SweepResult check_schur_diff(int p, int q, long long max_weight)
{
    SweepResult result;
    const AlphabetSpec spec{p, q};
    for (const Partition& lambda : partitions_up_to_weight(max_weight)) {
        MonomialPolynomial tableaux = signed_tableaux_expand(lambda, spec);
        MonomialPolynomial determinant =
            jt_determinant_expand(IntegerSequence(lambda.parts()), spec);
        result.check(tableaux == determinant,
                     "lambda=" + format_partition(lambda) + " signed tableaux vs determinant at p=" +
                         std::to_string(p) + " q=" + std::to_string(q));
    }
    return result;
}

SweepResult check_cauchy(int p, int q, int d)
{
    SweepResult result;
    auto [schur_sum, kernel] = cauchy_truncated(p, q, d);
    result.check(schur_sum == kernel, "cauchy kernel at p=" + std::to_string(p) + " q=" +
                                          std::to_string(q) + " d=" + std::to_string(d));
    return result;
}

SweepResult check_dual_cauchy(int p, int q)
{
    SweepResult result;
    auto [product, schur_sum] = dual_cauchy_truncated(p, q);
    result.check(product == schur_sum,
                 "dual cauchy at p=" + std::to_string(p) + " q=" + std::to_string(q));
    return result;
}

SweepResult check_sigma_add(int p1, int p2, int d)
{
    SweepResult result;
    result.check(sigma_additivity_check(p1, p2, d),
                 "sigma additivity at p1=" + std::to_string(p1) + " p2=" +
                     std::to_string(p2) + " d=" + std::to_string(d));
    return result;
}

SweepResult check_neg_alphabet(int p, long long max_weight)
{
    SweepResult result;
    for (const Partition& alpha : partitions_up_to_weight(max_weight)) {
        int d_t = std::max(1, static_cast<int>(alpha.length()));
        result.check(negative_alphabet_corollary_check(alpha, p, d_t),
                     "alpha=" + format_partition(alpha) + " vertical strips vs signed tableaux");
    }
    return result;
}

SweepResult check_vertex_monomial(int p, long long max_weight, long long n_hi)
{
    SweepResult result;
    for (const Partition& alpha : partitions_up_to_weight(max_weight)) {
        const long long l = static_cast<long long>(alpha.length());
        MonomialPolynomial diff = signed_tableaux_expand(alpha, AlphabetSpec{p, 1});

        std::vector<MonomialPolynomial> u_coefficient(
            static_cast<std::size_t>(l) + 1, MonomialPolynomial(p));
        for (const auto& [e, c] : diff.terms()) {
            int k = e[static_cast<std::size_t>(p)];
            if (k > l)
                throw std::logic_error("u-degree exceeds the vertical strip bound");
            MonomialPolynomial::Exponents reduced(e.begin(), e.begin() + p);
            u_coefficient[static_cast<std::size_t>(k)].add_term(reduced, c);
        }

        VertexSeries lhs = vertex_lhs(alpha, -l, n_hi);
        for (long long n = -l; n <= n_hi; ++n) {
            MonomialPolynomial from_lhs(p);
            for (const auto& [lambda, c] : lhs.at(n).terms())
                from_lhs += ssyt_expand(lambda, p).scaled(c);

            MonomialPolynomial from_product(p);
            for (long long k = 0; k <= l; ++k)
                from_product += h_expand(n + k, p) * u_coefficient[static_cast<std::size_t>(k)];

            result.check(from_lhs == from_product,
                         "alpha=" + format_partition(alpha) + " n=" + std::to_string(n) +
                             " straightened coefficient vs truncated product at p=" +
                             std::to_string(p));
        }
    }
    return result;
}

} // namespace schur
