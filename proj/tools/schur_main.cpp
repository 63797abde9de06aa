#include "schur/io.hpp"
#include "schur/ops.hpp"
#include "schur/straighten.hpp"
#include "schur/verify.hpp"
#include "schur/vertex.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace schur;

std::string term_brief(const RawTerm& t)
{
    return std::string(t.sign > 0 ? "+" : "-") + "[j=" + std::to_string(t.j) +
           " lambda=" + format_partition(t.lambda) + "]";
}

json raw_term_json(const RawTerm& t)
{
    return json{{"j", t.j},
                {"lambda", partition_to_json(t.lambda)},
                {"mu", partition_to_json(t.mu)},
                {"n", t.n},
                {"sign", t.sign}};
}

int emit_sweep(const SweepResult& r, const std::string& header, json j, bool as_json)
{
    if (as_json) {
        j["cases"] = r.cases;
        j["passed"] = r.cases - r.failed;
        j["failed"] = r.failed;
        j["failures"] = r.failures;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << header << "\n";
        std::cout << "cases=" << r.cases << " passed=" << r.cases - r.failed
                  << " failed=" << r.failed << "\n";
        for (const std::string& f : r.failures)
            std::cout << "fail: " << f << "\n";
    }
    return r.ok() ? 0 : 1;
}

int run_rectify(const std::string& seq_text, bool as_json)
{
    IntegerSequence seq = parse_integer_sequence(seq_text);
    StraighteningResult a = staircase_straighten(seq);
    StraighteningResult b = row_exchange_straighten(seq);
    if (!(a == b))
        throw VerificationError("straightening algorithms disagree on " +
                                format_integer_sequence(seq) + ": staircase " +
                                format_straightening(a) + ", row exchange " +
                                format_straightening(b));
    if (as_json)
        std::cout << straightening_to_json(a).dump() << "\n";
    else
        std::cout << format_straightening(a) << "\n";
    return 0;
}

int run_perp(long long i, const std::string& alpha_text, bool as_json)
{
    Partition alpha = parse_partition(alpha_text);
    SchurExpansion a = p_perp(i, alpha);
    SchurExpansion b = murnaghan_nakayama_perp(i, alpha);
    if (a != b)
        throw VerificationError("p_perp routes disagree on alpha=" + format_partition(alpha) +
                                " i=" + std::to_string(i) + ": " + format_expansion(a) +
                                " vs " + format_expansion(b));
    if (as_json)
        std::cout << expansion_to_json(a).dump() << "\n";
    else
        std::cout << format_expansion(a) << "\n";
    return 0;
}

int run_vertex(const std::string& alpha_text, const std::string& range_text,
               const std::string& method, bool as_json)
{
    Partition alpha = parse_partition(alpha_text);
    auto [lo, hi] = parse_range(range_text);
    VertexSeries series;
    if (method == "lhs") {
        series = vertex_lhs(alpha, lo, hi);
    } else if (method == "lemma") {
        series = vertex_lemma(alpha, lo, hi);
    } else if (method == "rhs") {
        series = vertex_rhs(alpha, lo, hi);
    } else {
        series = vertex_lhs(alpha, lo, hi);
        VertexSeries lemma = vertex_lemma(alpha, lo, hi);
        VertexSeries rhs = vertex_rhs(alpha, lo, hi);
        for (long long n = lo; n <= hi; ++n)
            if (series.at(n) != lemma.at(n) || series.at(n) != rhs.at(n))
                throw VerificationError(
                    "vertex series methods disagree for alpha=" + format_partition(alpha) +
                    " at n=" + std::to_string(n) + ": lhs " + format_expansion(series.at(n)) +
                    ", lemma " + format_expansion(lemma.at(n)) + ", rhs " +
                    format_expansion(rhs.at(n)));
    }
    std::cerr << "method=" << method << "\n";
    if (as_json)
        std::cout << series_to_json(series).dump() << "\n";
    else
        std::cout << format_series_lines(series);
    return 0;
}

int run_involution(const std::string& alpha_text, long long n, bool as_json)
{
    Partition alpha = parse_partition(alpha_text);
    InvolutionReport report = involution_report(alpha, n);
    SchurExpansion lemma;
    for (const RawTerm& t : report.survivors)
        lemma.add(t.mu, t.sign);

    if (as_json) {
        json couples = json::array();
        for (std::size_t i = 0; i < report.paired.size(); ++i) {
            const auto& [first, second] = report.paired[i];
            const Cell& corner = report.corner_used[i];
            couples.push_back(json{{"corner", {{"row", corner.row}, {"column", corner.column}}},
                                   {"first", raw_term_json(first)},
                                   {"second", raw_term_json(second)}});
        }
        json survivors = json::array();
        for (const RawTerm& t : report.survivors)
            survivors.push_back(raw_term_json(t));
        json out{{"alpha", partition_to_json(alpha)},
                 {"n", n},
                 {"couples", couples},
                 {"survivors", survivors},
                 {"lemma", expansion_to_json(lemma)}};
        std::cout << out.dump() << "\n";
        return 0;
    }

    std::cout << "alpha=" << format_partition(alpha) << " n=" << n << "\n";
    std::cout << "couples=" << report.paired.size() << " survivors=" << report.survivors.size()
              << "\n";
    for (std::size_t i = 0; i < report.paired.size(); ++i) {
        const auto& [first, second] = report.paired[i];
        const Cell& corner = report.corner_used[i];
        std::cout << "couple " << i + 1 << ": corner=(" << corner.row << "," << corner.column
                  << ") mu=" << format_partition(first.mu) << " " << term_brief(first)
                  << " <-> " << term_brief(second) << "\n";
    }
    for (std::size_t i = 0; i < report.survivors.size(); ++i) {
        const RawTerm& t = report.survivors[i];
        std::cout << "survivor " << i + 1 << ": " << term_brief(t)
                  << " mu=" << format_partition(t.mu) << "\n";
    }
    std::cout << "lemma: " << format_expansion(lemma) << "\n";
    return 0;
}

int run_gamma1(const std::string& alpha_text, long long max_degree, bool as_json)
{
    Partition alpha = parse_partition(alpha_text);
    if (max_degree < 0)
        max_degree = alpha.weight() + 5;
    GradedExpansion graded = gamma_one(alpha, max_degree);
    if (as_json) {
        json pieces = json::array();
        for (long long d = 0; d <= max_degree; ++d)
            pieces.push_back(json{{"degree", d}, {"expansion", expansion_to_json(graded.piece(d))}});
        json out{{"alpha", partition_to_json(alpha)},
                 {"max_degree", max_degree},
                 {"pieces", pieces}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "alpha=" << format_partition(alpha) << " max_degree=" << max_degree << "\n";
        for (long long d = 0; d <= max_degree; ++d)
            std::cout << "deg " << d << ": " << format_expansion(graded.piece(d)) << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, long long max_weight, const std::string& range_text,
               bool as_json)
{
    auto [n_lo, n_hi] = parse_range(range_text);
    std::vector<Partition> alphas = partitions_up_to_weight(max_weight);
    SweepResult r;
    if (suite == "straighten-agree")
        r = sweep_straighten_agreement(max_weight);
    else if (suite == "vertex-3way")
        r = sweep_vertex_three_way(alphas, n_lo, n_hi);
    else if (suite == "involution-sound")
        r = sweep_involution_soundness(alphas, n_lo, n_hi);
    else if (suite == "perp-agree")
        r = sweep_perp_agreement(alphas, std::max<long long>(max_weight, 1));
    else
        r = sweep_gamma_one(alphas, n_hi);

    const std::string window = std::to_string(n_lo) + ":" + std::to_string(n_hi);
    return emit_sweep(r,
                      "suite=" + suite + " max_weight=" + std::to_string(max_weight) +
                          " n_range=" + window,
                      json{{"suite", suite}, {"max_weight", max_weight}, {"n_range", window}},
                      as_json);
}

int run_oracle(const std::string& check, const std::string& vars_text, long long max_degree,
               bool as_json)
{
    std::vector<long long> vars = parse_bracketed_integers("[" + vars_text + "]");
    if (vars.empty() || vars.size() > 2)
        throw std::invalid_argument("--vars expects p or p,q, got '" + vars_text + "'");
    const int p = static_cast<int>(vars[0]);
    const int q = static_cast<int>(vars.size() == 2 ? vars[1] : vars[0]);
    const int d = static_cast<int>(max_degree);

    SweepResult r;
    if (check == "jt-vs-ssyt")
        r = check_jt_vs_ssyt(p, max_degree);
    else if (check == "schur-diff")
        r = check_schur_diff(p, q, max_degree);
    else if (check == "cauchy")
        r = check_cauchy(p, q, d);
    else if (check == "dual-cauchy")
        r = check_dual_cauchy(p, q);
    else if (check == "sigma-add")
        r = check_sigma_add(p, q, d);
    else if (check == "neg-alphabet")
        r = check_neg_alphabet(p, max_degree);
    else
        r = check_vertex_monomial(p, max_degree);

    const std::string vars_echo =
        std::to_string(p) + (vars.size() == 2 ? "," + std::to_string(q) : "");
    return emit_sweep(r,
                      "check=" + check + " vars=" + vars_echo +
                          " max_degree=" + std::to_string(max_degree),
                      json{{"check", check}, {"vars", vars_echo}, {"max_degree", max_degree}},
                      as_json);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact Jacobi-Trudi straightening, vertex operator series, and tableau oracles"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* rectify = app.add_subcommand("rectify", "straighten an integer sequence by both algorithms");
    std::string rectify_seq;
    rectify->add_option("sequence", rectify_seq, "bracketed sequence, e.g. \"[5,3,2,7]\"")
        ->required();

    auto* perp = app.add_subcommand("perp", "apply the power sum adjoint two independent ways");
    long long perp_i = 1;
    std::string perp_alpha;
    perp->add_option("--i", perp_i, "power sum index, i >= 1")->required();
    perp->add_option("--alpha", perp_alpha, "partition, e.g. \"[6,5,4,2,1]\"")->required();

    auto* vertex = app.add_subcommand("vertex", "vertex operator series coefficients on a window");
    std::string vertex_alpha;
    std::string vertex_range;
    std::string vertex_method = "all";
    vertex->add_option("--alpha", vertex_alpha, "partition")->required();
    vertex->add_option("--n", vertex_range, "inclusive window a:b")->required();
    vertex->add_option("--method", vertex_method, "lhs, lemma, rhs, or all")
        ->check(CLI::IsMember({"lhs", "lemma", "rhs", "all"}));

    auto* involution = app.add_subcommand("involution", "sign-reversing involution report for one coefficient");
    std::string involution_alpha;
    long long involution_n = 0;
    involution->add_option("--alpha", involution_alpha, "partition")->required();
    involution->add_option("--n", involution_n, "series exponent")->required();

    auto* gamma1 = app.add_subcommand("gamma1", "vertex operator at t = 1, graded by degree");
    std::string gamma1_alpha;
    long long gamma1_degree = -1;
    gamma1->add_option("--alpha", gamma1_alpha, "partition")->required();
    gamma1->add_option("--max-degree", gamma1_degree, "largest output degree (default |alpha| + 5)");

    auto* verify = app.add_subcommand("verify", "property sweeps over bounded inputs");
    std::string verify_suite;
    long long verify_weight = 6;
    std::string verify_range = "-8:6";
    verify->add_option("--suite", verify_suite, "which sweep to run")
        ->required()
        ->check(CLI::IsMember(
            {"straighten-agree", "vertex-3way", "involution-sound", "perp-agree", "gamma1"}));
    verify->add_option("--max-weight", verify_weight, "partition weight bound");
    verify->add_option("--n-range", verify_range, "series window a:b");

    auto* oracle = app.add_subcommand("oracle", "monomial-level comparisons against tableau enumeration");
    std::string oracle_check;
    std::string oracle_vars = "2,2";
    long long oracle_degree = 4;
    oracle->add_option("--check", oracle_check, "which comparison to run")
        ->required()
        ->check(CLI::IsMember({"jt-vs-ssyt", "schur-diff", "cauchy", "dual-cauchy", "sigma-add",
                               "neg-alphabet", "vertex-monomial"}));
    oracle->add_option("--vars", oracle_vars, "alphabet sizes p or p,q");
    oracle->add_option("--max-degree", oracle_degree, "degree / weight bound");

    for (auto* sub : {rectify, perp, vertex, involution, gamma1, verify, oracle})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::cerr << "# schur";
    for (int i = 1; i < argc; ++i)
        std::cerr << " " << argv[i];
    std::cerr << "\n";

    const auto start = std::chrono::steady_clock::now();
    const bool as_json = format == "json";
    int status = 0;
    try {
        if (rectify->parsed())
            status = run_rectify(rectify_seq, as_json);
        else if (perp->parsed())
            status = run_perp(perp_i, perp_alpha, as_json);
        else if (vertex->parsed())
            status = run_vertex(vertex_alpha, vertex_range, vertex_method, as_json);
        else if (involution->parsed())
            status = run_involution(involution_alpha, involution_n, as_json);
        else if (gamma1->parsed())
            status = run_gamma1(gamma1_alpha, gamma1_degree, as_json);
        else if (verify->parsed())
            status = run_verify(verify_suite, verify_weight, verify_range, as_json);
        else
            status = run_oracle(oracle_check, oracle_vars, oracle_degree, as_json);
    } catch (const VerificationError& err) {
        std::cerr << "verification failed: " << err.what() << "\n";
        status = 1;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        status = 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        status = 1;
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cerr << "elapsed_ms=" << elapsed << "\n";
    return status;
}
