// Command-line front end: computes head sets, covering graphs, straightened
// expansions, standard monomial lists, module decompositions and
// multiplicity-freeness verdicts, in text, JSON, CSV or DOT form.
//
// Exit codes: 0 success, 1 broken internal invariant, 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schubert/decomposition.hpp"
#include "schubert/render.hpp"
#include "schubert/sphericity.hpp"
#include "schubert/straighten.hpp"

using namespace schubert;

namespace {

// Accepts "3,6,9" or "(3,6,9)"; all user-facing indices are 1-based.
std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::string s = text;
    if (!s.empty() && s.front() == '(') s.erase(s.begin());
    if (!s.empty() && s.back() == ')') s.pop_back();
    std::vector<int> out;
    if (s.empty() || s == "none") return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            while (pos < item.size() && std::isspace((unsigned char)item[pos])) ++pos;
            if (pos != item.size()) throw std::invalid_argument("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(what + ": cannot parse '" + item +
                                        "' as an integer");
        }
    }
    return out;
}

struct Options {
    int n = 0;
    int d = 0;
    std::string w_text;
    std::optional<std::string> r_q_text;
    std::string format = "text";
    std::string output;
    int degree = 1;
    int max_degree = 3;
    std::uint64_t seed = 1;
    bool count_only = false;
    bool all_w = false;
    bool do_scan = false;
    bool verify = false;
    std::string monomial_text;
    std::string blocks_text;
};

void add_context_flags(CLI::App* cmd, Options& opt, bool need_w) {
    cmd->add_option("--n", opt.n, "Ambient size N")->required();
    cmd->add_option("--d", opt.d, "Tuple length d")->required();
    auto* w = cmd->add_option("--w", opt.w_text,
                              "Defining word, e.g. 3,6,9 (1-based, increasing)");
    if (need_w) w->required();
}

void add_rq_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--r-q", opt.r_q_text,
                    "Reflection subset, e.g. 1,2,4 or 'none' "
                    "(default: full stabilizer of w)");
}

void add_format_flag(CLI::App* cmd, Options& opt,
                     const std::vector<std::string>& allowed) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
    cmd->add_option("--output", opt.output, "Write result to this file");
}

SchubertContext make_context(const Options& opt) {
    return SchubertContext(opt.n, opt.d, parse_int_list(opt.w_text, "--w"));
}

LeviContext make_levi(const Options& opt) {
    SchubertContext ctx = make_context(opt);
    if (opt.r_q_text) return LeviContext(ctx, parse_int_list(*opt.r_q_text, "--r-q"));
    return LeviContext(ctx, stabilizer_set(ctx));
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + opt.output);
    out << text;
}

int run_heads(const Options& opt) {
    LeviContext levi = make_levi(opt);
    if (opt.format == "json") emit(opt, render_heads_json(levi) + "\n");
    else if (opt.format == "csv") emit(opt, render_heads_csv(levi));
    else if (opt.format == "dot") emit(opt, render_heads_dot(levi));
    else emit(opt, render_heads_text(levi));
    return 0;
}

int run_hasse(const Options& opt) {
    SchubertContext ctx = make_context(opt);
    if (opt.format == "csv") emit(opt, render_hasse_csv(ctx));
    else if (opt.format == "dot") emit(opt, render_hasse_dot(ctx));
    else emit(opt, render_hasse_text(ctx));
    return 0;
}

int run_straighten(const Options& opt) {
    Monomial m = parse_monomial(opt.monomial_text);
    for (const Word& factor : m)
        if ((int)factor.size() != opt.d)
            throw std::invalid_argument("monomial factor " + to_string(factor) +
                                        " does not have length d=" +
                                        std::to_string(opt.d));
    for (const Word& factor : m)
        if (factor.back() > opt.n)
            throw std::invalid_argument("monomial factor " + to_string(factor) +
                                        " exceeds N=" + std::to_string(opt.n));

    Expansion e = straighten(m);
    std::string out;
    if (!opt.w_text.empty()) {
        Word w = parse_int_list(opt.w_text, "--w");
        SchubertContext ctx(opt.n, opt.d, w);  // validates w
        out = to_string(restrict_to_schubert(e, w)) + "\n";
    } else {
        out = to_string(e) + "\n";
    }

    int exit_code = 0;
    if (opt.verify) {
        const int trials = 100;
        int matches = 0;
        for (int t = 0; t < trials; ++t) {
            IntMatrix M = random_matrix(opt.n, opt.d, opt.seed + (std::uint64_t)t);
            if (evaluate_monomial(m, M) == evaluate_expansion(e, M)) ++matches;
        }
        out += "oracle: " + std::to_string(matches) + "/" +
               std::to_string(trials) + " exact matches\n";
        if (matches != trials) exit_code = 1;
    }
    emit(opt, out);
    return exit_code;
}

int run_std_monomials(const Options& opt) {
    SchubertContext ctx = make_context(opt);
    if (opt.count_only) {
        emit(opt, count_std_monomials(ctx, opt.degree).str() + "\n");
        return 0;
    }
    std::string out;
    for (const Monomial& m : enumerate_standard_monomials(ctx, opt.degree))
        out += to_string(m) + "\n";
    emit(opt, out);
    return 0;
}

int run_decompose(const Options& opt) {
    DecompositionReport rep = decompose_degree(make_levi(opt), opt.degree);
    if (opt.format == "json") emit(opt, report_to_json(rep) + "\n");
    else if (opt.format == "csv") emit(opt, render_report_csv(rep));
    else emit(opt, render_report_text(rep));
    return 0;
}

int run_dimcheck(const Options& opt) {
    std::vector<Word> words;
    if (opt.all_w) {
        Word top(opt.d);
        for (int i = 0; i < opt.d; ++i) top[i] = opt.n - opt.d + 1 + i;
        words = lower_interval(SchubertContext(opt.n, opt.d, top));
    } else {
        if (opt.w_text.empty())
            throw std::invalid_argument("dimcheck needs --w or --all-w");
        words.push_back(parse_int_list(opt.w_text, "--w"));
    }

    std::string out;
    bool all_ok = true;
    for (const Word& w : words) {
        SchubertContext ctx(opt.n, opt.d, w);
        std::vector<int> rq = opt.r_q_text && !opt.all_w
                                  ? parse_int_list(*opt.r_q_text, "--r-q")
                                  : stabilizer_set(ctx);
        LeviContext levi(ctx, rq);
        for (int r = 1; r <= opt.max_degree; ++r) {
            DecompositionReport rep = decompose_degree(levi, r);
            BigInt expected = count_std_monomials(ctx, r);
            bool ok = rep.total_dim == expected;
            all_ok = all_ok && ok;
            out += "w=" + to_string(w) + " r=" + std::to_string(r) + " dim=" +
                   rep.total_dim.str() + (ok ? " ok" : " MISMATCH expected=" +
                                                           expected.str()) +
                   "\n";
        }
    }
    out += all_ok ? "all pass\n" : "FAILED\n";
    emit(opt, out);
    return all_ok ? 0 : 1;
}

int run_spherical(const Options& opt) {
    std::vector<SphericityVerdict> table;
    if (opt.do_scan) {
        table = scan(opt.n, opt.d, opt.max_degree);
    } else {
        if (opt.w_text.empty())
            throw std::invalid_argument("spherical needs --w or --scan");
        SchubertContext ctx = make_context(opt);
        SphericityVerdict v = classify(ctx);
        v.empirical = empirical_multiplicity_check(make_levi(opt), opt.max_degree);
        table.push_back(std::move(v));
    }
    if (opt.format == "json") emit(opt, render_verdicts_json(table) + "\n");
    else if (opt.format == "csv") emit(opt, render_verdicts_csv(table));
    else emit(opt, render_verdicts_text(table));
    return 0;
}

int run_branch(const Options& opt) {
    std::vector<int> blocks = parse_int_list(opt.blocks_text, "--blocks");
    DecompositionReport rep = branching_of_rectangle(blocks, opt.d, opt.degree);
    if (opt.format == "json") emit(opt, report_to_json(rep) + "\n");
    else if (opt.format == "csv") emit(opt, render_report_csv(rep));
    else emit(opt, render_report_text(rep));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert variety coordinate-ring toolkit"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* heads = app.add_subcommand(
        "heads", "List component heads, their classes and component sizes");
    add_context_flags(heads, opt, true);
    add_rq_flag(heads, opt);
    add_format_flag(heads, opt, {"text", "json", "csv", "dot"});

    CLI::App* hasse = app.add_subcommand(
        "hasse", "Covering relations of the interval below w");
    add_context_flags(hasse, opt, true);
    add_format_flag(hasse, opt, {"text", "csv", "dot"});

    CLI::App* straight = app.add_subcommand(
        "straighten", "Rewrite a monomial in the standard basis");
    add_context_flags(straight, opt, false);
    straight->add_option("monomial", opt.monomial_text,
                         "Monomial text, e.g. \"(1,4)(2,3)\"")
        ->required();
    straight->add_flag("--verify", opt.verify,
                       "Check the expansion numerically on 100 random matrices");
    straight->add_option("--seed", opt.seed, "Seed for --verify")
        ->capture_default_str();
    add_format_flag(straight, opt, {"text"});

    CLI::App* stdmon = app.add_subcommand(
        "std-monomials", "List or count the standard monomials of a degree");
    add_context_flags(stdmon, opt, true);
    stdmon->add_option("--degree", opt.degree, "Degree r")->capture_default_str();
    stdmon->add_flag("--count", opt.count_only, "Print only the count");
    add_format_flag(stdmon, opt, {"text"});

    CLI::App* decomp = app.add_subcommand(
        "decompose", "Decompose a degree into irreducible Levi constituents");
    add_context_flags(decomp, opt, true);
    add_rq_flag(decomp, opt);
    decomp->add_option("--degree", opt.degree, "Degree r")->capture_default_str();
    add_format_flag(decomp, opt, {"text", "json", "csv"});

    CLI::App* dimcheck = app.add_subcommand(
        "dimcheck", "Compare decomposition totals against monomial counts");
    add_context_flags(dimcheck, opt, false);
    add_rq_flag(dimcheck, opt);
    dimcheck->add_flag("--all-w", opt.all_w, "Sweep every word for this N, d");
    dimcheck->add_option("--max-degree", opt.max_degree, "Check degrees 1..K")
        ->capture_default_str();
    add_format_flag(dimcheck, opt, {"text"});

    CLI::App* spherical = app.add_subcommand(
        "spherical", "Classify multiplicity-freeness of coordinate rings");
    add_context_flags(spherical, opt, false);
    add_rq_flag(spherical, opt);
    spherical->add_flag("--scan", opt.do_scan, "Classify every word for this N, d");
    spherical->add_option("--max-degree", opt.max_degree,
                          "Degree bound for the empirical check")
        ->capture_default_str();
    add_format_flag(spherical, opt, {"text", "csv", "json"});

    CLI::App* branch = app.add_subcommand(
        "branch", "Restrict a degree of the full coordinate ring to a Levi");
    branch->add_option("--blocks", opt.blocks_text, "Block sizes, e.g. 3,3,3")
        ->required();
    branch->add_option("--d", opt.d, "Tuple length d")->required();
    branch->add_option("--degree", opt.degree, "Degree r")->capture_default_str();
    add_format_flag(branch, opt, {"text", "json", "csv"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (heads->parsed()) return run_heads(opt);
        if (hasse->parsed()) return run_hasse(opt);
        if (straight->parsed()) return run_straighten(opt);
        if (stdmon->parsed()) return run_std_monomials(opt);
        if (decomp->parsed()) return run_decompose(opt);
        if (dimcheck->parsed()) return run_dimcheck(opt);
        if (spherical->parsed()) return run_spherical(opt);
        if (branch->parsed()) return run_branch(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
