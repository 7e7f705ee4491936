// hyperfano: command-line front end. Output is line-oriented key=value.
// Exit codes: 0 success / found, 1 not found / Failure, 2 usage or input error.

#include "hyperfano/construct.hpp"
#include "hyperfano/detect.hpp"
#include "hyperfano/error.hpp"
#include "hyperfano/hg3c.hpp"
#include "hyperfano/oracle.hpp"
#include "hyperfano/patterns.hpp"
#include "hyperfano/pipeline.hpp"
#include "hyperfano/witness.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace hf;

constexpr int kFound = 0;
constexpr int kNotFound = 1;
constexpr int kInputError = 2;

VertexSet parse_set(const std::string& text)
{
    VertexSet s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ParseError("empty element in vertex list '" + text + "'");
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad vertex '" + item + "'");
        }
        if (used != item.size() || v < 0 || v >= kMaxVertices) throw ParseError("bad vertex '" + item + "'");
        s.insert(v);
    }
    return s;
}

void print_witness(const Witness& w) { write_witness(std::cout, w); }

struct Globals {
    int threads = 1;
};

// --- gen ----------------------------------------------------------------------

struct GenArgs {
    std::string kind;
    int n = 0;
    int big_n = 0;
    double p = 0.5;
    std::string out;
};

int run_gen(const GenArgs& a)
{
    Coloring c;
    if (a.kind == "lower") c = lower_bound_coloring(a.n).coloring;
    else if (a.kind == "extended") c = extended_lower_bound(a.n).coloring;
    else if (a.kind == "sharp") c = sharpness_coloring(a.n).coloring;
    else {
        // seeded random test data
        if (a.big_n < 3 || a.big_n > kMaxVertices) throw InvalidArgument("gen random: --N must be in 3..64");
        if (!(a.p >= 0 && a.p <= 1)) throw InvalidArgument("gen random: --p must be in [0,1]");
        const char* seed_env = std::getenv("RF_SEED");
        const std::uint64_t seed = seed_env ? std::strtoull(seed_env, nullptr, 10) : 1;
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution red(a.p);
        c = Coloring::from_predicate(a.big_n, [&](Vertex, Vertex, Vertex) { return red(rng); });
    }
    if (a.out.empty()) {
        write_coloring(std::cout, c);
        return kFound;
    }
    save_coloring(a.out, c);
    std::cout << "generated=" << a.kind << "\nN=" << c.n_vertices() << "\nred=" << c.red_count() << "\nout=" << a.out
              << '\n';
    return kFound;
}

// --- detect -------------------------------------------------------------------

struct DetectArgs {
    std::string what;
    std::string in;
    std::string color = "blue";
    std::string pattern;
    int cap = 0;
    int m = 3;
    std::string set_a, set_b;
};

int run_detect(const DetectArgs& a, const Globals& g)
{
    const Coloring c = load_coloring(a.in);
    if (a.what == "fano" || a.what == "pattern") {
        const Pattern p = a.what == "fano" ? fano_lines() : pattern_by_name(a.pattern);
        SearchStats stats;
        const auto w = find_mono(c, p, parse_color(a.color), SearchOptions{g.threads, 0}, &stats);
        std::cout << "pattern=" << p.name << "\ncolor=" << a.color << "\nfound=" << (w ? "true" : "false") << '\n';
        if (!w) return kNotFound;
        print_witness(*w);
        return kFound;
    }
    if (a.what == "tightpath") {
        const int cap = a.cap > 0 ? a.cap : c.n_vertices();
        const TightPathResult r = longest_red_tight_path(c, cap);
        std::cout << "longest=" << r.length << "\nexact=" << (r.exact ? "true" : "false") << '\n';
        if (r.witness) print_witness(*r.witness);
        return kFound;
    }
    if (a.what == "clique") {
        const auto s = find_red_clique(c, a.m);
        std::cout << "m=" << a.m << "\nfound=" << (s ? "true" : "false") << '\n';
        if (!s) return kNotFound;
        std::cout << "clique=" << s->to_string() << '\n';
        return kFound;
    }
    const VertexSet A = parse_set(a.set_a), B = parse_set(a.set_b);
    if (a.what == "butterflies") {
        const auto all = all_butterflies(c, A, B);
        const auto disjoint = max_disjoint_butterflies(c, A, B);
        std::cout << "butterflies=" << all.size() << "\ndisjoint=" << disjoint.size() << '\n';
        for (const Butterfly& b : disjoint) {
            const auto p = b.as_path();
            std::cout << "butterfly=" << p[0] << ',' << p[1] << ',' << p[2] << ',' << p[3] << '\n';
        }
        return all.empty() ? kNotFound : kFound;
    }
    // tripletriangle
    const auto t = find_triple_triangle(c, A, B);
    std::cout << "found=" << (t ? "true" : "false") << '\n';
    if (!t) return kNotFound;
    std::cout << "quad=" << t->w << ',' << t->x << ',' << t->y << ',' << t->z << "\napex=" << t->v
              << "\nquad_in=" << (t->quad_in_first ? "A" : "B") << '\n';
    return kFound;
}

// --- verify -------------------------------------------------------------------

struct VerifyArgs {
    std::string in;
    bool no_blue_fano = false;
    std::vector<int> no_red_tightpath;
    std::vector<std::string> no_red_pattern;
    std::string witness;
};

int run_verify(const VerifyArgs& a, const Globals& g)
{
    const Coloring c = load_coloring(a.in);
    if (!a.witness.empty()) {
        std::ifstream f(a.witness);
        if (!f) throw ParseError("cannot open witness file " + a.witness);
        const Witness w = read_witness(f);
        const bool ok = verify(c, w);
        std::cout << "witness=" << w.pattern.name << "\nwitness_valid=" << (ok ? "true" : "false") << '\n';
        return ok ? kFound : kNotFound;
    }
    std::vector<std::pair<Pattern, Color>> claims;
    if (a.no_blue_fano) claims.emplace_back(fano_lines(), Color::Blue);
    for (int n : a.no_red_tightpath) claims.emplace_back(tight_path(n), Color::Red);
    for (const std::string& name : a.no_red_pattern) claims.emplace_back(pattern_by_name(name), Color::Red);
    if (claims.empty()) throw InvalidArgument("verify: no claim given");
    for (const auto& [p, col] : claims) {
        SearchStats stats;
        const auto w = find_mono(c, p, col, SearchOptions{g.threads, 0}, &stats);
        std::cout << "claim=no_" << to_string(col) << '_' << p.name << '\n';
        if (w) {
            std::cout << "holds=false\n";
            print_witness(*w);
            return kNotFound;
        }
        std::cout << "holds=true\nsearched_nodes=" << stats.nodes << '\n';
    }
    std::cout << "verified=true\n";
    return kFound;
}

// --- pipeline -----------------------------------------------------------------

struct PipelineArgs {
    std::string in;
    int target_n = 0;
    int m = 0;
    int threshold = 0;
    double eps = 0.1;
    std::string report;
};

int run_pipeline_cmd(const PipelineArgs& a, const Globals& g)
{
    const Coloring c = load_coloring(a.in);
    PipelineParams p;
    p.target_n = a.target_n;
    p.m = a.m;
    p.butterfly_threshold = a.threshold;
    p.eps = a.eps;
    p.threads = g.threads;
    const PipelineReport r = run_pipeline(c, p);
    const std::string text = r.to_text();
    if (!a.report.empty()) {
        std::ofstream f(a.report);
        if (!f) throw ParseError("cannot write report " + a.report);
        f << text;
    }
    std::cout << "outcome=" << to_string(r.outcome) << '\n';
    if (r.failure) std::cout << "failure_stage=" << r.failure->stage << "\nfailure_inequality=" << r.failure->inequality << '\n';
    if (r.witness) {
        std::cout << "witness_valid=" << (verify(c, *r.witness) ? "true" : "false") << '\n';
        print_witness(*r.witness);
    }
    return r.outcome == PipelineOutcome::Failure ? kNotFound : kFound;
}

// --- oracle -------------------------------------------------------------------

struct OracleArgs {
    std::string what;
    std::string in;
    std::string color = "blue";
    int n = 0;
    std::string red, blue;
    int big_n = 0;
    std::uint64_t max_nodes = OracleBudget{}.max_subsets;
    double timeout = OracleBudget{}.timeout_seconds;
};

int run_oracle(const OracleArgs& a, const Globals& g)
{
    const OracleBudget budget{a.max_nodes, a.timeout};
    if (a.what == "ramsey") {
        const RamseyResult r = ramsey_verify_tiny(pattern_by_name(a.red), pattern_by_name(a.blue), a.big_n, budget);
        std::cout << "verdict=" << to_string(r.verdict) << "\nnodes=" << r.nodes << '\n';
        if (r.certificate) {
            std::cout << "certificate:\n";
            write_coloring(std::cout, *r.certificate);
        }
        return r.verdict == RamseyVerdict::BudgetExceeded ? kNotFound : kFound;
    }
    const Coloring c = load_coloring(a.in);
    if (a.what == "count-fano") {
        std::cout << "color=" << a.color << "\nfano_copies=" << count_fano_copies(c, parse_color(a.color), budget, g.threads)
                  << '\n';
        return kFound;
    }
    const bool exists = exhaustive_tight_path(c, a.n, budget);
    std::cout << "n=" << a.n << "\nred_tightpath=" << (exists ? "true" : "false") << '\n';
    return exists ? kFound : kNotFound;
}

// --- bound --------------------------------------------------------------------

struct BoundArgs {
    std::string what;
    int s = 0, t = 0;
    double C = 1.0;
    double log_base = 0; ///< 0: natural logarithm
    long long v = 0, chi = 0, sigma = 0;
    double n = 0, eps = 0.1;
};

int run_bound(const BoundArgs& a)
{
    std::cout.precision(12);
    if (a.what == "hgood") {
        std::cout << "hgood=" << h_good_bound(a.v, a.chi, a.sigma) << '\n';
    } else if (a.what == "cfs") {
        const double base = a.log_base > 0 ? a.log_base : std::exp(1.0);
        std::cout << "log2_bound=" << cfs_bound_log2(a.s, a.t, a.C, base) << "\nbound=" << cfs_bound(a.s, a.t, a.C, base)
                  << '\n';
    } else {
        const BlobSize b = m_of_n(a.n, a.eps);
        std::cout << "m=" << b.m << "\nraw=" << b.raw << "\ninequality_holds=" << (b.inequality_holds ? "true" : "false")
                  << '\n';
    }
    return kFound;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hyperfano: two-colored complete 3-uniform hypergraphs, Fano planes and red tight paths"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--threads", g.threads, "worker threads for detectors and oracles")->check(CLI::Range(1, 256));

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "write a coloring in HG3C format");
    gen_cmd->add_option("kind", gen.kind)->required()->check(CLI::IsMember({"lower", "extended", "sharp", "random"}));
    gen_cmd->add_option("--n", gen.n, "path length parameter n");
    gen_cmd->add_option("--N", gen.big_n, "vertex count (random)");
    gen_cmd->add_option("--p", gen.p, "red probability (random)");
    gen_cmd->add_option("--out", gen.out, "output file (stdout if omitted)");

    DetectArgs det;
    auto* det_cmd = app.add_subcommand("detect", "run a structure detector");
    det_cmd->add_option("what", det.what)
        ->required()
        ->check(CLI::IsMember({"fano", "pattern", "tightpath", "clique", "butterflies", "tripletriangle"}));
    det_cmd->add_option("--in", det.in)->required();
    det_cmd->add_option("--color", det.color)->check(CLI::IsMember({"red", "blue"}));
    det_cmd->add_option("--pattern", det.pattern);
    det_cmd->add_option("--cap", det.cap);
    det_cmd->add_option("--m", det.m);
    det_cmd->add_option("--set-a", det.set_a);
    det_cmd->add_option("--set-b", det.set_b);

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "check absence claims, or re-verify a witness");
    ver_cmd->add_option("--in", ver.in)->required();
    ver_cmd->add_flag("--no-blue-fano", ver.no_blue_fano);
    ver_cmd->add_option("--no-red-tightpath", ver.no_red_tightpath);
    ver_cmd->add_option("--no-red-pattern", ver.no_red_pattern);
    ver_cmd->add_option("--witness", ver.witness, "witness file to re-verify");

    PipelineArgs pip;
    std::string pip_action;
    auto* pip_cmd = app.add_subcommand("pipeline", "red tight path extraction");
    pip_cmd->add_option("action", pip_action)->required()->check(CLI::IsMember({"run"}));
    pip_cmd->add_option("--in", pip.in)->required();
    pip_cmd->add_option("--target-n", pip.target_n)->required();
    pip_cmd->add_option("--m", pip.m);
    pip_cmd->add_option("--butterfly-threshold", pip.threshold);
    pip_cmd->add_option("--eps", pip.eps);
    pip_cmd->add_option("--report", pip.report);

    OracleArgs ora;
    auto* ora_cmd = app.add_subcommand("oracle", "brute-force reference computations");
    ora_cmd->add_option("what", ora.what)->required()->check(CLI::IsMember({"count-fano", "tightpath", "ramsey"}));
    ora_cmd->add_option("--in", ora.in);
    ora_cmd->add_option("--color", ora.color)->check(CLI::IsMember({"red", "blue"}));
    ora_cmd->add_option("--n", ora.n);
    ora_cmd->add_option("--red", ora.red);
    ora_cmd->add_option("--blue", ora.blue);
    ora_cmd->add_option("--N", ora.big_n);
    ora_cmd->add_option("--max-nodes", ora.max_nodes);
    ora_cmd->add_option("--timeout", ora.timeout);

    BoundArgs bnd;
    auto* bnd_cmd = app.add_subcommand("bound", "numeric formulas");
    bnd_cmd->add_option("what", bnd.what)->required()->check(CLI::IsMember({"cfs", "hgood", "mofn"}));
    bnd_cmd->add_option("--s", bnd.s);
    bnd_cmd->add_option("--t", bnd.t);
    bnd_cmd->add_option("--C", bnd.C);
    bnd_cmd->add_option("--log-base", bnd.log_base);
    bnd_cmd->add_option("--v", bnd.v);
    bnd_cmd->add_option("--chi", bnd.chi);
    bnd_cmd->add_option("--sigma", bnd.sigma);
    bnd_cmd->add_option("--n", bnd.n);
    bnd_cmd->add_option("--eps", bnd.eps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (det_cmd->parsed()) return run_detect(det, g);
        if (ver_cmd->parsed()) return run_verify(ver, g);
        if (pip_cmd->parsed()) return run_pipeline_cmd(pip, g);
        if (ora_cmd->parsed()) {
            if (ora.what != "ramsey" && ora.in.empty()) throw InvalidArgument("oracle: --in is required");
            return run_oracle(ora, g);
        }
        return run_bound(bnd);
    } catch (const ParseError& e) {
        std::cerr << "error=" << e.what() << '\n';
        return kInputError;
    } catch (const InvalidArgument& e) {
        std::cerr << "error=" << e.what() << '\n';
        return kInputError;
    } catch (const BudgetExceeded& e) {
        std::cout << "budget_exceeded=true\n";
        std::cerr << "error=" << e.what() << '\n';
        return kNotFound;
    } catch (const NotFound& e) {
        std::cerr << "error=" << e.what() << '\n';
        return kNotFound;
    }
}
