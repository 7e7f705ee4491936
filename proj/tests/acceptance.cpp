// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "support.hpp"

#include "hyperfano/construct.hpp"
#include "hyperfano/detect.hpp"
#include "hyperfano/error.hpp"
#include "hyperfano/hg3c.hpp"
#include "hyperfano/oracle.hpp"
#include "hyperfano/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>

#include <sys/wait.h>

#ifndef HYPERFANO_CLI
#error "HYPERFANO_CLI must name the command-line binary"
#endif
#ifndef ACCEPTANCE_WORKDIR
#error "ACCEPTANCE_WORKDIR must name a scratch directory"
#endif

namespace fs = std::filesystem;
using namespace hf;
using hf::test::Rng;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects disagreements; the first few are echoed for diagnosis.
struct Tally {
    long checks = 0;
    long bad = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (ok) return;
        ++bad;
        if (notes.size() < 5) notes.push_back(what);
    }
};

std::uint64_t base_seed()
{
    const char* s = std::getenv("RF_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 20240601ULL;
}

const fs::path& workdir()
{
    static const fs::path dir = [] {
        fs::path d = fs::path(ACCEPTANCE_WORKDIR);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run_cli(const std::string& args, const fs::path& out)
{
    const std::string cmd = std::string("\"") + HYPERFANO_CLI + "\" " + args + " > \"" + out.string() + "\" 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

Coloring cli_gen(const std::string& kind, int n)
{
    const fs::path file = workdir() / (kind + "_" + std::to_string(n) + ".hg3c");
    const fs::path log = workdir() / "gen.log";
    if (run_cli("gen " + kind + " --n " + std::to_string(n) + " --out \"" + file.string() + "\"", log) != 0)
        throw std::runtime_error("gen " + kind + " failed: " + slurp(log));
    return load_coloring(file.string());
}

/// Round-trips the witness through its text form and verifies it naively.
bool witness_reverifies(const Coloring& c, const Witness& w)
{
    const Witness back = witness_from_string(witness_to_string(w));
    return back == w && verify(c, back) && test::naive_check(c, back.pattern, back.host_map, back.color);
}

struct Criterion {
    int id;
    std::string title;
    std::function<std::string(bool&)> run; ///< returns a detail string, sets pass
};

// --- 1 ------------------------------------------------------------------------
std::string ac1(bool& pass)
{
    const auto t0 = Clock::now();
    Tally t;
    for (int n = 4; n <= 12; ++n) {
        const Coloring c = cli_gen("lower", n);
        t.expect(c.n_vertices() == 2 * n - 2, "N at n=" + std::to_string(n));
        t.expect(count_fano_copies(c, Color::Blue) == 0, "blue fano count at n=" + std::to_string(n));
        const TightPathResult r = longest_red_tight_path(c, n);
        t.expect(r.length == n - 1 && r.exact, "longest path at n=" + std::to_string(n));
        t.expect(r.witness && witness_reverifies(c, *r.witness), "path witness at n=" + std::to_string(n));
    }
    const double secs = seconds_since(t0);
    pass = t.bad == 0 && secs < 60;
    std::ostringstream s;
    s << "n=4..12 checks=" << t.checks << " bad=" << t.bad << " seconds=" << secs;
    for (const auto& note : t.notes) s << " [" << note << "]";
    return s.str();
}

// --- 2 ------------------------------------------------------------------------
std::string ac2(bool& pass)
{
    const auto t0 = Clock::now();
    Tally t;
    for (int n : {6, 9, 12}) {
        const Coloring c = cli_gen("sharp", n);
        t.expect(count_fano_copies(c, Color::Blue) == 0, "blue fano at n=" + std::to_string(n));
        SearchStats stats;
        t.expect(!find_mono(c, p_prime(n), Color::Red, {}, &stats), "red pprime at n=" + std::to_string(n));
    }
    // the small case once more by the brute-force oracle
    t.expect(!exhaustive_embed(sharpness_coloring(6).coloring, p_prime(6), Color::Red), "oracle pprime n=6");
    const double secs = seconds_since(t0);
    pass = t.bad == 0 && secs < 600;
    std::ostringstream s;
    s << "n=6,9,12 checks=" << t.checks << " bad=" << t.bad << " seconds=" << secs;
    return s.str();
}

// --- 3 ------------------------------------------------------------------------
std::string ac3(bool& pass)
{
    const auto t0 = Clock::now();
    Tally t;
    std::vector<Vertex> perm{0, 1, 2, 3, 4, 5, 6};
    int labelings = 0;
    do {
        const auto g = gadget_fano_7(perm[0], perm[1], perm[2], perm[3], perm[4], perm[5], perm[6]);
        t.expect(is_fano({g.begin(), g.end()}), "labeling");
        ++labelings;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rng rng(base_seed() + 3);
    for (int i = 0; i < 200; ++i) {
        auto p = test::random_permutation(rng, kMaxVertices);
        const auto g = gadget_fano_7(p[0], p[1], p[2], p[3], p[4], p[5], p[6]);
        t.expect(is_fano({g.begin(), g.end()}) && test::pair_coverage_fano({g.begin(), g.end()}), "random set");
    }
    const double secs = seconds_since(t0);
    pass = t.bad == 0 && labelings == 5040 && secs < 1;
    std::ostringstream s;
    s << "labelings=" << labelings << " random_sets=200 bad=" << t.bad << " seconds=" << secs;
    return s.str();
}

// --- 4 ------------------------------------------------------------------------
std::string ac4(bool& pass)
{
    const auto t0 = Clock::now();
    const auto copies = count_fano_copies(Coloring::all(7, Color::Blue), Color::Blue);
    const TwoColoringScan scan = scan_fano_two_colorings();
    const bool colorable = fano_two_colorable();
    const double secs = seconds_since(t0);
    pass = copies == 30 && !colorable && scan.bipartitions_checked == 128 && scan.proper_found == 0 && secs < 1;
    std::ostringstream s;
    s << "copies=" << copies << " bipartitions=" << scan.bipartitions_checked << " proper=" << scan.proper_found
      << " two_colorable=" << (colorable ? "true" : "false") << " seconds=" << secs;
    return s.str();
}

// --- 5 ------------------------------------------------------------------------
std::string ac5(bool& pass)
{
    Tally t;
    Rng rng(base_seed() + 5);
    long embeds = 0;
    for (int round = 0; round < 500; ++round) {
        const int N = rng.range(3, 10);
        const double p = rng.unit();
        const Coloring c = test::random_coloring(rng, N, p);
        std::vector<Pattern> patterns{fano_lines(), p_prime(6)};
        for (int n = 3; n <= 8; ++n) patterns.push_back(tight_path(n));
        for (int n = 4; n <= 8; ++n) patterns.push_back(tight_cycle(n));
        for (const Pattern& pat : patterns)
            for (Color col : {Color::Red, Color::Blue}) {
                const auto fast = find_mono(c, pat, col);
                const auto slow = exhaustive_embed(c, pat, col);
                ++embeds;
                t.expect(fast == slow, "round " + std::to_string(round) + " " + pat.name + " " +
                                           std::string(to_string(col)));
                if (fast) t.expect(witness_reverifies(c, *fast), "witness " + pat.name);
            }
        const TightPathResult r = longest_red_tight_path(c, N);
        if (r.length >= 3) t.expect(exhaustive_tight_path(c, r.length), "longest exists, round " + std::to_string(round));
        if (r.length + 1 <= N && r.length + 1 >= 3)
            t.expect(!exhaustive_tight_path(c, r.length + 1), "longest is maximal, round " + std::to_string(round));
        if (r.length < 3) t.expect(c.red_count() == 0, "no path but a red triple, round " + std::to_string(round));
    }
    pass = t.bad == 0;
    std::ostringstream s;
    s << "colorings=500 embed_pairs=" << embeds << " checks=" << t.checks << " disagreements=" << t.bad;
    for (const auto& note : t.notes) s << " [" << note << "]";
    return s.str();
}

// --- 6 ------------------------------------------------------------------------
std::string ac6(bool& pass)
{
    Tally t;
    Rng rng(base_seed() + 6);
    int found = 0;
    for (int round = 0; round < 200; ++round) {
        const int na = rng.range(1, 8), nb = rng.range(1, 8), tt = rng.range(1, 3);
        const VertexSet A = VertexSet::range(0, na), B = VertexSet::range(na, na + nb);
        Digraph d;
        d.vertices = A | B;
        const double p = 0.3 + 0.7 * rng.unit();
        for (Vertex a : A)
            for (Vertex b : B)
                if (rng.chance(p)) d.add_arc(a, b);
        const auto fast = find_directed_ktt(d, A, B, tt);
        const auto slow = exhaustive_directed_ktt(d, A, B, tt);
        t.expect(fast.has_value() == slow.has_value(), "round " + std::to_string(round));
        if (fast) {
            ++found;
            bool ok = fast->first.size() == tt && fast->second.size() == tt;
            for (Vertex s : fast->first)
                for (Vertex u : fast->second) ok = ok && d.has_arc(s, u);
            t.expect(ok, "detector witness, round " + std::to_string(round));
        }
    }
    pass = t.bad == 0;
    std::ostringstream s;
    s << "digraphs=200 found=" << found << " disagreements=" << t.bad;
    for (const auto& note : t.notes) s << " [" << note << "]";
    return s.str();
}

// --- 7 ------------------------------------------------------------------------
std::string ac7(bool& pass)
{
    struct Instance {
        std::string name;
        Coloring c;
        int target;
    };
    std::vector<Instance> corpus;
    for (int n = 4; n <= 12; ++n) corpus.push_back({"lower" + std::to_string(n), lower_bound_coloring(n).coloring, n});
    for (int n = 6; n <= 10; ++n) corpus.push_back({"extended" + std::to_string(n), extended_lower_bound(n).coloring, n});
    for (int n : {6, 9, 12}) {
        const Coloring s = sharpness_coloring(n).coloring;
        corpus.push_back({"sharp" + std::to_string(n), s, n});
        corpus.push_back({"sharp_minus" + std::to_string(n), s.induced(s.all_vertices() - VertexSet{2 * n - 1}), n});
    }
    Rng rng(base_seed() + 7);
    const double probs[] = {0.5, 0.7, 0.85, 0.95, 0.99};
    for (int i = 0; i < 100; ++i) {
        const int N = (i % 3 == 0) ? 21 : (i % 3 == 1 ? 31 : 41);
        const double p = probs[(i / 3) % 5];
        corpus.push_back({"random" + std::to_string(i), test::random_coloring(rng, N, p), (N + 1) / 2});
    }

    Tally t;
    int red = 0, blue = 0, failure = 0;
    std::map<std::string, int> failure_stages;
    double worst = 0;
    for (const Instance& inst : corpus) {
        PipelineParams params;
        params.target_n = inst.target;
        const auto t0 = Clock::now();
        const PipelineReport r = run_pipeline(inst.c, params);
        worst = std::max(worst, seconds_since(t0));
        switch (r.outcome) {
        case PipelineOutcome::RedPath:
            ++red;
            t.expect(r.witness && r.witness->pattern == tight_path(inst.target) && witness_reverifies(inst.c, *r.witness),
                     inst.name + " red witness");
            break;
        case PipelineOutcome::BlueFano:
            ++blue;
            t.expect(r.witness && r.witness->pattern == fano_lines() && r.witness->color == Color::Blue &&
                         witness_reverifies(inst.c, *r.witness),
                     inst.name + " blue witness");
            break;
        case PipelineOutcome::Failure:
            ++failure;
            t.expect(r.failure && !r.failure->stage.empty() && !r.failure->inequality.empty() && !r.witness,
                     inst.name + " failure record");
            if (r.failure) ++failure_stages[r.failure->stage];
            break;
        }
    }

    // the same through the command line, re-verified from the emitted witness text
    int cli_runs = 0;
    for (const Instance& inst : corpus) {
        if (cli_runs >= 12) break;
        if (inst.name.rfind("random", 0) == 0 && inst.name != "random0" && inst.name != "random1" &&
            inst.name != "random2" && inst.name != "random14")
            continue;
        ++cli_runs;
        const fs::path in = workdir() / ("ac7_" + inst.name + ".hg3c");
        const fs::path out = workdir() / ("ac7_" + inst.name + ".out");
        save_coloring(in.string(), inst.c);
        const int rc = run_cli("pipeline run --in \"" + in.string() + "\" --target-n " + std::to_string(inst.target), out);
        const std::string text = slurp(out);
        const auto at = text.find("WITNESS ");
        if (rc == 0) {
            bool ok = at != std::string::npos;
            if (ok) {
                try {
                    ok = verify(inst.c, witness_from_string(text.substr(at)));
                } catch (const std::exception&) {
                    ok = false;
                }
            }
            t.expect(ok, inst.name + " cli witness");
        } else {
            t.expect(rc == 1 && text.find("failure_stage=") != std::string::npos &&
                         text.find("failure_inequality=") != std::string::npos,
                     inst.name + " cli failure record rc=" + std::to_string(rc));
        }
    }

    pass = t.bad == 0;
    std::ostringstream s;
    s << "instances=" << corpus.size() << " red_path=" << red << " blue_fano=" << blue << " failure=" << failure
      << " unverifiable=" << t.bad << " cli_runs=" << cli_runs << " worst_seconds=" << worst;
    for (const auto& [stage, k] : failure_stages) s << " stage:" << stage << "=" << k;
    for (const auto& note : t.notes) s << " [" << note << "]";
    return s.str();
}

// --- 8 ------------------------------------------------------------------------
std::string ac8(bool& pass)
{
    Tally t;
    double worst = 0;
    for (int n = 6; n <= 10; ++n) {
        const Coloring c = cli_gen("extended", n);
        PipelineParams params;
        params.target_n = n;
        const auto t0 = Clock::now();
        const PipelineReport r = run_pipeline(c, params);
        const double secs = seconds_since(t0);
        worst = std::max(worst, secs);
        bool two_path = false;
        for (const StageRecord& s : r.trace) two_path |= s.stage.rfind("two_path", 0) == 0;
        t.expect(r.outcome == PipelineOutcome::RedPath && r.witness && r.witness->host_map.size() == std::size_t(n) &&
                     witness_reverifies(c, *r.witness),
                 "n=" + std::to_string(n) + " outcome=" + to_string(r.outcome));
        t.expect(two_path, "n=" + std::to_string(n) + " two-path branch");
        t.expect(secs < 60, "n=" + std::to_string(n) + " runtime");
    }
    pass = t.bad == 0;
    std::ostringstream s;
    s << "n=6..10 checks=" << t.checks << " bad=" << t.bad << " worst_seconds=" << worst;
    for (const auto& note : t.notes) s << " [" << note << "]";
    return s.str();
}

// --- 9 ------------------------------------------------------------------------

/// Drops lines that count search effort; those may vary with the worker count.
std::string verdict_lines(const std::string& text)
{
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        if (line.rfind("searched_nodes=", 0) == 0 || line.rfind("nodes=", 0) == 0) continue;
        out += line;
        out += '\n';
    }
    return out;
}

std::string ac9(bool& pass)
{
    const fs::path dir = workdir() / "ac9";
    fs::create_directories(dir);
    std::vector<std::pair<std::string, std::string>> files;
    for (int n : {5, 7}) files.emplace_back("lower" + std::to_string(n), "lower --n " + std::to_string(n));
    for (int n : {6, 8}) files.emplace_back("extended" + std::to_string(n), "extended --n " + std::to_string(n));
    files.emplace_back("sharp6", "sharp --n 6");
    files.emplace_back("sharp9", "sharp --n 9");
    files.emplace_back("rand21", "random --N 21 --p 0.9");
    files.emplace_back("rand31", "random --N 31 --p 0.5");
    files.emplace_back("rand41", "random --N 41 --p 0.97");

    std::vector<std::string> battery;
    for (const auto& [name, gen] : files) {
        const std::string f = "\"" + (dir / (name + ".hg3c")).string() + "\"";
        battery.push_back("gen " + gen);
        battery.push_back("detect fano --in " + f);
        battery.push_back("detect fano --color red --in " + f);
        battery.push_back("detect tightpath --in " + f);
        battery.push_back("detect clique --m 4 --in " + f);
        battery.push_back("verify --in " + f + " --no-blue-fano --no-red-tightpath 8");
        battery.push_back("pipeline run --in " + f + " --target-n 0");
        battery.push_back("oracle count-fano --in " + f);
    }
    battery.push_back("detect butterflies --in \"" + (dir / "sharp6.hg3c").string() + "\" --set-a 0,1,2,3 --set-b 4,5,6,7");
    battery.push_back("detect tripletriangle --in \"" + (dir / "sharp6.hg3c").string() + "\" --set-a 0,1,2,3 --set-b 4,5,6,7");
    battery.push_back("oracle tightpath --in \"" + (dir / "lower7.hg3c").string() + "\" --n 6");
    battery.push_back("oracle ramsey --red tightpath:4 --blue fano --N 6");
    battery.push_back("bound hgood --v 10 --chi 3 --sigma 1");
    battery.push_back("bound cfs --s 4 --t 2 --C 1");
    battery.push_back("bound mofn --n 1000000 --eps 0.1");
    battery.push_back("detect nonsense --in x");

    // materialize the inputs (random ones use the seeded generator)
    for (const auto& [name, gen] : files) {
        const fs::path log = dir / "gen.log";
        run_cli("gen " + gen + " --out \"" + (dir / (name + ".hg3c")).string() + "\"", log);
    }

    auto run_all = [&](int threads, std::vector<std::pair<int, std::string>>& results) {
        for (std::size_t i = 0; i < battery.size(); ++i) {
            const fs::path out = dir / ("out_" + std::to_string(threads) + "_" + std::to_string(i) + ".txt");
            const int rc = run_cli("--threads " + std::to_string(threads) + " " + battery[i], out);
            results.emplace_back(rc, slurp(out));
        }
    };
    std::vector<std::pair<int, std::string>> a, b, c;
    run_all(1, a);
    run_all(1, b);
    run_all(4, c);

    int identical = 0, verdicts = 0;
    std::vector<std::string> notes;
    for (std::size_t i = 0; i < battery.size(); ++i) {
        if (a[i] == b[i]) ++identical;
        else if (notes.size() < 3) notes.push_back("threads1 differs: " + battery[i]);
        if (a[i].first == c[i].first && verdict_lines(a[i].second) == verdict_lines(c[i].second)) ++verdicts;
        else if (notes.size() < 3) notes.push_back("threads4 differs: " + battery[i]);
    }
    const int n = static_cast<int>(battery.size());
    pass = identical == n && verdicts == n;
    std::ostringstream s;
    s << "commands=" << n << " byte_identical=" << identical << " same_verdicts_threads4=" << verdicts;
    for (const auto& note : notes) s << " [" << note << "]";
    return s.str();
}

// --- 10 -----------------------------------------------------------------------
std::string ac10(bool& pass)
{
    long points = 0, bad = 0;
    auto check = [&](std::int64_t n) {
        ++points;
        bad += h_good_bound(n, 3, 1) != 2 * n - 1;
    };
    for (std::int64_t n = 1; n <= 1000; ++n) check(n);
    for (std::int64_t n = 1001; n <= 1'000'000; n += 997) check(n);
    check(999'999);
    check(1'000'000);
    pass = bad == 0;
    std::ostringstream s;
    s << "points=" << points << " mismatches=" << bad;
    return s.str();
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "lower-bound construction", ac1},
        {2, "sharpness construction", ac2},
        {3, "fano gadget", ac3},
        {4, "fano facts", ac4},
        {5, "detector/oracle equivalence", ac5},
        {6, "directed K_{t,t}", ac6},
        {7, "pipeline soundness", ac7},
        {8, "pipeline on structured input", ac8},
        {9, "determinism", ac9},
        {10, "h-good calculator", ac10},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        bool pass = false;
        std::string detail;
        const auto t0 = Clock::now();
        try {
            detail = c.run(pass);
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << " AC" << c.id << " " << c.title << " :: " << detail
                  << " total_seconds=" << seconds_since(t0) << std::endl;
    }
    std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
    return failed == 0 ? 0 : 1;
}
