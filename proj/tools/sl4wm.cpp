// Command-line front end: partition / multiplicity queries, alternation-set
// tools, batch exports, verification suites and the closed-vs-sum benchmark.

#include "sl4/alternation.hpp"
#include "sl4/exports.hpp"
#include "sl4/qmult.hpp"
#include "sl4/qpartition.hpp"
#include "sl4/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using sl4::AltSet;
using sl4::AlphaTriple;
using sl4::FWeight;
using sl4::LatticeWindow;
using sl4::QPoly;
using sl4::RootCoords;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitIo = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "a:b" -> [a, b], inclusive
std::pair<long long, long long> parse_range(const std::string& s) {
    const auto pos = s.find(':');
    if (pos == std::string::npos)
        throw UsageError("expected RANGE of the form a:b, got '" + s + "'");
    try {
        const long long a = std::stoll(s.substr(0, pos));
        const long long b = std::stoll(s.substr(pos + 1));
        return {a, b};
    } catch (const std::exception&) {
        throw UsageError("bad range '" + s + "'");
    }
}

FWeight parse_mu(const std::string& s) {
    long long m = 0, n = 0, k = 0;
    char extra = 0;
    if (std::sscanf(s.c_str(), "%lld,%lld,%lld%c", &m, &n, &k, &extra) != 3)
        throw UsageError("expected MU of the form m,n,k, got '" + s + "'");
    return {m, n, k};
}

ordered_json poly_json(const QPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(ordered_json{{"exp", e}, {"coeff", c.str()}});
    return ordered_json{{"display", p.str()}, {"terms", terms}};
}

ordered_json altset_json(const AltSet& s) {
    ordered_json elems = ordered_json::array();
    for (int i = 0; i < sl4::kWeylOrder; ++i)
        if (s.contains(i)) elems.push_back(sl4::all_elements()[i].word);
    return elems;
}

// --- subcommand state ----------------------------------------------------

struct PartitionArgs {
    long long m = 0, n = 0, k = 0;
    bool q1 = false;
    std::string oracle = "closed";
    std::string format = "human";
};

struct MultArgs {
    long long m = 0, n = 0, k = 0, c1 = 0, c2 = 0, c3 = 0;
    bool direct = false;
    bool q1 = false;
    std::string format = "human";
};

struct AltsetArgs {
    long long m = 0, n = 0, k = 0, c1 = 0, c2 = 0, c3 = 0;
    std::string format = "human";
};

struct ClassifyArgs {
    long long x = 0, y = 0, z = 0;
    std::string format = "human";
};

struct WindowArgs {
    std::string x = "-20:20", y = "-20:20", z = "-20:20";
    std::string mu = "0,0,0";
    std::string format = "human";
    std::string out;
    long long mu_max = 4;
    std::vector<std::string> mu_list;
    int threads = 0;
};

struct VerifyArgs {
    std::string suite = "all";
    long long max_partition = 12;
    long long max_mult = 6;
    long long max_override = -1;
    int threads = 0;
};

struct BenchArgs {
    std::string range = "60:70";
    std::vector<std::string> engines = {"closed", "sum"};
};

void require_format(const std::string& fmt,
                    std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (fmt == a) return;
    throw UsageError("unsupported --format '" + fmt + "' for this command");
}

LatticeWindow window_from(const WindowArgs& w) {
    LatticeWindow win;
    std::tie(win.x0, win.x1) = parse_range(w.x);
    std::tie(win.y0, win.y1) = parse_range(w.y);
    std::tie(win.z0, win.z1) = parse_range(w.z);
    if (!win.valid()) throw UsageError("empty window range");
    return win;
}

int run_partition(const PartitionArgs& a) {
    require_format(a.format, {"human", "json"});
    const AlphaTriple xi{a.m, a.n, a.k};
    QPoly p;
    if (a.oracle == "closed") p = sl4::closed_qpartition(xi);
    else if (a.oracle == "sum") p = sl4::oracle_triple_sum(xi);
    else if (a.oracle == "enum") p = sl4::oracle_vector_partitions(xi);
    else throw UsageError("unknown engine '" + a.oracle + "'");

    if (a.format == "json") {
        ordered_json j;
        j["xi"] = ordered_json{{"m", a.m}, {"n", a.n}, {"k", a.k}};
        j["engine"] = a.oracle;
        j["poly"] = poly_json(p);
        j["q1"] = p.eval_at_one().str();
        std::cout << j.dump(2) << "\n";
    } else if (a.q1) {
        std::cout << p.eval_at_one().str() << "\n";
    } else {
        std::cout << p.str() << "\n";
    }
    return kExitOk;
}

int run_mult(const MultArgs& a) {
    require_format(a.format, {"human", "json"});
    const FWeight lam{a.m, a.n, a.k};
    const FWeight mu{a.c1, a.c2, a.c3};

    QPoly poly;
    std::string case_name;
    if (a.direct) {
        poly = sl4::mq_direct(lam, mu);
        case_name = "direct";
    } else {
        if (!lam.dominant() || !mu.dominant()) {
            std::cerr << "error: weights must be dominant for the closed "
                         "formula (pass --direct to lift the restriction)\n";
            return kExitPrecondition;
        }
        sl4::MqResult r = sl4::mq_closed_case(lam, mu);
        poly = std::move(r.poly);
        case_name = r.case_name;
    }
    const AltSet alt = sl4::altset(lam, mu);

    if (a.format == "json") {
        ordered_json j;
        j["lambda"] = ordered_json{{"m", a.m}, {"n", a.n}, {"k", a.k}};
        j["mu"] = ordered_json{{"m", a.c1}, {"n", a.c2}, {"k", a.c3}};
        j["mq"] = poly_json(poly);
        j["multiplicity"] = poly.eval_at_one().str();
        j["case"] = case_name;
        j["altset"] = altset_json(alt);
        std::cout << j.dump(2) << "\n";
    } else if (a.q1) {
        std::cout << poly.eval_at_one().str() << "\n";
    } else {
        std::cout << "m_q = " << poly.str() << "\n";
        std::cout << "case: " << case_name << "\n";
        std::cout << "A = " << alt.str() << "\n";
    }
    return kExitOk;
}

int run_altset(const AltsetArgs& a) {
    require_format(a.format, {"human", "json"});
    const FWeight lam{a.m, a.n, a.k};
    const FWeight mu{a.c1, a.c2, a.c3};
    const AltSet s = sl4::altset(lam, mu);
    if (a.format == "json") {
        ordered_json j;
        j["lambda"] = ordered_json{{"m", a.m}, {"n", a.n}, {"k", a.k}};
        j["mu"] = ordered_json{{"m", a.c1}, {"n", a.c2}, {"k", a.c3}};
        j["elements"] = altset_json(s);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "A = " << s.str() << "\n";
    }
    return kExitOk;
}

int run_classify(const ClassifyArgs& a) {
    require_format(a.format, {"human", "json"});
    sl4::OctantClass cls;
    try {
        cls = sl4::classify_mu_zero_octant({a.x, a.y, a.z});
    } catch (const sl4::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    if (a.format == "json") {
        ordered_json j;
        j["xyz"] = ordered_json{{"x", a.x}, {"y", a.y}, {"z", a.z}};
        j["class"] = sl4::octant_class_name(cls);
        j["elements"] = altset_json(sl4::octant_class_set(cls));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << sl4::octant_class_name(cls) << " "
                  << sl4::octant_class_set(cls).str() << "\n";
    }
    return kExitOk;
}

int run_enumerate(const WindowArgs& a) {
    require_format(a.format, {"human", "json", "csv"});
    LatticeWindow win = window_from(a);
    if (!a.mu_list.empty()) {
        for (const std::string& s : a.mu_list)
            win.mu_set.push_back(parse_mu(s));
    } else {
        for (long long c1 = 0; c1 <= a.mu_max; ++c1)
            for (long long c2 = 0; c2 <= a.mu_max; ++c2)
                for (long long c3 = 0; c3 <= a.mu_max; ++c3) {
                    const FWeight mu{c1, c2, c3};
                    if (sl4::integral_root_coords(mu))
                        win.mu_set.push_back(mu);
                }
    }
    const sl4::AltSetRegistry reg = sl4::enumerate_distinct_altsets(win, a.threads);

    if (a.format == "json") {
        ordered_json j;
        j["window"] = ordered_json{{"x", {win.x0, win.x1}},
                                   {"y", {win.y0, win.y1}},
                                   {"z", {win.z0, win.z1}}};
        ordered_json mus = ordered_json::array();
        for (const FWeight& mu : win.mu_set)
            mus.push_back(ordered_json{{"m", mu.m}, {"n", mu.n}, {"k", mu.k}});
        j["mus"] = mus;
        ordered_json sets = ordered_json::array();
        for (size_t i = 0; i < reg.sets.size(); ++i)
            sets.push_back(ordered_json{{"id", (int)i},
                                        {"count", reg.counts[i]},
                                        {"elements", altset_json(reg.sets[i])}});
        j["registry"] = sets;
        std::cout << j.dump(2) << "\n";
    } else if (a.format == "csv") {
        std::cout << "id,size,count,elements\n";
        for (size_t i = 0; i < reg.sets.size(); ++i)
            std::cout << i << "," << reg.sets[i].size() << "," << reg.counts[i]
                      << ",\"" << reg.sets[i].str() << "\"\n";
    } else {
        std::cout << "distinct sets: " << reg.sets.size() << " (nonempty "
                  << reg.nonempty_count() << ")\n";
        std::cout << "max cardinality: " << reg.max_cardinality() << "\n";
        for (size_t i = 0; i < reg.sets.size(); ++i)
            std::cout << i << "  x" << reg.counts[i] << "  "
                      << reg.sets[i].str() << "\n";
    }
    return kExitOk;
}

void write_or_throw(const std::string& path, const std::string& content) {
    if (!sl4::write_file(path, content))
        throw IoError("cannot write " + path);
    std::cout << "wrote " << path << "\n";
}

int run_diagram(const WindowArgs& a) {
    const LatticeWindow win = window_from(a);
    const FWeight mu = parse_mu(a.mu);
    const sl4::Diagram d = sl4::diagram_export(win, mu);
    const std::string prefix = a.out.empty() ? "diagram" : a.out;
    if (a.format == "json") {
        write_or_throw(prefix + ".json", sl4::diagram_to_json(d));
    } else if (a.format == "csv") {
        write_or_throw(prefix + ".csv", sl4::diagram_to_csv(d));
    } else if (a.format == "svg") {
        for (long long z = win.z0; z <= win.z1; ++z)
            write_or_throw(prefix + "_z" + std::to_string(z) + ".svg",
                           sl4::diagram_slice_to_svg(d, win, z));
    } else {
        throw UsageError("diagram supports --format json|csv|svg");
    }
    return kExitOk;
}

int run_empty_region(const WindowArgs& a) {
    const LatticeWindow win = window_from(a);
    const FWeight mu = parse_mu(a.mu);
    const std::vector<RootCoords> pts = sl4::empty_region(win, mu);
    const std::string prefix = a.out.empty() ? "empty_region" : a.out;
    if (a.format == "json") {
        write_or_throw(prefix + ".json", sl4::empty_region_to_json(mu, pts));
    } else if (a.format == "csv") {
        write_or_throw(prefix + ".csv", sl4::empty_region_to_csv(pts));
    } else if (a.format == "svg") {
        for (long long z = win.z0; z <= win.z1; ++z)
            write_or_throw(prefix + "_z" + std::to_string(z) + ".svg",
                           sl4::empty_region_slice_to_svg(pts, win, z));
    } else {
        throw UsageError("empty-region supports --format json|csv|svg");
    }
    return kExitOk;
}

int report(const sl4::verify::CheckResult& r, const char* name, bool& all_ok) {
    if (r.ok) {
        std::cout << "ok   " << name << ": " << r.detail << "\n";
    } else {
        std::cout << "FAIL " << name << ": " << r.detail << "\n     "
                  << r.failure << "\n";
        all_ok = false;
    }
    return r.ok ? 0 : 1;
}

int run_verify(const VerifyArgs& a) {
    namespace v = sl4::verify;
    const bool partition = a.suite == "partition" || a.suite == "all";
    const bool altsets = a.suite == "altsets" || a.suite == "all";
    const bool mult = a.suite == "mult" || a.suite == "all";
    if (!partition && !altsets && !mult)
        throw UsageError("unknown suite '" + a.suite + "'");

    const long long pmax =
        a.max_override >= 0 ? a.max_override : a.max_partition;
    const long long mmax = a.max_override >= 0 ? a.max_override : a.max_mult;

    bool all_ok = true;
    if (partition) {
        report(v::oracle_equivalence(pmax), "partition oracle equivalence",
               all_ok);
        report(v::q1_consistency(pmax), "partition q=1 counts", all_ok);
        report(v::colored_bijection(std::min(pmax, 10LL)),
               "colored partition bijection", all_ok);
        report(v::mirror_symmetry(pmax), "partition mirror symmetry", all_ok);
        report(v::support_bounds(std::min(pmax, 10LL)),
               "partition support bounds", all_ok);
    }
    if (altsets) {
        report(v::altset_enumeration(sl4::default_verification_window(),
                                     a.threads),
               "altsets", all_ok);
        report(v::octant_classification(15), "octant classification", all_ok);
        report(v::two_route_agreement(10, 10, 2), "membership routes", all_ok);
    }
    if (mult) {
        report(v::worked_examples(), "multiplicity examples", all_ok);
        report(v::group_sanity(200, 20240811u), "group sanity", all_ok);
        report(v::mult_agreement(mmax, a.threads), "closed vs direct",
               all_ok);
        report(v::vanishing_random(500, 20240811u), "vanishing set", all_ok);
        report(v::dimension_consistency(3), "dimension consistency", all_ok);
    }
    return all_ok ? kExitOk : kExitVerifyFail;
}

int run_bench(const BenchArgs& a) {
    const auto [lo, hi] = parse_range(a.range);
    if (lo >= hi) throw UsageError("empty bench range");

    std::vector<AlphaTriple> inputs;
    for (long long m = lo; m < hi; ++m)
        for (long long n = lo; n < hi; ++n)
            for (long long k = lo; k < hi; ++k) inputs.push_back({m, n, k});

    using Engine = QPoly (*)(AlphaTriple);
    std::vector<std::pair<std::string, Engine>> engines;
    for (const std::string& name : a.engines) {
        if (name == "closed") engines.push_back({name, sl4::closed_qpartition});
        else if (name == "sum") engines.push_back({name, sl4::oracle_triple_sum});
        else if (name == "enum")
            engines.push_back({name, sl4::oracle_vector_partitions});
        else throw UsageError("unknown engine '" + name + "'");
    }
    if (engines.empty()) throw UsageError("no engines selected");

    // Correctness gate before any timing.
    for (const AlphaTriple& xi : inputs) {
        const QPoly ref = engines.front().second(xi);
        for (size_t e = 1; e < engines.size(); ++e)
            if (engines[e].second(xi) != ref) {
                std::cout << "engines disagree at (" << xi.m << "," << xi.n
                          << "," << xi.k << ")\n";
                return kExitVerifyFail;
            }
    }

    std::printf("%-8s %14s  (%lld evaluations, %lld <= m,n,k < %lld)\n",
                "engine", "mean per eval", (long long)inputs.size(), lo, hi);
    double first_mean = 0;
    for (size_t e = 0; e < engines.size(); ++e) {
        volatile std::size_t sink = 0;
        const auto t0 = std::chrono::steady_clock::now();
        for (const AlphaTriple& xi : inputs)
            sink = sink + engines[e].second(xi).terms().size();
        const auto t1 = std::chrono::steady_clock::now();
        const double ns =
            (double)std::chrono::duration_cast<std::chrono::nanoseconds>(t1 -
                                                                         t0)
                .count() /
            (double)inputs.size();
        if (e == 0) first_mean = ns;
        std::printf("%-8s %11.3f us", engines[e].first.c_str(), ns / 1000.0);
        if (e > 0 && first_mean > 0)
            std::printf("  (%.1fx vs %s)", ns / first_mean,
                        engines.front().first.c_str());
        std::printf("\n");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact partition-function, alternation-set and weight-"
                 "multiplicity engine for sl4"};
    app.require_subcommand(1);

    PartitionArgs pa;
    CLI::App* partition = app.add_subcommand(
        "partition", "q-analog partition polynomial of m*a1+n*a2+k*a3");
    partition->add_option("m", pa.m, "alpha1 coordinate")->required();
    partition->add_option("n", pa.n, "alpha2 coordinate")->required();
    partition->add_option("k", pa.k, "alpha3 coordinate")->required();
    partition->add_flag("--q1", pa.q1, "print the q=1 count");
    partition->add_option("--oracle", pa.oracle, "engine: closed|sum|enum")
        ->default_str("closed");
    partition->add_option("--format", pa.format, "human|json");

    MultArgs ma;
    CLI::App* mult = app.add_subcommand(
        "mult", "q-multiplicity of mu in the highest weight module L(lambda)");
    mult->add_option("m", ma.m)->required();
    mult->add_option("n", ma.n)->required();
    mult->add_option("k", ma.k)->required();
    mult->add_option("c1", ma.c1)->required();
    mult->add_option("c2", ma.c2)->required();
    mult->add_option("c3", ma.c3)->required();
    mult->add_flag("--direct", ma.direct,
                   "use the 24-term alternating sum (no dominance needed)");
    mult->add_flag("--q1", ma.q1, "print the multiplicity only");
    mult->add_option("--format", ma.format, "human|json");

    AltsetArgs aa;
    CLI::App* alts = app.add_subcommand("altset",
                                        "alternation set of (lambda, mu)");
    alts->add_option("m", aa.m)->required();
    alts->add_option("n", aa.n)->required();
    alts->add_option("k", aa.k)->required();
    alts->add_option("c1", aa.c1)->required();
    alts->add_option("c2", aa.c2)->required();
    alts->add_option("c3", aa.c3)->required();
    alts->add_option("--format", aa.format, "human|json");

    ClassifyArgs ca;
    CLI::App* classify = app.add_subcommand(
        "classify", "mu=0 class of a dominant root-lattice point");
    classify->add_option("x", ca.x)->required();
    classify->add_option("y", ca.y)->required();
    classify->add_option("z", ca.z)->required();
    classify->add_option("--format", ca.format, "human|json");

    WindowArgs ea;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "distinct alternation sets over a lattice window");
    enumerate->add_option("--x", ea.x, "x range a:b (inclusive)");
    enumerate->add_option("--y", ea.y, "y range a:b");
    enumerate->add_option("--z", ea.z, "z range a:b");
    enumerate->add_option("--mu-max", ea.mu_max,
                          "scan all root-lattice mu with coords 0..N");
    enumerate->add_option("--mu", ea.mu_list,
                          "explicit mu m,n,k (repeatable; overrides --mu-max)");
    enumerate->add_option("--threads", ea.threads, "worker threads (0 = all)");
    enumerate->add_option("--format", ea.format, "human|json|csv");

    WindowArgs da;
    CLI::App* diagram = app.add_subcommand(
        "diagram", "alternation diagram export over a lattice window");
    diagram->add_option("--x", da.x, "x range a:b");
    diagram->add_option("--y", da.y, "y range a:b");
    diagram->add_option("--z", da.z, "z range a:b");
    diagram->add_option("--mu", da.mu, "mu as m,n,k");
    diagram->add_option("--format", da.format, "json|csv|svg")->required();
    diagram->add_option("--out", da.out, "output path prefix");

    WindowArgs ra;
    CLI::App* empty = app.add_subcommand(
        "empty-region", "points whose alternation set is empty");
    empty->add_option("--x", ra.x, "x range a:b");
    empty->add_option("--y", ra.y, "y range a:b");
    empty->add_option("--z", ra.z, "z range a:b");
    empty->add_option("--mu", ra.mu, "mu as m,n,k");
    empty->add_option("--format", ra.format, "json|csv|svg")->required();
    empty->add_option("--out", ra.out, "output path prefix");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", va.suite, "partition|altsets|mult|all");
    verify->add_option("--max", va.max_override, "coordinate bound override");
    verify->add_option("--threads", va.threads, "worker threads (0 = all)");

    BenchArgs ba;
    CLI::App* bench = app.add_subcommand(
        "bench", "time closed form vs enumeration engines");
    bench->add_option("--range", ba.range, "half-open coordinate range a:b");
    bench->add_option("--engines", ba.engines, "subset of closed,sum,enum")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (partition->parsed()) return run_partition(pa);
        if (mult->parsed()) return run_mult(ma);
        if (alts->parsed()) return run_altset(aa);
        if (classify->parsed()) return run_classify(ca);
        if (enumerate->parsed()) return run_enumerate(ea);
        if (diagram->parsed()) return run_diagram(da);
        if (empty->parsed()) return run_empty_region(ra);
        if (verify->parsed()) return run_verify(va);
        if (bench->parsed()) return run_bench(ba);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const sl4::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitUsage;
}
