// Command-line front end: classify single graphs, run censuses, enumerate
// connected graphs, and verify the family theorems / trig lemma /
// conjecture trend.
//
// Exit codes: 0 success, 1 usage or parse error, 2 domain violation
// (disconnected input), 3 integrity failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "genergy/census.hpp"
#include "genergy/classify.hpp"
#include "genergy/closedform.hpp"
#include "genergy/energy.hpp"
#include "genergy/enumerate.hpp"
#include "genergy/graph6.hpp"
#include "genergy/verify.hpp"

using namespace genergy;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitIntegrity = 3;

struct Output {
    std::string path;  // empty: stdout

    void write(const std::string& content) const {
        if (path.empty()) {
            std::cout << content;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << content;
    }
};

int default_jobs() {
    if (const char* env = std::getenv("GENERGY_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 0;  // let the census pick available parallelism
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---- classify -------------------------------------------------------------

struct ClassifyArgs {
    std::string graph6_str;
    std::string file;
    std::string family;
    int n = 0;
    std::string format = "table";
    ToleranceConfig tol;
};

Graph load_classify_input(const ClassifyArgs& a) {
    int sources = 0;
    if (!a.graph6_str.empty()) ++sources;
    if (!a.file.empty()) ++sources;
    if (!a.family.empty()) ++sources;
    if (sources != 1)
        throw CLI::ValidationError(
            "classify", "need exactly one of --graph6, --file, --family");

    if (!a.graph6_str.empty()) return parse_graph6(a.graph6_str);
    if (!a.file.empty()) {
        const auto graphs = read_graph6_stream(a.file);
        if (graphs.empty()) throw std::runtime_error("no graphs in " + a.file);
        return graphs.front();
    }
    if (a.n <= 0)
        throw CLI::ValidationError("classify", "--family requires --n N");
    if (a.family == "path") return Graph::path(a.n);
    if (a.family == "cycle") return Graph::cycle(a.n);
    if (a.family == "complete") return Graph::complete(a.n);
    throw CLI::ValidationError("classify",
                               "--family must be path, cycle or complete");
}

int run_classify(const ClassifyArgs& a, const Output& out) {
    const Graph g = load_classify_input(a);
    if (!is_connected(g)) {
        std::cerr << "error: input graph is disconnected; classification is "
                     "defined for connected graphs only\n";
        return kExitDomain;
    }
    const EnergyProfile p = profile(g);
    Classification c;
    try {
        c = classify(p, a.tol);
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    }

    std::ostringstream s;
    if (a.format == "json") {
        ordered_json j;
        j["graph6"] = to_graph6(g);
        j["n"] = p.n;
        j["m"] = p.m;
        j["profile"] = {{"E", p.energy},       {"LE", p.laplacian_energy},
                        {"LEL", p.lel},        {"IE", p.incidence_energy},
                        {"pi", p.pi},          {"pi_star", p.pi_star}};
        j["subclass"] = subclass_name(c.subclass);
        j["boundary_flags"] = ordered_json::array();
        for (const auto& f : c.boundary_flags)
            j["boundary_flags"].push_back(
                {{"boundary", f.boundary}, {"margin", f.margin}});
        j["tolerance"] = {{"abs", a.tol.eps_abs}, {"rel", a.tol.eps_rel}};
        s << j.dump(2) << "\n";
    } else {
        s << "graph6:   " << to_graph6(g) << "\n";
        s << "n = " << p.n << ", m = " << p.m << "\n";
        s << "E      = " << fmt(p.energy) << "\n";
        s << "LE     = " << fmt(p.laplacian_energy) << "\n";
        s << "LEL    = " << fmt(p.lel) << "\n";
        s << "IE     = " << fmt(p.incidence_energy) << "\n";
        s << "pi     = " << fmt(p.pi) << "\n";
        s << "pi*    = " << fmt(p.pi_star) << "\n";
        s << "subclass: " << subclass_name(c.subclass) << "\n";
        for (const auto& f : c.boundary_flags)
            s << "boundary: " << f.boundary << " (margin " << fmt(f.margin)
              << ")\n";
        s << "tolerance: abs " << fmt(a.tol.eps_abs) << ", rel "
          << fmt(a.tol.eps_rel) << "\n";
    }
    out.write(s.str());
    return kExitOk;
}

// ---- census ---------------------------------------------------------------

struct CensusArgs {
    int n = 0;
    std::string n_range;
    std::string source = "builtin";
    int jobs = default_jobs();
    std::string format = "table";
    std::string list_dir;
    ToleranceConfig tol;
};

std::pair<int, int> parse_range(const CensusArgs& a) {
    if (!a.n_range.empty()) {
        const auto dots = a.n_range.find("..");
        if (dots == std::string::npos)
            throw CLI::ValidationError("census", "--n-range expects A..B");
        const int lo = std::stoi(a.n_range.substr(0, dots));
        const int hi = std::stoi(a.n_range.substr(dots + 2));
        if (lo < 1 || hi < lo)
            throw CLI::ValidationError("census", "bad --n-range");
        return {lo, hi};
    }
    if (a.n < 1)
        throw CLI::ValidationError("census", "need --n N or --n-range A..B");
    return {a.n, a.n};
}

std::string census_table(const std::vector<CensusRow>& rows) {
    std::ostringstream s;
    s << "  n   total      G1      G2      G3      G4  borderline\n";
    for (const CensusRow& r : rows) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%3d %7ld %7ld %7ld %7ld %7ld %11ld\n",
                      r.n, r.total, r.counts[0], r.counts[1], r.counts[2],
                      r.counts[3], r.borderline);
        s << buf;
        if (r.skipped_disconnected > 0)
            s << "      (skipped " << r.skipped_disconnected
              << " disconnected graphs from " << r.source << ")\n";
    }
    s << "\n  n       r1       r2       r3       r4\n";
    for (const CensusRow& r : rows) {
        const RatioRow rr = ratios(r);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%3d %8.6f %8.6f %8.6f %8.6f\n", r.n,
                      rr.ratios[0], rr.ratios[1], rr.ratios[2], rr.ratios[3]);
        s << buf;
    }
    if (!rows.empty())
        s << "\ntolerance: abs " << fmt(rows.front().tol.eps_abs) << ", rel "
          << fmt(rows.front().tol.eps_rel) << "\n";
    return s.str();
}

int run_census_cmd(const CensusArgs& a, const Output& out) {
    const auto [lo, hi] = parse_range(a);
    CensusOptions opts;
    opts.tol = a.tol;
    opts.jobs = a.jobs;

    std::vector<CensusRow> rows;
    for (int n = lo; n <= hi; ++n) {
        if (!a.list_dir.empty())
            opts.list_dir = std::filesystem::path(a.list_dir) /
                            ("n" + std::to_string(n));
        try {
            if (a.source == "builtin")
                rows.push_back(run_census_builtin(n, opts));
            else
                rows.push_back(run_census_file(n, a.source, opts));
        } catch (const IntegrityError& e) {
            std::cerr << "integrity error at n = " << n << ": " << e.what()
                      << "\n";
            return kExitIntegrity;
        } catch (const std::runtime_error& e) {
            // census_over wraps integrity failures with the offending form
            if (std::string(e.what()).find("invariant chain violated") !=
                std::string::npos) {
                std::cerr << "integrity error at n = " << n << ": " << e.what()
                          << "\n";
                return kExitIntegrity;
            }
            throw;
        }
    }

    if (a.format == "csv") {
        std::vector<RatioRow> rrows;
        for (const CensusRow& r : rows) rrows.push_back(ratios(r));
        out.write(census_csv(rows) + ratios_csv(rrows));
    } else if (a.format == "json") {
        out.write(census_json(rows, a.tol));
    } else {
        out.write(census_table(rows));
    }
    return kExitOk;
}

// ---- enumerate ------------------------------------------------------------

int run_enumerate(int n, const Output& out, const std::string& format) {
    const auto graphs = connected_graphs(n);
    std::ostringstream s;
    if (format == "json") {
        ordered_json j;
        j["n"] = n;
        j["count"] = graphs.size();
        j["graphs"] = ordered_json::array();
        for (const Graph& g : graphs) j["graphs"].push_back(to_graph6(g));
        s << j.dump(2) << "\n";
        out.write(s.str());
    } else {
        for (const Graph& g : graphs) s << to_graph6(g) << "\n";
        out.write(s.str());
        std::cerr << graphs.size() << " connected graphs of order " << n << "\n";
    }
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    bool theorems = false;
    bool lemma = false;
    bool conjecture = false;
    int max_n = 50;
    int samples = 1000;
    int jobs = default_jobs();
    std::string format = "table";
    ToleranceConfig tol;
};

int run_verify(const VerifyArgs& a, const Output& out) {
    if (static_cast<int>(a.theorems) + static_cast<int>(a.lemma) +
            static_cast<int>(a.conjecture) != 1)
        throw CLI::ValidationError(
            "verify", "need exactly one of --theorems, --lemma, --conjecture");

    std::ostringstream s;
    ordered_json j;
    bool all_ok = true;

    if (a.theorems) {
        const auto checks = verify_theorems(a.max_n, 1e-8, 1e-9, a.jobs);
        j["kind"] = "theorems";
        j["max_n"] = a.max_n;
        j["failures"] = ordered_json::array();
        int npass = 0;
        for (const TheoremCheck& c : checks) {
            if (c.ok) {
                ++npass;
            } else {
                all_ok = false;
                s << "FAIL " << c.detail << "\n";
                j["failures"].push_back(c.detail);
            }
        }
        s << (all_ok ? "PASS" : "FAIL") << " theorem suite: " << npass << "/"
          << checks.size() << " family cases confirmed (max n " << a.max_n
          << ")\n";
        j["checked"] = checks.size();
        j["ok"] = all_ok;
    } else if (a.lemma) {
        const LemmaResult r = verify_lemma(a.samples);
        all_ok = r.max_error <= 1e-9;
        s << (all_ok ? "PASS" : "FAIL") << " lemma suite: max error "
          << fmt(r.max_error) << " over " << r.samples << " samples";
        if (!all_ok)
            s << " (worst at theta=" << fmt(r.theta) << ", alpha=" << fmt(r.alpha)
              << ", n=" << r.n << ")";
        s << "\n";
        j["kind"] = "lemma";
        j["samples"] = r.samples;
        j["max_error"] = r.max_error;
        j["ok"] = all_ok;
    } else {
        if (a.max_n < 2)
            throw CLI::ValidationError("verify", "--conjecture needs --max-n >= 2");
        CensusOptions opts;
        opts.tol = a.tol;
        opts.jobs = a.jobs;
        std::vector<CensusRow> rows;
        for (int n = 1; n <= a.max_n; ++n)
            rows.push_back(run_census_builtin(n, opts));
        const ConjectureReport rep = conjecture_report(rows);
        s << "  n       r1       r2       r3       r4   |r1-1/2|  |r2-1/2|  "
             "r3+r4\n";
        j["kind"] = "conjecture";
        j["max_n"] = a.max_n;
        j["rows"] = ordered_json::array();
        for (const ConjectureRow& r : rep.rows) {
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "%3d %8.6f %8.6f %8.6f %8.6f  %8.6f  %8.6f %8.6f\n",
                          r.n, r.ratios[0], r.ratios[1], r.ratios[2], r.ratios[3],
                          std::abs(r.deviation[0]), std::abs(r.deviation[1]),
                          r.ratios[2] + r.ratios[3]);
            s << buf;
            j["rows"].push_back({{"n", r.n},
                                 {"ratios", r.ratios},
                                 {"diffs", r.diffs},
                                 {"deviation", r.deviation}});
        }
        j["ok"] = true;
    }

    out.write(a.format == "json" ? j.dump(2) + "\n" : s.str());
    return all_ok ? kExitOk : kExitIntegrity;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph energy subclasses: classification, census, "
                 "enumeration and theorem verification"};
    app.require_subcommand(1);

    Output out;
    ClassifyArgs cls;
    CensusArgs cen;
    VerifyArgs ver;
    int enum_n = 0;
    std::string enum_format = "g6";

    auto add_tol = [](CLI::App* cmd, ToleranceConfig& tol) {
        cmd->add_option("--tol-abs", tol.eps_abs, "absolute tolerance");
        cmd->add_option("--tol-rel", tol.eps_rel, "relative tolerance");
    };

    CLI::App* c1 = app.add_subcommand("classify", "classify one graph");
    c1->add_option("--graph6", cls.graph6_str, "graph6 string");
    c1->add_option("--file", cls.file, "graph6 file (first graph)");
    c1->add_option("--family", cls.family, "path | cycle | complete");
    c1->add_option("--n", cls.n, "family order");
    c1->add_option("--format", cls.format, "table | json");
    c1->add_option("--out", out.path, "output file (default stdout)");
    add_tol(c1, cls.tol);

    CLI::App* c2 = app.add_subcommand("census", "classify all connected graphs");
    c2->add_option("--n", cen.n, "single order");
    c2->add_option("--n-range", cen.n_range, "order range A..B");
    c2->add_option("--source", cen.source, "builtin | graph6 file path");
    c2->add_option("--jobs", cen.jobs, "worker count (env GENERGY_JOBS)");
    c2->add_option("--format", cen.format, "table | csv | json");
    c2->add_option("--list-classes", cen.list_dir, "write per-class listings");
    c2->add_option("--out", out.path, "output file (default stdout)");
    add_tol(c2, cen.tol);

    CLI::App* c3 = app.add_subcommand("enumerate", "isomorph-free enumeration");
    c3->add_option("--n", enum_n, "order")->required();
    c3->add_option("--format", enum_format, "g6 | json");
    c3->add_option("--out", out.path, "output file (default stdout)");

    CLI::App* c4 = app.add_subcommand("verify", "run the verification suites");
    c4->add_flag("--theorems", ver.theorems, "family theorem suite");
    c4->add_flag("--lemma", ver.lemma, "trig sum lemma suite");
    c4->add_flag("--conjecture", ver.conjecture, "ratio trend report");
    c4->add_option("--max-n", ver.max_n, "largest order to check");
    c4->add_option("--samples", ver.samples, "lemma sample count");
    c4->add_option("--jobs", ver.jobs, "worker count");
    c4->add_option("--format", ver.format, "table | json");
    c4->add_option("--out", out.path, "output file (default stdout)");
    add_tol(c4, ver.tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c1->parsed()) return run_classify(cls, out);
        if (c2->parsed()) return run_census_cmd(cen, out);
        if (c3->parsed()) return run_enumerate(enum_n, out, enum_format);
        if (c4->parsed()) return run_verify(ver, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Graph6Error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
