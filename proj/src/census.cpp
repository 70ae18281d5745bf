#include "genergy/census.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "genergy/energy.hpp"
#include "genergy/enumerate.hpp"
#include "genergy/graph6.hpp"

#include "json.hpp"

namespace genergy {

namespace {

struct WorkerTally {
    std::array<long, 4> counts{};
    long borderline = 0;
    std::array<std::vector<std::string>, 4> listings;
};

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

CensusRow census_over(const std::vector<Graph>& graphs, int n,
                      const std::string& source, const CensusOptions& opts) {
    for (const Graph& g : graphs)
        if (g.order() != n)
            throw std::invalid_argument("census source contains a graph of order " +
                                        std::to_string(g.order()) +
                                        ", expected " + std::to_string(n));

    const bool want_listings = !opts.list_dir.empty();
    const int jobs = resolve_jobs(opts.jobs);
    const size_t total = graphs.size();
    const int nworkers = static_cast<int>(
        std::min<size_t>(static_cast<size_t>(jobs), std::max<size_t>(total, 1)));

    std::vector<WorkerTally> tallies(nworkers);
    std::vector<std::string> failures(nworkers);

    auto work = [&](int w) {
        try {
            for (size_t i = w; i < total; i += nworkers) {
                const Graph& g = graphs[i];
                const EnergyProfile p = profile(g);
                Classification c;
                try {
                    c = classify(p, opts.tol);
                } catch (const IntegrityError& e) {
                    throw std::runtime_error(std::string(e.what()) +
                                             " for graph " + canonical_form(g));
                }
                const int cls = static_cast<int>(c.subclass);
                ++tallies[w].counts[cls];
                if (!c.boundary_flags.empty()) ++tallies[w].borderline;
                if (want_listings)
                    tallies[w].listings[cls].push_back(canonical_form(g));
            }
        } catch (const std::exception& e) {
            failures[w] = e.what();
        }
    };

    if (nworkers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (const std::string& f : failures)
        if (!f.empty()) throw std::runtime_error(f);

    CensusRow row;
    row.n = n;
    row.total = static_cast<long>(total);
    row.source = source;
    row.tol = opts.tol;
    for (const WorkerTally& t : tallies) {
        for (int c = 0; c < 4; ++c) row.counts[c] += t.counts[c];
        row.borderline += t.borderline;
    }

    if (want_listings) {
        std::filesystem::create_directories(opts.list_dir);
        for (int c = 0; c < 4; ++c) {
            std::vector<std::string> all;
            for (WorkerTally& t : tallies)
                all.insert(all.end(), t.listings[c].begin(), t.listings[c].end());
            std::sort(all.begin(), all.end());
            std::ofstream out(opts.list_dir /
                              ("g" + std::to_string(c + 1) + ".g6"));
            for (const std::string& s : all) out << s << '\n';
        }
    }
    return row;
}

CensusRow run_census_builtin(int n, const CensusOptions& opts) {
    return census_over(connected_graphs(n), n, "builtin", opts);
}

CensusRow run_census_file(int n, const std::filesystem::path& path,
                          const CensusOptions& opts) {
    std::vector<Graph> graphs = read_graph6_stream(path);
    long skipped = 0;
    std::vector<Graph> connected;
    connected.reserve(graphs.size());
    for (Graph& g : graphs) {
        if (is_connected(g))
            connected.push_back(std::move(g));
        else
            ++skipped;
    }
    CensusRow row = census_over(connected, n, path.string(), opts);
    row.skipped_disconnected = skipped;
    return row;
}

RatioRow ratios(const CensusRow& row) {
    RatioRow r;
    r.n = row.n;
    for (int c = 0; c < 4; ++c)
        r.ratios[c] = static_cast<double>(row.counts[c]) / row.total;
    return r;
}

ConjectureReport conjecture_report(const std::vector<CensusRow>& rows) {
    if (rows.size() < 2)
        throw std::invalid_argument("conjecture report needs at least 2 rows");
    static constexpr std::array<double, 4> kLimits{0.5, 0.5, 0.0, 0.0};
    ConjectureReport rep;
    for (size_t i = 0; i < rows.size(); ++i) {
        ConjectureRow cr;
        cr.n = rows[i].n;
        cr.ratios = ratios(rows[i]).ratios;
        for (int c = 0; c < 4; ++c) {
            if (i > 0)
                cr.diffs[c] = cr.ratios[c] - rep.rows[i - 1].ratios[c];
            cr.deviation[c] = cr.ratios[c] - kLimits[c];
        }
        rep.rows.push_back(cr);
    }
    return rep;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::string out = "n,total,g1,g2,g3,g4,borderline\n";
    for (const CensusRow& r : rows) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d,%ld,%ld,%ld,%ld,%ld,%ld\n", r.n,
                      r.total, r.counts[0], r.counts[1], r.counts[2],
                      r.counts[3], r.borderline);
        out += buf;
    }
    return out;
}

std::string ratios_csv(const std::vector<RatioRow>& rows) {
    std::string out = "n,r1,r2,r3,r4\n";
    for (const RatioRow& r : rows) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%.6f,%.6f\n", r.n,
                      r.ratios[0], r.ratios[1], r.ratios[2], r.ratios[3]);
        out += buf;
    }
    return out;
}

std::string census_json(const std::vector<CensusRow>& rows,
                        const ToleranceConfig& tol) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["tolerance"] = {{"abs", tol.eps_abs}, {"rel", tol.eps_rel}};
    j["rows"] = nlohmann::ordered_json::array();
    for (const CensusRow& r : rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["total"] = r.total;
        row["counts"] = {{"G1", r.counts[0]},
                         {"G2", r.counts[1]},
                         {"G3", r.counts[2]},
                         {"G4", r.counts[3]}};
        row["source"] = r.source;
        row["borderline"] = r.borderline;
        row["skipped_disconnected"] = r.skipped_disconnected;
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

void export_rows(const std::vector<CensusRow>& rows, const std::string& format,
                 const std::filesystem::path& path) {
    std::string content;
    if (format == "csv") {
        content = census_csv(rows);
    } else if (format == "json") {
        content = census_json(rows, rows.empty() ? ToleranceConfig{}
                                                 : rows.front().tol);
    } else {
        throw std::invalid_argument("unknown export format: " + format);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace genergy
