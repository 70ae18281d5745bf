#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "genergy/classify.hpp"
#include "genergy/graph.hpp"

namespace genergy {

struct CensusRow {
    int n = 0;
    long total = 0;
    std::array<long, 4> counts{};  // G1..G4
    std::string source;            // "builtin" or file path
    ToleranceConfig tol{};
    long borderline = 0;              // graphs flagged near a boundary
    long skipped_disconnected = 0;    // file source only
};

struct RatioRow {
    int n = 0;
    std::array<double, 4> ratios{};
};

struct CensusOptions {
    ToleranceConfig tol{};
    int jobs = 0;                     // 0 = available parallelism
    std::filesystem::path list_dir;   // nonempty: write per-class listings
};

// Classify a set of connected graphs of order n. Deterministic regardless
// of the worker count.
CensusRow census_over(const std::vector<Graph>& graphs, int n,
                      const std::string& source, const CensusOptions& opts);

CensusRow run_census_builtin(int n, const CensusOptions& opts);

// Disconnected graphs in the file are skipped and tallied, not an error.
CensusRow run_census_file(int n, const std::filesystem::path& path,
                          const CensusOptions& opts);

RatioRow ratios(const CensusRow& row);

struct ConjectureRow {
    int n = 0;
    std::array<double, 4> ratios{};
    std::array<double, 4> diffs{};      // vs previous row (first row: 0)
    std::array<double, 4> deviation{};  // ratio minus limit (1/2,1/2,0,0)
};

struct ConjectureReport {
    std::vector<ConjectureRow> rows;
};

// Descriptive ratio trend; requires at least 2 rows.
ConjectureReport conjecture_report(const std::vector<CensusRow>& rows);

std::string census_csv(const std::vector<CensusRow>& rows);
std::string ratios_csv(const std::vector<RatioRow>& rows);
std::string census_json(const std::vector<CensusRow>& rows,
                        const ToleranceConfig& tol);

void export_rows(const std::vector<CensusRow>& rows, const std::string& format,
                 const std::filesystem::path& path);

}  // namespace genergy
