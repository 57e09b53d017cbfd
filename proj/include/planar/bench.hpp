#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planar/checker.hpp"

namespace planar {

struct BenchRow {
    int n = 0;
    double generate_ms = 0;
    StageTimings timings;
    Status status = Status::perfect;
};

/// Generates one seeded random triangulation per size and times the full
/// perfectness check on it. Generation time is reported separately and not
/// part of the measured check.
std::vector<BenchRow> run_bench(const std::vector<int>& sizes, std::uint64_t seed, int jobs = 1);

std::string format_bench_table(const std::vector<BenchRow>& rows);

}  // namespace planar
