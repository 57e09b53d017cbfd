#include "planar/bench.hpp"

#include <chrono>
#include <sstream>

#include "planar/generator.hpp"

namespace planar {

std::vector<BenchRow> run_bench(const std::vector<int>& sizes, std::uint64_t seed, int jobs) {
    using Clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    for (int n : sizes) {
        BenchRow row;
        row.n = n;
        auto start = Clock::now();
        PlaneGraph g = random_triangulation(n, seed);
        row.generate_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        CheckOptions options;
        options.jobs = jobs;
        Verdict v = is_perfect(g, options);
        row.timings = v.timings;
        row.status = v.status;
        rows.push_back(row);
    }
    return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "n\tgen_ms\tcheck_ms\tdecompose_ms\tembed_ms\tedge_ms\ttriangle_ms\tverdict\n";
    out.setf(std::ios::fixed);
    out.precision(2);
    for (const auto& r : rows) {
        out << r.n << '\t' << r.generate_ms << '\t' << r.timings.total_ms << '\t'
            << r.timings.decompose_ms << '\t' << r.timings.embed_ms << '\t' << r.timings.edge_ms
            << '\t' << r.timings.triangle_ms << '\t'
            << (r.status == Status::perfect ? "perfect" : "not_perfect") << '\n';
    }
    return out.str();
}

}  // namespace planar
