#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dst/focal_points.hpp"
#include "dst/generate.hpp"

namespace dst {

/// One benchmark row: generate a mass from a spec, decompose it (conjunctive
/// when the universe is focal, disjunctive when the empty set is), and record
/// the effort counters alongside the median wall time.
struct BenchRecord {
  std::string structure;
  std::uint32_t n = 0;
  std::size_t focal_count = 0;
  std::size_t focal_point_count = 0;
  std::size_t closure_ops = 0;
  std::size_t decompose_products = 0;
  std::int64_t wall_time_us = 0;
  std::uint64_t seed = 0;
  double fmt_cost = 0.0;  // n * 2^n, what the dense-lattice baseline would spend
  std::string status;     // "ok" or the error category of a failed row

  bool operator==(const BenchRecord&) const = default;
};

inline constexpr const char* kBenchCsvHeader =
    "structure,n,focal_count,focal_point_count,closure_ops,decompose_products,"
    "wall_time_us,seed,fmt_cost,status";

/// n * 2^n as a double; overflows to infinity far beyond any frame we touch.
double fmt_baseline_cost(std::uint32_t n);

/// Runs every spec `repetitions` times on a monotonic clock and keeps the
/// median. Failed rows (size-exceeded, infeasible specs) come back with the
/// error category in `status` instead of aborting the sweep.
std::vector<BenchRecord> run_benchmark(std::span<const GeneratorSpec> specs,
                                       int repetitions,
                                       std::size_t closure_cap = kClosureCapDefault);

std::string bench_csv(std::span<const BenchRecord> records);
std::vector<BenchRecord> parse_bench_csv(const std::string& csv);

}  // namespace dst
