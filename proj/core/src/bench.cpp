#include "dst/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dst/decomposition.hpp"
#include "dst/error.hpp"

namespace dst {

double fmt_baseline_cost(std::uint32_t n) {
  return static_cast<double>(n) * std::exp2(static_cast<double>(n));
}

namespace {

std::int64_t median_us(std::vector<std::int64_t> nanos) {
  std::sort(nanos.begin(), nanos.end());
  const std::size_t k = nanos.size();
  std::int64_t ns = (k % 2 == 1) ? nanos[k / 2]
                                 : (nanos[k / 2 - 1] + nanos[k / 2]) / 2;
  return ns / 1000;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<BenchRecord> run_benchmark(std::span<const GeneratorSpec> specs,
                                       int repetitions, std::size_t closure_cap) {
  using clock = std::chrono::steady_clock;
  if (repetitions < 1) repetitions = 1;

  std::vector<BenchRecord> records;
  records.reserve(specs.size());
  for (const auto& spec : specs) {
    BenchRecord r;
    r.structure = generated_structure_name(spec.structure);
    r.n = spec.n;
    r.focal_count = spec.focal_count;
    r.seed = spec.seed;
    r.fmt_cost = fmt_baseline_cost(spec.n);
    r.status = "ok";
    try {
      MassFunction m = generate_mass(spec);
      r.focal_count = m.focal_count();
      const bool conjunctive = m.non_dogmatic();
      if (!conjunctive && !m.subnormal())
        fail(Errc::dogmatic_input,
             "neither the universe nor the empty set is focal");

      std::vector<std::int64_t> nanos;
      nanos.reserve(static_cast<std::size_t>(repetitions));
      DecompositionStats stats;
      for (int rep = 0; rep < repetitions; ++rep) {
        const auto t0 = clock::now();
        WeightFunction w = conjunctive ? conjunctive_weights(m, closure_cap)
                                       : disjunctive_weights(m, closure_cap);
        const auto t1 = clock::now();
        nanos.push_back(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        stats = w.stats();
      }
      r.focal_point_count = stats.focal_point_count;
      r.closure_ops = stats.closure_operations;
      r.decompose_products = stats.products;
      r.wall_time_us = median_us(std::move(nanos));
    } catch (const Error& e) {
      r.status = e.category();
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::string bench_csv(std::span<const BenchRecord> records) {
  std::ostringstream out;
  out << kBenchCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.structure << ',' << r.n << ',' << r.focal_count << ','
        << r.focal_point_count << ',' << r.closure_ops << ','
        << r.decompose_products << ',' << r.wall_time_us << ',' << r.seed << ','
        << format_double(r.fmt_cost) << ',' << r.status << '\n';
  }
  return out.str();
}

std::vector<BenchRecord> parse_bench_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != kBenchCsvHeader)
    fail(Errc::malformed_document, "bench CSV header does not match");

  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        cells.push_back(line.substr(start));
        break;
      }
      cells.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (cells.size() != 10)
      fail(Errc::malformed_document, "bench CSV row has the wrong arity");
    try {
      BenchRecord r;
      r.structure = cells[0];
      r.n = static_cast<std::uint32_t>(std::stoul(cells[1]));
      r.focal_count = std::stoull(cells[2]);
      r.focal_point_count = std::stoull(cells[3]);
      r.closure_ops = std::stoull(cells[4]);
      r.decompose_products = std::stoull(cells[5]);
      r.wall_time_us = std::stoll(cells[6]);
      r.seed = std::stoull(cells[7]);
      r.fmt_cost = std::stod(cells[8]);
      r.status = cells[9];
      records.push_back(std::move(r));
    } catch (const std::exception&) {
      fail(Errc::malformed_document, "bench CSV row does not parse: " + line);
    }
  }
  return records;
}

}  // namespace dst
