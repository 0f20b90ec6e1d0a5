#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fracspec {

struct BenchRecord {
  std::size_t m = 0;
  int modulus = 0;
  std::string method;  // "naive" or "folded"
  std::uint64_t trig_count = 0;
  std::uint64_t madd_count = 0;
  std::int64_t ns_median = 0;
  std::int64_t ns_min = 0;
  std::int64_t ns_max = 0;
  double checksum = 0.0;  // sum of FPS(l/k), k = 1..floor(l/2)
};

struct BenchConfig {
  std::vector<std::size_t> lengths;
  std::vector<int> moduli;
  int repeats = 5;
  std::uint64_t seed = 42;
};

/// Times the per-frequency naive DFT against fold + shift sums + cosine reuse
/// over k = 1..floor(l/2) for every (m, l) pair, on uniform [-10, 10] input.
/// Throws InternalConsistencyError if the two checksums disagree beyond 1e-6
/// relative.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Columns m,l,method,trig_count,madd_count,ns_median,checksum.
std::string render_bench_csv(const std::vector<BenchRecord>& records);

}  // namespace fracspec
