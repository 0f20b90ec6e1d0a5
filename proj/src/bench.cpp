#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <span>

#include "errors.hpp"
#include "oracle.hpp"
#include "report.hpp"
#include "spectra.hpp"
#include "tally.hpp"

namespace fracspec {
namespace {

constexpr double kChecksumTolerance = 1e-6;

struct Timed {
  std::vector<std::int64_t> ns;
  OpTally ops;
  double checksum = 0.0;
};

template <typename Body>
Timed time_repeats(int repeats, Body&& body) {
  Timed timed;
  for (int r = 0; r < repeats; ++r) {
    OpTally ops;
    double checksum = 0.0;
    const auto start = std::chrono::steady_clock::now();
    {
      TallyScope scope(ops);
      checksum = body();
    }
    const auto stop = std::chrono::steady_clock::now();
    timed.ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    // Every repeat does identical work; keep the first tally and checksum.
    if (r == 0) {
      timed.ops = ops;
      timed.checksum = checksum;
    }
  }
  std::sort(timed.ns.begin(), timed.ns.end());
  return timed;
}

BenchRecord to_record(std::size_t m, int modulus, std::string method, const Timed& timed) {
  BenchRecord record;
  record.m = m;
  record.modulus = modulus;
  record.method = std::move(method);
  record.trig_count = timed.ops.trig;
  record.madd_count = timed.ops.madd;
  record.ns_min = timed.ns.front();
  record.ns_max = timed.ns.back();
  record.ns_median = timed.ns[timed.ns.size() / 2];
  record.checksum = timed.checksum;
  return record;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.repeats < 3) throw InvalidArgument("bench needs at least 3 repeats");
  if (config.lengths.empty() || config.moduli.empty()) throw InvalidArgument("bench needs lengths and moduli");

  std::vector<BenchRecord> records;
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> uniform(-10.0, 10.0);

  for (std::size_t m : config.lengths) {
    if (m == 0) throw InvalidArgument("bench length must be positive");
    std::vector<double> samples(m);
    for (double& v : samples) v = uniform(rng);
    const RealSequence x(std::move(samples));

    for (int modulus : config.moduli) {
      if (modulus < 2) throw InvalidArgument("bench modulus must be at least 2");
      const int half = modulus / 2;

      const Timed naive = time_repeats(config.repeats, [&] {
        const auto l = static_cast<std::size_t>(modulus);
        std::vector<double> padded(x.samples().begin(), x.samples().end());
        padded.resize((padded.size() + l - 1) / l * l, 0.0);
        const auto folds = static_cast<long long>(padded.size() / l);
        double sum = 0.0;
        for (int k = 1; k <= half; ++k) {
          sum += std::norm(oracle::naive_dft(std::span<const double>(padded), k * folds));
        }
        return sum;
      });

      const Timed folded = time_repeats(config.repeats, [&] {
        // A fresh cache per repeat so each run pays for its own cosine table.
        CosineCache cache;
        const PeriodSpectrum spectrum = spectrum_for_modulus(x, modulus, cache);
        double sum = 0.0;
        for (double p : spectrum.powers) sum += p;
        return sum;
      });

      if (std::abs(naive.checksum - folded.checksum) > kChecksumTolerance * std::max(1.0, std::abs(naive.checksum))) {
        throw InternalConsistencyError("checksum mismatch at m=" + std::to_string(m) + ", l=" +
                                       std::to_string(modulus) + ": naive " + format_number(naive.checksum) +
                                       " vs folded " + format_number(folded.checksum));
      }
      records.push_back(to_record(m, modulus, "naive", naive));
      records.push_back(to_record(m, modulus, "folded", folded));
    }
  }
  return records;
}

std::string render_bench_csv(const std::vector<BenchRecord>& records) {
  std::string out = "m,l,method,trig_count,madd_count,ns_median,checksum\n";
  for (const auto& r : records) {
    out += std::to_string(r.m) + "," + std::to_string(r.modulus) + "," + r.method + "," + std::to_string(r.trig_count) +
           "," + std::to_string(r.madd_count) + "," + std::to_string(r.ns_median) + "," + format_number(r.checksum) +
           "\n";
  }
  return out;
}

}  // namespace fracspec
