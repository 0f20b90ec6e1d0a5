// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any gating line fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bench.hpp"
#include "oracle.hpp"
#include "seqmap.hpp"
#include "spectra.hpp"
#include "tally.hpp"

using namespace fracspec;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

double rel_error(double actual, double expected) {
  return std::abs(actual - expected) / std::max(1.0, std::abs(expected));
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::vector<RealSequence> corpus() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> length(3, 512);
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  std::vector<RealSequence> out;
  for (int i = 0; i < 200; ++i) {
    std::vector<double> v(length(rng));
    for (double& s : v) s = value(rng);
    out.emplace_back(std::move(v));
  }
  return out;
}

Outcome oracle_equivalence(const std::vector<RealSequence>& xs) {
  double worst = 0.0;
  std::size_t checks = 0;
  for (const auto& x : xs) {
    for (int l = 2; l <= 64; ++l) {
      const auto s = spectrum_for_modulus(x, l);
      for (int k = 1; k <= l / 2; ++k) {
        worst = std::max(worst, rel_error(s.powers[static_cast<std::size_t>(k - 1)], oracle::oracle_fps_at_period(x, l, k)));
        ++checks;
      }
    }
  }
  return {worst <= 1e-6, fmt("%zu values, worst relative error %.3g (tol 1e-6)", checks, worst)};
}

Outcome fold_identity(const std::vector<RealSequence>& xs) {
  double worst = 0.0;
  std::size_t checks = 0;
  for (const auto& x : xs) {
    for (int l = 2; l <= 64; ++l) {
      const auto padded = pad_to_multiple(x, l);
      const auto y = fold(padded, l);
      const auto n = static_cast<long long>(y.folds);
      for (int k = 1; k <= l / 2; ++k) {
        const auto folded = oracle::naive_dft(y.values, k);
        const auto full = oracle::naive_dft(padded, k * n);
        const double scale = std::max(1.0, std::abs(full));
        worst = std::max({worst, std::abs(folded.real() - full.real()) / scale,
                          std::abs(folded.imag() - full.imag()) / scale});
        ++checks;
      }
    }
  }
  return {worst <= 1e-9, fmt("%zu complex values, worst component error %.3g (tol 1e-9)", checks, worst)};
}

Outcome toeplitz_suite() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  double worst = 0.0;
  std::size_t checks = 0;
  for (int trial = 0; trial < 5; ++trial) {
    for (int l = 2; l <= 64; ++l) {
      std::vector<double> y(static_cast<std::size_t>(l));
      for (double& v : y) v = value(rng);
      for (int k = 1; k < l; ++k) {
        worst = std::max(worst, rel_error(oracle::toeplitz_fps(y, k), std::norm(oracle::naive_dft(y, k))));
        ++checks;
      }
    }
  }
  std::uniform_int_distribution<int> modulus(2, 64);
  int structural_failures = 0;
  for (int probe = 0; probe < 1000; ++probe) {
    const int l = modulus(rng);
    const int k = std::uniform_int_distribution<int>(1, l - 1)(rng);
    if (!oracle::check_toeplitz_structure(l, k, 1, rng())) ++structural_failures;
  }
  return {worst <= 1e-9 && structural_failures == 0,
          fmt("%zu forms, worst relative error %.3g (tol 1e-9); %d/1000 structure probes failed", checks, worst,
              structural_failures)};
}

Outcome symmetry(const std::vector<RealSequence>& xs) {
  std::size_t mismatches = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); i += 4) {
    const auto& x = xs[i];
    for (int l = 2; l <= 64; ++l) {
      const auto entries = expand_symmetric(spectrum_for_modulus(x, l));
      for (int k = 1; k < l; ++k) {
        if (entries[static_cast<std::size_t>(k - 1)].power != entries[static_cast<std::size_t>(l - k - 1)].power) ++mismatches;
        worst = std::max(worst, rel_error(oracle::oracle_fps_at_period(x, l, k), oracle::oracle_fps_at_period(x, l, l - k)));
      }
    }
  }
  return {mismatches == 0 && worst <= 1e-9,
          fmt("%zu inexact expanded pairs; oracle worst relative error %.3g (tol 1e-9)", mismatches, worst)};
}

Outcome hand_fixture() {
  const RealSequence x(std::vector<double>{1, 2, 3, 4, 5, 6});
  const auto y = fold(x, 3);
  const auto z = shift_sums(y);
  CosineCache cache;
  const double fps = fps_integer(z, *cosine_table(3, cache));
  bool ok = y.values == std::vector<double>{5, 7, 9} && z.z == std::vector<double>{155, 143} && std::abs(fps - 12.0) <= 1e-12;

  // Constant input: exact zeros whenever the modulus divides the length (no zero padding).
  int nonzero = 0;
  for (double c : {-3.5, 1.0, 7.25}) {
    const RealSequence flat(std::vector<double>(720, c));
    for (int l = 2; l <= 64; ++l) {
      if (720 % l != 0) continue;
      for (double p : spectrum_for_modulus(flat, l).powers) nonzero += p != 0.0;
    }
  }
  ok = ok && nonzero == 0;
  return {ok, fmt("y=[%g,%g,%g] z=[%g,%g] FPS(3/1)=%.15g; %d nonzero powers for constant inputs", y.values[0],
                  y.values[1], y.values[2], z.z[0], z.z[1], fps, nonzero)};
}

struct Protein {
  RealSequence x;
  PeriodSpectrum l18;
  PeriodSpectrum l36;
};

Protein protein_fixture() {
  std::ifstream in(std::string(FRACSPEC_DATA_DIR) + "/4gax_chain_a.fasta");
  const auto records = parse_fasta(in, Alphabet::protein);
  auto x = map_hydrophobicity(records.at(0));
  auto l18 = spectrum_for_modulus(x, 18);
  auto l36 = spectrum_for_modulus(x, 36);
  return {std::move(x), std::move(l18), std::move(l36)};
}

int peak_k(const PeriodSpectrum& s) {
  return static_cast<int>(std::max_element(s.powers.begin(), s.powers.end()) - s.powers.begin()) + 1;
}

Outcome protein_qualitative(const Protein& p) {
  const int k18 = peak_k(p.l18);
  const int k36 = peak_k(p.l36);
  double worst = 0.0;
  for (int l = 2; l <= 64; ++l) {
    const auto s = spectrum_for_modulus(p.x, l);
    for (int k = 1; k <= l / 2; ++k) {
      worst = std::max(worst, rel_error(s.powers[static_cast<std::size_t>(k - 1)], oracle::oracle_fps_at_period(p.x, l, k)));
    }
  }
  return {k18 == 5 && k36 == 10 && worst <= 1e-6,
          fmt("m=%zu, l=18 peak k=%d, l=36 peak k=%d (want 5 and 10); oracle worst relative error %.3g", p.x.size(),
              k18, k36, worst)};
}

Outcome protein_quantitative(const Protein& p) {
  const double published[] = {563.84, 5267.3, 3936.1, 1116.7, 21864, 4381.2, 939.8, 2165, 1681};
  double worst = 0.0;
  std::string values;
  for (std::size_t i = 0; i < 9; ++i) {
    worst = std::max(worst, std::abs(p.l18.powers[i] - published[i]) / published[i]);
    values += fmt("%s%.6g", i ? "," : "", p.l18.powers[i]);
  }
  return {worst <= 0.01, fmt("l=18 [%s], worst relative deviation from published %.3g (tol 0.01)", values.c_str(), worst)};
}

Outcome cosine_reuse() {
  CosineCache cache;
  OpTally ops;
  {
    TallyScope scope(ops);
    const RealSequence x(std::vector<double>(360, 1.5));
    const auto sums = shift_sums(fold(x, 36));
    const auto table = cosine_table(36, cache);
    (void)fps_integer(sums, *table);
    for (int k = 2; k <= 18; ++k) (void)fps_fractional(sums, *table, k);
  }
  const auto built = cache.stats().cos_evaluations;
  return {ops.trig == 19 && built == 19,
          fmt("%llu trig evaluations tallied, %llu recorded by the cache (want 19)",
              static_cast<unsigned long long>(ops.trig), static_cast<unsigned long long>(built))};
}

Outcome bench_gate() {
  const auto records = run_bench({{100000}, {36}, 5, 42});
  const BenchRecord* naive = nullptr;
  const BenchRecord* folded = nullptr;
  for (const auto& r : records) (r.method == "naive" ? naive : folded) = &r;
  const bool sums_match = std::abs(naive->checksum - folded->checksum) <= 1e-6 * std::abs(naive->checksum);
  return {sums_match && folded->ns_median < naive->ns_median,
          fmt("median naive %.0f ns, folded %.0f ns; checksums %.12g vs %.12g", static_cast<double>(naive->ns_median),
              static_cast<double>(folded->ns_median), naive->checksum, folded->checksum)};
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&](const char* id, const char* name, const std::function<Outcome()>& check, bool gating = true) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed && gating) ++failures;
    std::printf("%s %-3s %s: %s [%.1fs]%s\n", o.passed ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs,
                gating ? "" : " (not gating)");
    std::fflush(stdout);
  };

  const auto xs = corpus();
  report("1", "folded spectra match the padded DFT", [&] { return oracle_equivalence(xs); });
  report("2", "fold DFT at k equals padded DFT at k*n", [&] { return fold_identity(xs); });
  report("3", "Hermitian Toeplitz form", toeplitz_suite);
  report("4", "spectrum symmetry k <-> l-k", [&] { return symmetry(xs); });
  report("5", "hand fixture and constant input", hand_fixture);
  const auto protein = protein_fixture();
  report("6", "protein hydropathy peaks at period 3.6", [&] { return protein_qualitative(protein); });
  report("6q", "protein hydropathy published values within 1%", [&] { return protein_quantitative(protein); }, false);
  report("7", "one cosine table of 19 values for l=36", cosine_reuse);
  report("8", "folded path faster than per-frequency DFT", bench_gate);
  return failures == 0 ? 0 : 1;
}
