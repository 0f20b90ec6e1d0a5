#include "spectra.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "tally.hpp"

namespace fracspec {
namespace {

// Values in [-kClampTolerance * z[0], 0) are rounding noise on a true zero.
constexpr double kClampTolerance = 1e-9;
// Each of the floor(l/2) terms is bounded by 2*z[0], so the accumulated
// rounding error stays below modulus * kNoiseUlps * eps * z[0].
constexpr double kNoiseUlps = 4.0;

void require_modulus(int modulus) {
  if (modulus < 2) throw InvalidArgument("modulus must be at least 2, got " + std::to_string(modulus));
}

void require_matching(const ShiftSums& sums, const CosineTable& table) {
  if (sums.modulus != table.modulus()) {
    throw InvalidArgument("shift sums modulus " + std::to_string(sums.modulus) + " does not match cosine table modulus " +
                          std::to_string(table.modulus()));
  }
}

double clamp_power(double value, double z0, int modulus) {
#ifdef FRACSPEC_FAULT_INJECTION
  value = value * 1.001 + 1.0;
#endif
  const double noise = kNoiseUlps * modulus * std::numeric_limits<double>::epsilon() * z0;
  if (std::abs(value) <= noise) return 0.0;
  if (value >= 0.0) return value;
  if (value >= -kClampTolerance * z0) return 0.0;
  throw InternalConsistencyError("power spectrum value " + std::to_string(value) +
                                 " is negative beyond rounding tolerance");
}

}  // namespace

double PeriodSpectrum::power(int k) const {
  if (k < 1 || k >= modulus) {
    throw InvalidArgument("k must be in [1, " + std::to_string(modulus - 1) + "], got " + std::to_string(k));
  }
  return powers[static_cast<std::size_t>(std::min(k, modulus - k) - 1)];
}

RealSequence pad_to_multiple(const RealSequence& x, int modulus) {
  require_modulus(modulus);
  const auto l = static_cast<std::size_t>(modulus);
  const std::size_t m = x.size();
  const std::size_t padded = (m + l - 1) / l * l;
  if (padded == m) return x;
  std::vector<double> samples(x.samples().begin(), x.samples().end());
  samples.resize(padded, 0.0);
  return RealSequence(std::move(samples));
}

CongruenceSequence fold(const RealSequence& x, int modulus) {
  require_modulus(modulus);
  const auto l = static_cast<std::size_t>(modulus);
  const std::size_t m = x.size();
  if (m % l != 0) {
    throw InvalidArgument("sequence length " + std::to_string(m) + " is not a multiple of modulus " +
                          std::to_string(modulus) + "; pad first");
  }
  CongruenceSequence y;
  y.modulus = modulus;
  y.folds = m / l;
  y.source_length = m;
  y.values.assign(l, 0.0);
  const auto samples = x.samples();
  for (std::size_t block = 0; block < m; block += l) {
    for (std::size_t t = 0; t < l; ++t) y.values[t] += samples[block + t];
  }
  tally::add_madd(m);
  return y;
}

ShiftSums shift_sums(const CongruenceSequence& y) {
  require_modulus(y.modulus);
  const auto l = static_cast<std::size_t>(y.modulus);
  if (y.values.size() != l) throw InvalidArgument("congruence sequence length does not match its modulus");
  const std::size_t half = l / 2;
  const auto& v = y.values;

  ShiftSums sums;
  sums.modulus = y.modulus;
  sums.z.assign(half + 1, 0.0);
  for (std::size_t q = 0; q <= half; ++q) {
    double acc = 0.0;
    // Split the circular index range to avoid a modulo per term.
    for (std::size_t t = 0; t + q < l; ++t) acc += v[t] * v[t + q];
    for (std::size_t t = l - q; t < l; ++t) acc += v[t] * v[t + q - l];
    sums.z[q] = acc;
  }
  std::uint64_t madds = l * (half + 1);
  if (l % 2 == 0) {
    double acc = 0.0;
    for (std::size_t t = 0; t < half; ++t) acc += v[t] * v[t + half];
    sums.half_sum = acc;
    madds += half;
  }
  tally::add_madd(madds);
  return sums;
}

CosineTable CosineTable::compute(int modulus) {
  require_modulus(modulus);
  const auto half = static_cast<std::size_t>(modulus / 2);
  std::vector<double> values(half + 1);
  for (std::size_t q = 0; q <= half; ++q) {
    values[q] = std::cos(2.0 * std::numbers::pi * static_cast<double>(q) / modulus);
  }
  tally::add_trig(half + 1);
  return CosineTable(modulus, std::move(values));
}

std::shared_ptr<const CosineTable> CosineCache::get(int modulus) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = tables_.find(modulus); it != tables_.end()) return it->second;
  }
  auto table = std::make_shared<const CosineTable>(CosineTable::compute(modulus));
  tables_built_.fetch_add(1, std::memory_order_relaxed);
  cos_evaluations_.fetch_add(table->values().size(), std::memory_order_relaxed);
  std::unique_lock lock(mutex_);
  return tables_.try_emplace(modulus, std::move(table)).first->second;
}

CosineCache::Stats CosineCache::stats() const noexcept {
  return {tables_built_.load(std::memory_order_relaxed), cos_evaluations_.load(std::memory_order_relaxed)};
}

void CosineCache::clear() {
  std::unique_lock lock(mutex_);
  tables_.clear();
}

CosineCache& CosineCache::global() {
  static CosineCache cache;
  return cache;
}

std::shared_ptr<const CosineTable> cosine_table(int modulus, CosineCache& cache) {
  require_modulus(modulus);
  return cache.get(modulus);
}

double fps_integer(const ShiftSums& sums, const CosineTable& table) {
  require_matching(sums, table);
  const int l = sums.modulus;
  const auto half = static_cast<std::size_t>(l / 2);
  double power = sums.z[0];
  for (std::size_t q = 1; q < half; ++q) power += 2.0 * sums.z[q] * table[q];
  if (l % 2 == 1) {
    power += 2.0 * sums.z[half] * table[half];
  } else {
    power += 2.0 * sums.half_sum.value() * table[half];
  }
  tally::add_madd(half);
  return clamp_power(power, sums.z[0], l);
}

double fps_fractional(const ShiftSums& sums, const CosineTable& table, int k) {
  require_matching(sums, table);
  const int l = sums.modulus;
  const int half = l / 2;
  if (k < 2 || k > half) {
    throw InvalidArgument("fractional index k must be in [2, " + std::to_string(half) + "], got " + std::to_string(k));
  }
  const bool even = l % 2 == 0;
  double power = sums.z[0];
  for (int q = 1; q <= half; ++q) {
    // cos(2*pi*k*q/l) == cos(2*pi*t/l) with t the reflected residue of k*q.
    const int p = static_cast<int>((static_cast<long long>(k) * q) % l);
    const int t = p <= half ? p : l - p;
    const double shift = (even && q == half) ? *sums.half_sum : sums.z[static_cast<std::size_t>(q)];
    power += 2.0 * table[static_cast<std::size_t>(t)] * shift;
  }
  tally::add_madd(static_cast<std::uint64_t>(half));
  return clamp_power(power, sums.z[0], l);
}

PeriodSpectrum spectrum_for_modulus(const RealSequence& x, int modulus, CosineCache& cache) {
  require_modulus(modulus);
  const RealSequence padded = pad_to_multiple(x, modulus);
  const CongruenceSequence y = fold(padded, modulus);
  const ShiftSums sums = shift_sums(y);
  const auto table = cache.get(modulus);

  PeriodSpectrum spectrum;
  spectrum.modulus = modulus;
  spectrum.source_length = x.size();
  spectrum.padded_length = padded.size();
  spectrum.folds = y.folds;
  const int half = modulus / 2;
  spectrum.powers.reserve(static_cast<std::size_t>(half));
  spectrum.powers.push_back(fps_integer(sums, *table));
  for (int k = 2; k <= half; ++k) spectrum.powers.push_back(fps_fractional(sums, *table, k));
  return spectrum;
}

std::vector<SpectrumEntry> expand_symmetric(const PeriodSpectrum& spectrum) {
  const int l = spectrum.modulus;
  std::vector<SpectrumEntry> entries;
  entries.reserve(static_cast<std::size_t>(l - 1));
  for (int k = 1; k < l; ++k) entries.push_back({k, Period{l, k}, spectrum.power(k)});
  return entries;
}

std::vector<PeriodSpectrum> scan(const RealSequence& x, int l_min, int l_max, const ScanOptions& options) {
  if (l_min < 2 || l_max < l_min) {
    throw InvalidArgument("invalid modulus range [" + std::to_string(l_min) + ", " + std::to_string(l_max) + "]");
  }
  if (static_cast<std::size_t>(l_max) > x.size()) {
    throw InvalidArgument("l_max " + std::to_string(l_max) + " exceeds sequence length " + std::to_string(x.size()));
  }
  CosineCache& cache = options.cache != nullptr ? *options.cache : CosineCache::global();
  const auto count = static_cast<std::size_t>(l_max - l_min + 1);
  std::vector<PeriodSpectrum> spectra(count);

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) spectra[i] = spectrum_for_modulus(x, l_min + static_cast<int>(i), cache);
    return spectra;
  }

  // Strided partition; each worker writes only its own slots.
  std::vector<std::future<void>> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += threads) {
        spectra[i] = spectrum_for_modulus(x, l_min + static_cast<int>(i), cache);
      }
    }));
  }
  for (auto& worker : workers) worker.get();
  return spectra;
}

}  // namespace fracspec
