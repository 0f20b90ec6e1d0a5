#pragma once

// Fourier power spectra at an integer period l and its associated fractional
// periods l/k, computed by folding the input modulo l and expanding the
// squared DFT magnitude of the folded sequence in its circular shift sums.

#include <atomic>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "sequence.hpp"

namespace fracspec {

/// Length-l sequence y with y[t] = sum over j of x[j*l + t].
struct CongruenceSequence {
  std::vector<double> values;
  int modulus = 0;
  std::size_t folds = 0;          // n, with source_length == folds * modulus
  std::size_t source_length = 0;  // length of the (padded) input
};

/// Circular self-shift sums z[q] = sum_t y[t] * y[(t+q) mod l], q = 0..l/2.
/// For even l, half_sum holds the non-circular sum over t < l/2 of
/// y[t] * y[t + l/2]; the circular z[l/2] is exactly twice that.
struct ShiftSums {
  int modulus = 0;
  std::vector<double> z;
  std::optional<double> half_sum;
};

/// cos(2*pi*q/l) for q = 0..l/2.
class CosineTable {
 public:
  static CosineTable compute(int modulus);

  int modulus() const noexcept { return modulus_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](std::size_t q) const noexcept { return values_[q]; }

 private:
  CosineTable(int modulus, std::vector<double> values) : modulus_(modulus), values_(std::move(values)) {}

  int modulus_;
  std::vector<double> values_;
};

/// Thread-safe per-modulus cache of cosine tables. Concurrent misses for the
/// same modulus may both compute; the first insert wins.
class CosineCache {
 public:
  struct Stats {
    std::uint64_t tables_built = 0;
    std::uint64_t cos_evaluations = 0;
  };

  std::shared_ptr<const CosineTable> get(int modulus);
  Stats stats() const noexcept;
  void clear();

  static CosineCache& global();

 private:
  mutable std::shared_mutex mutex_;
  std::map<int, std::shared_ptr<const CosineTable>> tables_;
  std::atomic<std::uint64_t> tables_built_{0};
  std::atomic<std::uint64_t> cos_evaluations_{0};
};

/// Rational period l/k.
struct Period {
  int numerator = 0;
  int denominator = 1;
  double value() const noexcept { return static_cast<double>(numerator) / denominator; }
};

/// FPS(l/k) for k = 1..floor(l/2); powers[k-1] = FPS(l/k). The DC term is
/// not part of the spectrum.
struct PeriodSpectrum {
  int modulus = 0;
  std::vector<double> powers;
  std::size_t source_length = 0;  // before padding
  std::size_t padded_length = 0;
  std::size_t folds = 0;

  double power(int k) const;  // any k in 1..l-1, via FPS(l/k) == FPS(l/(l-k))
};

struct SpectrumEntry {
  int k = 0;
  Period period;
  double power = 0.0;
};

RealSequence pad_to_multiple(const RealSequence& x, int modulus);
CongruenceSequence fold(const RealSequence& x, int modulus);
ShiftSums shift_sums(const CongruenceSequence& y);
std::shared_ptr<const CosineTable> cosine_table(int modulus, CosineCache& cache = CosineCache::global());

/// FPS(l/1) from the shift sums.
double fps_integer(const ShiftSums& sums, const CosineTable& table);
/// FPS(l/k) for 2 <= k <= floor(l/2), reusing the k = 1 cosine table.
double fps_fractional(const ShiftSums& sums, const CosineTable& table, int k);

PeriodSpectrum spectrum_for_modulus(const RealSequence& x, int modulus,
                                    CosineCache& cache = CosineCache::global());

/// All l-1 entries k = 1..l-1.
std::vector<SpectrumEntry> expand_symmetric(const PeriodSpectrum& spectrum);

struct ScanOptions {
  unsigned threads = 1;
  CosineCache* cache = nullptr;  // null: global cache
};

/// One spectrum per modulus in [l_min, l_max], ordered by modulus.
/// Requires 2 <= l_min <= l_max <= x.size().
std::vector<PeriodSpectrum> scan(const RealSequence& x, int l_min, int l_max, const ScanOptions& options = {});

}  // namespace fracspec
