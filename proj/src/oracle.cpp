#include "oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "spectra.hpp"
#include "tally.hpp"

namespace fracspec::oracle {
namespace {

constexpr double kImagTolerance = 1e-9;
constexpr double kStructureTolerance = 1e-12;

// exp(i*2*pi*numerator/denominator) with the numerator reduced first so the
// angle stays in [0, 2*pi).
Complex unit_root(long long numerator, long long denominator) {
  long long reduced = numerator % denominator;
  if (reduced < 0) reduced += denominator;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduced) / static_cast<double>(denominator);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

Complex naive_dft(std::span<const double> x, long long k) {
  const auto m = static_cast<long long>(x.size());
  if (m == 0) throw InvalidArgument("naive_dft of an empty sequence");
  if (k < 0 || k >= m) {
    throw InvalidArgument("frequency " + std::to_string(k) + " outside [0, " + std::to_string(m - 1) + "]");
  }
  double re = 0.0;
  double im = 0.0;
  for (long long j = 0; j < m; ++j) {
    const Complex w = unit_root(-k * j, m);
    re += x[static_cast<std::size_t>(j)] * w.real();
    im += x[static_cast<std::size_t>(j)] * w.imag();
  }
  tally::add_trig(2 * static_cast<std::uint64_t>(m));
  tally::add_madd(2 * static_cast<std::uint64_t>(m));
  return {re, im};
}

Complex naive_dft(const RealSequence& x, long long k) { return naive_dft(x.samples(), k); }

double naive_fps(const RealSequence& x, long long k) { return std::norm(naive_dft(x, k)); }

double oracle_fps_at_period(const RealSequence& x, int modulus, int k) {
  if (modulus < 2) throw InvalidArgument("modulus must be at least 2");
  if (k < 1 || k >= modulus) throw InvalidArgument("k must be in [1, l-1]");
  const auto l = static_cast<std::size_t>(modulus);
  std::vector<double> padded(x.samples().begin(), x.samples().end());
  padded.resize((padded.size() + l - 1) / l * l, 0.0);
  const auto folds = static_cast<long long>(padded.size() / l);
  return std::norm(naive_dft(std::span<const double>(padded), k * folds));
}

Complex ToeplitzForm::entry(int r, int s) const {
  return unit_root(static_cast<long long>(frequency) * (r - s + exponent_offset), modulus);
}

double toeplitz_fps(std::span<const double> y, int k) {
  const auto l = static_cast<int>(y.size());
  if (l < 2) throw InvalidArgument("toeplitz_fps needs at least 2 values");
  if (k < 1 || k >= l) throw InvalidArgument("k must be in [1, l-1]");
  const ToeplitzForm form{l, k, 0};
  Complex acc{0.0, 0.0};
  double scale = 0.0;
  for (int r = 0; r < l; ++r) {
    for (int s = 0; s < l; ++s) {
      const double yy = y[static_cast<std::size_t>(r)] * y[static_cast<std::size_t>(s)];
      acc += yy * form.entry(r, s);
      scale += std::abs(yy);
    }
  }
  if (std::abs(acc.imag()) > kImagTolerance * std::max(1.0, scale)) {
    throw InternalConsistencyError("Toeplitz quadratic form has imaginary residue " + std::to_string(acc.imag()));
  }
  return acc.real();
}

double toeplitz_fps(const CongruenceSequence& y, int k) { return toeplitz_fps(std::span<const double>(y.values), k); }

bool check_toeplitz_structure(const ToeplitzForm& form, int samples, std::uint64_t seed) {
  if (form.modulus < 2) throw InvalidArgument("modulus must be at least 2");
  const int l = form.modulus;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> index(0, l - 1);
  auto close = [](Complex a, Complex b) { return std::abs(a - b) <= kStructureTolerance; };

  for (int i = 0; i < samples; ++i) {
    const int r = index(rng);
    const int s = index(rng);
    if (!close(form.entry(r, s), std::conj(form.entry(s, r)))) return false;
    if (!close(form.entry(r, r), Complex{1.0, 0.0})) return false;
    // Shift both indices along the same diagonal.
    const int lo = std::max(0, std::max(-r, -s));
    const int hi = std::min(l - 1 - r, l - 1 - s);
    const int shift = std::uniform_int_distribution<int>(lo, hi)(rng);
    if (!close(form.entry(r, s), form.entry(r + shift, s + shift))) return false;
  }
  return true;
}

bool check_toeplitz_structure(int modulus, int k, int samples, std::uint64_t seed) {
  return check_toeplitz_structure(ToeplitzForm{modulus, k, 0}, samples, seed);
}

}  // namespace fracspec::oracle
