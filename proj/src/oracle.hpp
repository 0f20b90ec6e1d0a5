#pragma once

// Brute-force reference implementations used to check the folding method.
// Nothing here calls into spectra.cpp: every transform is a literal sum with
// the twiddle factor evaluated per term from its reduced angle.

#include <complex>
#include <cstdint>
#include <span>

#include "sequence.hpp"

namespace fracspec {

struct CongruenceSequence;

namespace oracle {

using Complex = std::complex<double>;

/// X(k) = sum_j x[j] * exp(-i*2*pi*k*j/m), 0 <= k < m.
Complex naive_dft(std::span<const double> x, long long k);
Complex naive_dft(const RealSequence& x, long long k);

/// |X(k)|^2. naive_fps(x, 0) is the DC power excluded from PeriodSpectrum.
double naive_fps(const RealSequence& x, long long k);

/// Ground-truth FPS(l/k): pad x with trailing zeros to a multiple of l,
/// then |X(k*n)|^2 with n the fold count. 1 <= k <= l-1.
double oracle_fps_at_period(const RealSequence& x, int modulus, int k);

/// Coefficient matrix of the power-spectrum quadratic form,
/// b(r, s) = exp(i*2*pi*k*(r - s + exponent_offset)/l). A nonzero offset
/// deliberately breaks the structure and exists for negative tests.
struct ToeplitzForm {
  int modulus = 0;
  int frequency = 0;
  int exponent_offset = 0;

  Complex entry(int r, int s) const;
};

/// Quadratic form sum_r sum_s y[r] * b(r,s) * y[s]. Throws
/// InternalConsistencyError if the imaginary residue exceeds 1e-9 relative.
double toeplitz_fps(std::span<const double> y, int k);
double toeplitz_fps(const CongruenceSequence& y, int k);

/// Samples random (r, s) pairs and checks Hermitian symmetry, dependence on
/// r - s only and a unit diagonal, each to 1e-12.
bool check_toeplitz_structure(const ToeplitzForm& form, int samples, std::uint64_t seed = 0x5eed);
bool check_toeplitz_structure(int modulus, int k, int samples, std::uint64_t seed = 0x5eed);

}  // namespace oracle
}  // namespace fracspec
