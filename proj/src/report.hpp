#pragma once

// Report assembly and rendering for the command-line front end.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sequence.hpp"
#include "spectra.hpp"

namespace fracspec {

struct ReportRow {
  int modulus = 0;
  int k = 0;
  Period period;
  double fps = 0.0;
};

struct SpectrumReport {
  std::string input;
  std::string mapping;
  int modulus = 0;
  std::size_t length_original = 0;
  std::size_t length_padded = 0;
  std::size_t folds = 0;
  std::vector<ReportRow> rows;  // ascending k
  ReportRow peak;               // largest fps, smallest k on ties
};

struct ScanReport {
  std::string input;
  std::string mapping;
  int l_min = 0;
  int l_max = 0;
  std::vector<SpectrumReport> spectra;
  std::vector<ReportRow> peaks;  // fps descending, then smaller l, then smaller k
  bool all_zero = false;
};

struct VerifyResult {
  int modulus = 0;
  int k = 0;
  double fast = 0.0;
  double oracle = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;  // abs_error / max(1, |oracle|)
  bool passed = false;
};

inline constexpr double kVerifyTolerance = 1e-6;

/// Rows k = 1..floor(l/2), or k = 1..l-1 when expand is set.
SpectrumReport make_report(const PeriodSpectrum& spectrum, std::string input, std::string mapping,
                           bool expand = false);
ScanReport make_scan_report(const std::vector<PeriodSpectrum>& spectra, std::string input, std::string mapping,
                            std::size_t top);

/// Compares the folding method against the brute-force DFT for one (l, k).
VerifyResult verify(const RealSequence& x, int modulus, int k);

/// 12 significant digits.
std::string format_number(double value);
/// "l/k".
std::string format_rational(Period period);
/// At most 4 decimals, trailing zeros trimmed but at least one kept: 3.0, 3.6, 1.3333.
std::string format_decimal(Period period);

std::string render_csv(const SpectrumReport& report);
std::string render_json(const SpectrumReport& report);
std::string render_csv(const ScanReport& report);  // the peak table
std::string render_json(const ScanReport& report);
std::string render_csv(const VerifyResult& result);
std::string render_json(const VerifyResult& result);

/// Bar chart of FPS against period with the peak highlighted.
std::string render_svg(const SpectrumReport& report);

/// Writes through a temporary file in the same directory and renames it into
/// place, so a failed write never leaves a partial file at path.
void write_file_atomic(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

}  // namespace fracspec
