#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "oracle.hpp"

namespace fracspec {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kCsvHeader = "modulus,k,period_rational,period_decimal,fps\n";

// Round-trips a value through its 12-digit rendering so JSON carries the same
// precision as CSV.
double rounded(double value) { return std::stod(format_number(value)); }

ordered_json row_json(const ReportRow& row) {
  return {{"modulus", row.modulus},
          {"k", row.k},
          {"period_rational", format_rational(row.period)},
          {"period_decimal", format_decimal(row.period)},
          {"fps", rounded(row.fps)}};
}

ordered_json report_json(const SpectrumReport& report) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) rows.push_back(row_json(row));
  return {{"input", report.input},
          {"mapping", report.mapping},
          {"modulus", report.modulus},
          {"length_original", report.length_original},
          {"length_padded", report.length_padded},
          {"folds", report.folds},
          {"rows", std::move(rows)},
          {"peak", row_json(report.peak)}};
}

void append_row(std::string& out, const ReportRow& row) {
  out += std::to_string(row.modulus);
  out += ',';
  out += std::to_string(row.k);
  out += ',';
  out += format_rational(row.period);
  out += ',';
  out += format_decimal(row.period);
  out += ',';
  out += format_number(row.fps);
  out += '\n';
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string format_rational(Period period) {
  return std::to_string(period.numerator) + "/" + std::to_string(period.denominator);
}

std::string format_decimal(Period period) {
  std::string text = fixed(period.value(), 4);
  while (text.back() == '0' && text[text.size() - 2] != '.') text.pop_back();
  return text;
}

SpectrumReport make_report(const PeriodSpectrum& spectrum, std::string input, std::string mapping, bool expand) {
  if (spectrum.powers.empty()) throw InvalidArgument("spectrum has no entries");
  SpectrumReport report;
  report.input = std::move(input);
  report.mapping = std::move(mapping);
  report.modulus = spectrum.modulus;
  report.length_original = spectrum.source_length;
  report.length_padded = spectrum.padded_length;
  report.folds = spectrum.folds;

  const int last = expand ? spectrum.modulus - 1 : spectrum.modulus / 2;
  for (int k = 1; k <= last; ++k) {
    report.rows.push_back({spectrum.modulus, k, Period{spectrum.modulus, k}, spectrum.power(k)});
  }
  report.peak = report.rows.front();
  for (const auto& row : report.rows) {
    if (row.fps > report.peak.fps) report.peak = row;
  }
  return report;
}

ScanReport make_scan_report(const std::vector<PeriodSpectrum>& spectra, std::string input, std::string mapping,
                            std::size_t top) {
  if (spectra.empty()) throw InvalidArgument("scan produced no spectra");
  ScanReport report;
  report.l_min = spectra.front().modulus;
  report.l_max = spectra.back().modulus;
  std::vector<ReportRow> candidates;
  for (const auto& spectrum : spectra) {
    report.spectra.push_back(make_report(spectrum, input, mapping));
    const auto& rows = report.spectra.back().rows;
    candidates.insert(candidates.end(), rows.begin(), rows.end());
  }
  report.input = std::move(input);
  report.mapping = std::move(mapping);
  report.all_zero = std::all_of(candidates.begin(), candidates.end(), [](const ReportRow& r) { return r.fps == 0.0; });

  std::stable_sort(candidates.begin(), candidates.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.fps != b.fps) return a.fps > b.fps;
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    return a.k < b.k;
  });
  candidates.resize(std::min(top, candidates.size()));
  report.peaks = std::move(candidates);
  return report;
}

VerifyResult verify(const RealSequence& x, int modulus, int k) {
  if (modulus < 2) throw InvalidArgument("modulus must be at least 2");
  if (k < 1 || k >= modulus) {
    throw InvalidArgument("k must be in [1, " + std::to_string(modulus - 1) + "], got " + std::to_string(k));
  }
  VerifyResult result;
  result.modulus = modulus;
  result.k = k;
  result.fast = spectrum_for_modulus(x, modulus).power(k);
  result.oracle = oracle::oracle_fps_at_period(x, modulus, k);
  result.abs_error = std::abs(result.fast - result.oracle);
  result.rel_error = result.abs_error / std::max(1.0, std::abs(result.oracle));
  result.passed = result.rel_error <= kVerifyTolerance;
  return result;
}

std::string render_csv(const SpectrumReport& report) {
  std::string out(kCsvHeader);
  for (const auto& row : report.rows) append_row(out, row);
  return out;
}

std::string render_json(const SpectrumReport& report) { return report_json(report).dump(2) + "\n"; }

std::string render_csv(const ScanReport& report) {
  std::string out(kCsvHeader);
  for (const auto& row : report.peaks) append_row(out, row);
  return out;
}

std::string render_json(const ScanReport& report) {
  ordered_json spectra = ordered_json::array();
  for (const auto& s : report.spectra) spectra.push_back(report_json(s));
  ordered_json peaks = ordered_json::array();
  for (const auto& p : report.peaks) peaks.push_back(row_json(p));
  const ordered_json doc = {{"input", report.input},
                            {"mapping", report.mapping},
                            {"l_min", report.l_min},
                            {"l_max", report.l_max},
                            {"all_zero", report.all_zero},
                            {"peaks", std::move(peaks)},
                            {"spectra", std::move(spectra)}};
  return doc.dump(2) + "\n";
}

std::string render_csv(const VerifyResult& result) {
  return "modulus,k,fast,oracle,abs_error,rel_error,passed\n" + std::to_string(result.modulus) + "," +
         std::to_string(result.k) + "," + format_number(result.fast) + "," + format_number(result.oracle) + "," +
         format_number(result.abs_error) + "," + format_number(result.rel_error) + "," +
         (result.passed ? "true" : "false") + "\n";
}

std::string render_json(const VerifyResult& result) {
  const ordered_json doc = {{"modulus", result.modulus},         {"k", result.k},
                            {"fast", rounded(result.fast)},      {"oracle", rounded(result.oracle)},
                            {"abs_error", rounded(result.abs_error)}, {"rel_error", rounded(result.rel_error)},
                            {"passed", result.passed}};
  return doc.dump(2) + "\n";
}

std::string render_svg(const SpectrumReport& report) {
  if (report.rows.empty()) throw InvalidArgument("cannot chart an empty report");

  constexpr double width = 800, height = 420;
  constexpr double left = 80, right = 20, top = 50, bottom = 70;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  // Shortest period on the left.
  std::vector<ReportRow> bars = report.rows;
  std::stable_sort(bars.begin(), bars.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.period.value() < b.period.value(); });
  double y_max = 0.0;
  for (const auto& b : bars) y_max = std::max(y_max, b.fps);
  if (y_max <= 0.0) y_max = 1.0;

  const double slot = plot_w / static_cast<double>(bars.size());
  const double bar_w = slot * 0.7;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
      << xml_escape(report.input) << " - FPS(" << report.modulus << "/k)</text>\n";

  for (int i = 0; i <= 4; ++i) {
    const double value = y_max * i / 4.0;
    const double y = top + plot_h - plot_h * i / 4.0;
    svg << "<line x1=\"" << left << "\" y1=\"" << fixed(y, 2) << "\" x2=\"" << width - right << "\" y2=\""
        << fixed(y, 2) << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << left - 6 << "\" y=\"" << fixed(y + 4, 2) << "\" text-anchor=\"end\">"
        << format_number(value) << "</text>\n";
  }
  svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << width - right << "\" y2=\""
      << top + plot_h << "\" stroke=\"black\"/>\n";

  for (std::size_t i = 0; i < bars.size(); ++i) {
    const auto& b = bars[i];
    const bool is_peak = b.k == report.peak.k;
    const double h = plot_h * b.fps / y_max;
    const double x = left + slot * static_cast<double>(i) + (slot - bar_w) / 2;
    const double cx = x + bar_w / 2;
    svg << "<rect x=\"" << fixed(x, 2) << "\" y=\"" << fixed(top + plot_h - h, 2) << "\" width=\"" << fixed(bar_w, 2)
        << "\" height=\"" << fixed(h, 2) << "\" fill=\"" << (is_peak ? "#d62728" : "#1f77b4") << "\"><title>"
        << format_rational(b.period) << " = " << format_decimal(b.period) << ": " << format_number(b.fps)
        << "</title></rect>\n";
    svg << "<text x=\"" << fixed(cx, 2) << "\" y=\"" << fixed(top + plot_h + 14, 2) << "\" text-anchor=\"middle\">"
        << format_decimal(b.period) << "</text>\n";
    if (is_peak) {
      svg << "<text x=\"" << fixed(cx, 2) << "\" y=\"" << fixed(top + plot_h - h - 6, 2)
          << "\" text-anchor=\"middle\" fill=\"#d62728\">peak " << format_rational(b.period) << " = "
          << format_decimal(b.period) << "</text>\n";
    }
  }
  svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 20 << "\" text-anchor=\"middle\">period</text>\n";
  svg << "<text x=\"18\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << top + plot_h / 2 << ")\">FPS</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  std::random_device rd;
  fs::path temp = target;
  temp += ".tmp-" + std::to_string(rd());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + temp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw IoError("failed writing " + temp.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(temp, ignored);
    throw IoError("cannot move output into place at " + path + ": " + ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path);
  return std::move(buffer).str();
}

}  // namespace fracspec
