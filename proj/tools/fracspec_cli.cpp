// fracspec command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracspec/fracspec.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;

struct SequenceDeleter {
  void operator()(fracspec_sequence* p) const { fracspec_sequence_free(p); }
};
struct SpectrumDeleter {
  void operator()(fracspec_spectrum* p) const { fracspec_spectrum_free(p); }
};
struct ScanDeleter {
  void operator()(fracspec_scan* p) const { fracspec_scan_free(p); }
};
struct BenchDeleter {
  void operator()(fracspec_bench* p) const { fracspec_bench_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { fracspec_string_free(p); }
};
using CString = std::unique_ptr<char, StringDeleter>;

// Carries a library failure out to main() with its exit code.
struct Failure {
  int exit_code;
  std::string message;
};

void check(fracspec_status status, const char* context) {
  if (status == FRACSPEC_OK) return;
  const int code = status == FRACSPEC_ERR_INTERNAL ? kExitInternal : kExitUsage;
  throw Failure{code, std::string(context) + ": " + fracspec_last_error()};
}

struct InputOptions {
  std::string path;
  std::string mapping = "none";
  std::string unknown = "zero";
  bool center = false;
  std::size_t record = 0;
};

struct OutputOptions {
  std::string format = "csv";
  std::string out;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "Numeric file (--map none) or FASTA file")->required();
  cmd->add_option("--map", in.mapping, "none | hydropathy | indicator:<A|C|G|T> | table:<path>");
  cmd->add_option("--unknown", in.unknown, "Non-standard residues")->check(CLI::IsMember({"zero", "error", "skip"}));
  cmd->add_flag("--center", in.center, "Subtract the mean after mapping");
  cmd->add_option("--record", in.record, "0-based FASTA record index");
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", out.out, "Write the report here instead of stdout");
}

fracspec_format to_format(const std::string& name) { return name == "json" ? FRACSPEC_FORMAT_JSON : FRACSPEC_FORMAT_CSV; }

std::unique_ptr<fracspec_sequence, SequenceDeleter> load(const InputOptions& in) {
  fracspec_load_options options;
  fracspec_load_options_init(&options);
  options.mapping = in.mapping.c_str();
  options.unknown = in.unknown == "error"  ? FRACSPEC_UNKNOWN_ERROR
                    : in.unknown == "skip" ? FRACSPEC_UNKNOWN_SKIP
                                           : FRACSPEC_UNKNOWN_ZERO;
  options.center = in.center ? 1 : 0;
  options.record = in.record;
  fracspec_sequence* seq = nullptr;
  check(fracspec_sequence_load(in.path.c_str(), &options, &seq), "loading input");
  return std::unique_ptr<fracspec_sequence, SequenceDeleter>(seq);
}

void emit(const char* text, const std::string& path) {
  const std::string_view content(text);
  if (path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    std::fflush(stdout);
    return;
  }
  check(fracspec_write_file(path.c_str(), content.data(), content.size()), "writing output");
}

int run_spectrum(const InputOptions& in, const OutputOptions& out, int modulus, bool expand, const std::string& svg) {
  auto seq = load(in);
  fracspec_spectrum* raw = nullptr;
  check(fracspec_spectrum_compute(seq.get(), modulus, &raw), "computing spectrum");
  std::unique_ptr<fracspec_spectrum, SpectrumDeleter> spectrum(raw);

  // Render everything before writing anything.
  char* text = nullptr;
  check(fracspec_spectrum_render(spectrum.get(), to_format(out.format), expand ? 1 : 0, &text), "rendering report");
  CString report(text);
  CString chart;
  if (!svg.empty()) {
    char* svg_text = nullptr;
    check(fracspec_spectrum_render_svg(spectrum.get(), &svg_text), "rendering chart");
    chart.reset(svg_text);
  }
  emit(report.get(), out.out);
  if (chart) emit(chart.get(), svg);
  return kExitOk;
}

int run_scan(const InputOptions& in, const OutputOptions& out, int l_min, std::optional<int> l_max, std::size_t top,
             unsigned threads) {
  auto seq = load(in);
  const auto m = static_cast<int>(fracspec_sequence_length(seq.get()));
  const int upper = l_max.value_or(m / 2);
  fracspec_scan* raw = nullptr;
  check(fracspec_scan_compute(seq.get(), l_min, upper, threads, &raw), "scanning");
  std::unique_ptr<fracspec_scan, ScanDeleter> scan(raw);
  if (fracspec_scan_all_zero(scan.get()) != 0) {
    std::cerr << "warning: every power in the scan is zero (constant input?)\n";
  }
  char* text = nullptr;
  check(fracspec_scan_render(scan.get(), to_format(out.format), top, &text), "rendering report");
  CString report(text);
  emit(report.get(), out.out);
  return kExitOk;
}

int run_verify(const InputOptions& in, const OutputOptions& out, int modulus, int k) {
  auto seq = load(in);
  fracspec_verify_result result{};
  check(fracspec_verify(seq.get(), modulus, k, &result), "verifying");
  char* text = nullptr;
  check(fracspec_verify_render(&result, to_format(out.format), &text), "rendering result");
  CString report(text);
  emit(report.get(), out.out);
  if (result.passed == 0) {
    std::cerr << "error: folded value differs from the brute-force DFT (relative error " << result.rel_error << ")\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run_bench(const std::vector<std::size_t>& lengths, const std::vector<int>& moduli, int repeats,
              std::uint64_t seed, const std::string& out) {
  fracspec_bench_options options{lengths.data(), lengths.size(), moduli.data(), moduli.size(), repeats, seed};
  fracspec_bench* raw = nullptr;
  check(fracspec_bench_run(&options, &raw), "benchmark");
  std::unique_ptr<fracspec_bench, BenchDeleter> bench(raw);
  char* text = nullptr;
  check(fracspec_bench_render_csv(bench.get(), &text), "rendering benchmark");
  CString report(text);
  emit(report.get(), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier power spectra at integer and fractional periods"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fracspec_version());

  InputOptions spectrum_in;
  OutputOptions spectrum_out;
  int spectrum_l = 0;
  bool expand = false;
  std::string svg;
  auto* spectrum = app.add_subcommand("spectrum", "FPS(l/k) for k = 1..floor(l/2)");
  add_input_options(spectrum, spectrum_in);
  add_output_options(spectrum, spectrum_out);
  spectrum->add_option("--l", spectrum_l, "Integer period l")->required();
  spectrum->add_flag("--expand", expand, "Report k = 1..l-1");
  spectrum->add_option("--svg", svg, "Also write a bar chart");

  InputOptions scan_in;
  OutputOptions scan_out;
  int l_min = 2;
  std::optional<int> l_max;
  std::size_t top = 10;
  unsigned threads = 1;
  auto* scan = app.add_subcommand("scan", "Spectra for every l in a range and the strongest periods");
  add_input_options(scan, scan_in);
  add_output_options(scan, scan_out);
  scan->add_option("--l-min", l_min, "Smallest l");
  scan->add_option("--l-max", l_max, "Largest l (default: half the input length)");
  scan->add_option("--top", top, "Number of peaks to report");
  scan->add_option("--threads", threads, "Worker threads");

  InputOptions verify_in;
  OutputOptions verify_out;
  int verify_l = 0;
  int verify_k = 0;
  auto* verify = app.add_subcommand("verify", "Compare one FPS(l/k) against the brute-force DFT");
  add_input_options(verify, verify_in);
  add_output_options(verify, verify_out);
  verify->add_option("--l", verify_l, "Integer period l")->required();
  verify->add_option("--k", verify_k, "Fraction index k")->required();

  std::vector<std::size_t> lengths{1000, 10000, 100000};
  std::vector<int> moduli{18, 36};
  int repeats = 5;
  std::uint64_t seed = 42;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Time the folded method against per-frequency DFT");
  bench->add_option("--m", lengths, "Sequence lengths")->delimiter(',');
  bench->add_option("--l", moduli, "Moduli")->delimiter(',');
  bench->add_option("--repeats", repeats, "Repeats per measurement (>= 3)");
  bench->add_option("--seed", seed, "Input RNG seed");
  bench->add_option("--out", bench_out, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spectrum) return run_spectrum(spectrum_in, spectrum_out, spectrum_l, expand, svg);
    if (*scan) return run_scan(scan_in, scan_out, l_min, l_max, top, threads);
    if (*verify) return run_verify(verify_in, verify_out, verify_l, verify_k);
    if (*bench) return run_bench(lengths, moduli, repeats, seed, bench_out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitUsage;
}
