#include "fracspec/fracspec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <string_view>

#include "bench.hpp"
#include "errors.hpp"
#include "report.hpp"
#include "seqmap.hpp"
#include "spectra.hpp"

struct fracspec_sequence {
  fracspec::RealSequence samples;
  std::string label;
  std::string mapping;
};

struct fracspec_spectrum {
  fracspec::PeriodSpectrum spectrum;
  std::string input;
  std::string mapping;
};

struct fracspec_scan {
  std::vector<fracspec_spectrum> spectra;
  std::string input;
  std::string mapping;
};

struct fracspec_bench {
  std::vector<fracspec::BenchRecord> records;
};

namespace {

thread_local std::string last_error;

fracspec_status fail(fracspec_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
fracspec_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    fn();
    return FRACSPEC_OK;
  } catch (const fracspec::ParseError& e) {
    return fail(FRACSPEC_ERR_PARSE, e.what());
  } catch (const fracspec::IoError& e) {
    return fail(FRACSPEC_ERR_IO, e.what());
  } catch (const fracspec::InternalConsistencyError& e) {
    return fail(FRACSPEC_ERR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FRACSPEC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(FRACSPEC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FRACSPEC_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(FRACSPEC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FRACSPEC_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw fracspec::InvalidArgument(std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

fracspec::UnknownPolicy to_policy(fracspec_unknown_policy p) {
  switch (p) {
    case FRACSPEC_UNKNOWN_ZERO: return fracspec::UnknownPolicy::zero;
    case FRACSPEC_UNKNOWN_ERROR: return fracspec::UnknownPolicy::error;
    case FRACSPEC_UNKNOWN_SKIP: return fracspec::UnknownPolicy::skip;
  }
  throw fracspec::InvalidArgument("unknown-residue policy out of range");
}

const fracspec::SymbolicSequence& pick_record(const std::vector<fracspec::SymbolicSequence>& records,
                                              std::size_t index) {
  if (index >= records.size()) {
    throw fracspec::InvalidArgument("FASTA record " + std::to_string(index) + " requested but input has " +
                                    std::to_string(records.size()));
  }
  return records[index];
}

// A user table is protein if it covers all 20 amino acids, otherwise DNA.
fracspec::MappingScheme load_user_table(const std::string& path, fracspec::UnknownPolicy policy) {
  const std::string text = fracspec::read_file(path);
  try {
    std::istringstream in(text);
    return fracspec::load_mapping_table(in, "table:" + path, fracspec::Alphabet::protein, policy);
  } catch (const fracspec::InvalidArgument&) {
    std::istringstream in(text);
    return fracspec::load_mapping_table(in, "table:" + path, fracspec::Alphabet::dna, policy);
  }
}

fracspec_sequence* load_sequence(const std::string& path, const fracspec_load_options& options) {
  using namespace fracspec;
  const std::string_view mapping = options.mapping == nullptr ? "none" : options.mapping;
  const UnknownPolicy policy = to_policy(options.unknown);

  auto finish = [&](RealSequence x, std::string label) {
    if (options.center != 0) x = center(x);
    return new fracspec_sequence{std::move(x), std::move(label), std::string(mapping)};
  };

  if (mapping == "none") return finish(parse_numeric(read_file(path)), path);

  if (mapping == "hydropathy") {
    const auto records = parse_fasta(read_file(path), Alphabet::protein, policy);
    const auto& record = pick_record(records, options.record);
    return finish(map_hydrophobicity(record, policy), record.identifier);
  }
  if (mapping.starts_with("indicator:")) {
    const std::string_view symbol = mapping.substr(std::string_view("indicator:").size());
    if (symbol.size() != 1) throw InvalidArgument("indicator mapping needs a single symbol, e.g. indicator:A");
    const auto records = parse_fasta(read_file(path), Alphabet::dna, policy);
    const auto& record = pick_record(records, options.record);
    return finish(map_indicator(record, symbol[0]), record.identifier);
  }
  if (mapping.starts_with("table:")) {
    const MappingScheme scheme = load_user_table(std::string(mapping.substr(6)), policy);
    const auto records = parse_fasta(read_file(path), scheme.alphabet(), policy);
    const auto& record = pick_record(records, options.record);
    return finish(map_sequence(record, scheme), record.identifier);
  }
  throw InvalidArgument("unknown mapping '" + std::string(mapping) + "'");
}

fracspec::SpectrumReport to_report(const fracspec_spectrum& s, bool expand) {
  return fracspec::make_report(s.spectrum, s.input, s.mapping, expand);
}

}  // namespace

extern "C" {

const char* fracspec_version(void) { return "1.0.0"; }

const char* fracspec_last_error(void) { return last_error.c_str(); }

void fracspec_string_free(char* s) { std::free(s); }

void fracspec_load_options_init(fracspec_load_options* options) {
  if (options == nullptr) return;
  options->mapping = "none";
  options->unknown = FRACSPEC_UNKNOWN_ZERO;
  options->center = 0;
  options->record = 0;
}

fracspec_status fracspec_sequence_from_samples(const double* samples, size_t count, const char* label,
                                               fracspec_sequence** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(samples, "samples");
    fracspec::RealSequence x(std::vector<double>(samples, samples + count));
    *out = new fracspec_sequence{std::move(x), label != nullptr ? label : "samples", "none"};
  });
}

fracspec_status fracspec_sequence_load(const char* path, const fracspec_load_options* options,
                                       fracspec_sequence** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    fracspec_load_options defaults;
    fracspec_load_options_init(&defaults);
    *out = load_sequence(path, options != nullptr ? *options : defaults);
  });
}

void fracspec_sequence_free(fracspec_sequence* seq) { delete seq; }

size_t fracspec_sequence_length(const fracspec_sequence* seq) { return seq != nullptr ? seq->samples.size() : 0; }

const double* fracspec_sequence_samples(const fracspec_sequence* seq) {
  return seq != nullptr ? seq->samples.samples().data() : nullptr;
}

const char* fracspec_sequence_label(const fracspec_sequence* seq) {
  return seq != nullptr ? seq->label.c_str() : nullptr;
}

const char* fracspec_sequence_mapping(const fracspec_sequence* seq) {
  return seq != nullptr ? seq->mapping.c_str() : nullptr;
}

fracspec_status fracspec_spectrum_compute(const fracspec_sequence* seq, int modulus, fracspec_spectrum** out) {
  return guarded([&] {
    require(seq, "sequence");
    require(out, "out");
    *out = new fracspec_spectrum{fracspec::spectrum_for_modulus(seq->samples, modulus), seq->label, seq->mapping};
  });
}

void fracspec_spectrum_free(fracspec_spectrum* spectrum) { delete spectrum; }

fracspec_status fracspec_spectrum_get_info(const fracspec_spectrum* spectrum, fracspec_spectrum_info* out) {
  return guarded([&] {
    require(spectrum, "spectrum");
    require(out, "out");
    const auto& s = spectrum->spectrum;
    const auto report = to_report(*spectrum, false);
    *out = {s.modulus, s.powers.size(), s.source_length, s.padded_length, s.folds, report.peak.k, report.peak.fps};
  });
}

fracspec_status fracspec_spectrum_power(const fracspec_spectrum* spectrum, int k, double* out) {
  return guarded([&] {
    require(spectrum, "spectrum");
    require(out, "out");
    *out = spectrum->spectrum.power(k);
  });
}

fracspec_status fracspec_spectrum_render(const fracspec_spectrum* spectrum, fracspec_format format, int expand,
                                         char** out) {
  return guarded([&] {
    require(spectrum, "spectrum");
    require(out, "out");
    const auto report = to_report(*spectrum, expand != 0);
    *out = duplicate(format == FRACSPEC_FORMAT_JSON ? fracspec::render_json(report) : fracspec::render_csv(report));
  });
}

fracspec_status fracspec_spectrum_render_svg(const fracspec_spectrum* spectrum, char** out) {
  return guarded([&] {
    require(spectrum, "spectrum");
    require(out, "out");
    *out = duplicate(fracspec::render_svg(to_report(*spectrum, false)));
  });
}

fracspec_status fracspec_scan_compute(const fracspec_sequence* seq, int l_min, int l_max, unsigned threads,
                                      fracspec_scan** out) {
  return guarded([&] {
    require(seq, "sequence");
    require(out, "out");
    fracspec::ScanOptions options;
    options.threads = threads;
    auto spectra = fracspec::scan(seq->samples, l_min, l_max, options);
    auto* result = new fracspec_scan{{}, seq->label, seq->mapping};
    result->spectra.reserve(spectra.size());
    for (auto& s : spectra) result->spectra.push_back({std::move(s), seq->label, seq->mapping});
    *out = result;
  });
}

void fracspec_scan_free(fracspec_scan* scan) { delete scan; }

size_t fracspec_scan_count(const fracspec_scan* scan) { return scan != nullptr ? scan->spectra.size() : 0; }

const fracspec_spectrum* fracspec_scan_at(const fracspec_scan* scan, size_t index) {
  if (scan == nullptr || index >= scan->spectra.size()) return nullptr;
  return &scan->spectra[index];
}

int fracspec_scan_all_zero(const fracspec_scan* scan) {
  if (scan == nullptr) return 0;
  for (const auto& s : scan->spectra) {
    for (double p : s.spectrum.powers) {
      if (p != 0.0) return 0;
    }
  }
  return 1;
}

fracspec_status fracspec_scan_render(const fracspec_scan* scan, fracspec_format format, size_t top, char** out) {
  return guarded([&] {
    require(scan, "scan");
    require(out, "out");
    std::vector<fracspec::PeriodSpectrum> spectra;
    spectra.reserve(scan->spectra.size());
    for (const auto& s : scan->spectra) spectra.push_back(s.spectrum);
    const auto report = fracspec::make_scan_report(spectra, scan->input, scan->mapping, top);
    *out = duplicate(format == FRACSPEC_FORMAT_JSON ? fracspec::render_json(report) : fracspec::render_csv(report));
  });
}

fracspec_status fracspec_verify(const fracspec_sequence* seq, int modulus, int k, fracspec_verify_result* out) {
  return guarded([&] {
    require(seq, "sequence");
    require(out, "out");
    const auto r = fracspec::verify(seq->samples, modulus, k);
    *out = {r.modulus, r.k, r.fast, r.oracle, r.abs_error, r.rel_error, r.passed ? 1 : 0};
  });
}

fracspec_status fracspec_verify_render(const fracspec_verify_result* result, fracspec_format format, char** out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    const fracspec::VerifyResult r{result->modulus,  result->k,         result->fast,       result->oracle,
                                   result->abs_error, result->rel_error, result->passed != 0};
    *out = duplicate(format == FRACSPEC_FORMAT_JSON ? fracspec::render_json(r) : fracspec::render_csv(r));
  });
}

fracspec_status fracspec_bench_run(const fracspec_bench_options* options, fracspec_bench** out) {
  return guarded([&] {
    require(options, "options");
    require(out, "out");
    if (options->length_count > 0) require(options->lengths, "lengths");
    if (options->modulus_count > 0) require(options->moduli, "moduli");
    fracspec::BenchConfig config;
    config.lengths.assign(options->lengths, options->lengths + options->length_count);
    config.moduli.assign(options->moduli, options->moduli + options->modulus_count);
    config.repeats = options->repeats;
    config.seed = options->seed;
    *out = new fracspec_bench{fracspec::run_bench(config)};
  });
}

void fracspec_bench_free(fracspec_bench* bench) { delete bench; }

size_t fracspec_bench_count(const fracspec_bench* bench) { return bench != nullptr ? bench->records.size() : 0; }

fracspec_status fracspec_bench_get(const fracspec_bench* bench, size_t index, fracspec_bench_record* out) {
  return guarded([&] {
    require(bench, "bench");
    require(out, "out");
    const auto& r = bench->records.at(index);
    *out = {r.m, r.modulus, r.method.c_str(), r.trig_count, r.madd_count, r.ns_median, r.ns_min, r.ns_max, r.checksum};
  });
}

fracspec_status fracspec_bench_render_csv(const fracspec_bench* bench, char** out) {
  return guarded([&] {
    require(bench, "bench");
    require(out, "out");
    *out = duplicate(fracspec::render_bench_csv(bench->records));
  });
}

fracspec_status fracspec_write_file(const char* path, const char* data, size_t size) {
  return guarded([&] {
    require(path, "path");
    if (size > 0) require(data, "data");
    fracspec::write_file_atomic(path, std::string_view(data != nullptr ? data : "", size));
  });
}

}  // extern "C"
