#include "seqmap.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace fracspec {
namespace {

constexpr std::string_view kProteinResidues = "ACDEFGHIKLMNPQRSTVWY";
constexpr std::string_view kDnaResidues = "ACGT";

bool is_standard(Alphabet alphabet, char c) { return standard_residues(alphabet).find(c) != std::string_view::npos; }

// Residue characters accepted at all; anything outside the standard set is
// an "unknown" residue handled by UnknownPolicy.
bool is_residue_char(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '*' || c == '-'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed to read input stream");
  return std::move(buffer).str();
}

const char* alphabet_name(Alphabet a) { return a == Alphabet::protein ? "protein" : "dna"; }

}  // namespace

std::optional<UnknownPolicy> parse_unknown_policy(std::string_view name) {
  if (name == "zero") return UnknownPolicy::zero;
  if (name == "error") return UnknownPolicy::error;
  if (name == "skip") return UnknownPolicy::skip;
  return std::nullopt;
}

std::string_view standard_residues(Alphabet alphabet) {
  return alphabet == Alphabet::protein ? kProteinResidues : kDnaResidues;
}

MappingScheme::MappingScheme(std::string name, Alphabet alphabet, const std::vector<std::pair<char, double>>& entries,
                             UnknownPolicy policy)
    : name_(std::move(name)), alphabet_(alphabet), policy_(policy) {
  for (const auto& [residue, value] : entries) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(residue)));
    if (c < 'A' || c > 'Z') throw InvalidArgument(std::string("mapping residue '") + residue + "' is not a letter");
    if (!std::isfinite(value)) throw InvalidArgument(std::string("mapping value for '") + c + "' is not finite");
    values_[static_cast<std::size_t>(c - 'A')] = value;
  }
  for (char c : standard_residues(alphabet_)) {
    if (!values_[static_cast<std::size_t>(c - 'A')]) {
      throw InvalidArgument("mapping '" + name_ + "' has no value for " + alphabet_name(alphabet_) + " residue '" + c +
                            "'");
    }
  }
}

std::optional<double> MappingScheme::value(char residue) const {
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(residue)));
  if (c < 'A' || c > 'Z') return std::nullopt;
  return values_[static_cast<std::size_t>(c - 'A')];
}

MappingScheme kyte_doolittle(UnknownPolicy policy) {
  return MappingScheme("kyte-doolittle", Alphabet::protein,
                       {{'A', 1.8},  {'R', -4.5}, {'N', -3.5}, {'D', -3.5}, {'C', 2.5},
                        {'Q', -3.5}, {'E', -3.5}, {'G', -0.4}, {'H', -3.2}, {'I', 4.5},
                        {'L', 3.8},  {'K', -3.9}, {'M', 1.9},  {'F', 2.8},  {'P', -1.6},
                        {'S', -0.8}, {'T', -0.7}, {'W', -0.9}, {'Y', -1.3}, {'V', 4.2}},
                       policy);
}

MappingScheme load_mapping_table(std::istream& in, std::string name, Alphabet alphabet, UnknownPolicy policy) {
  const std::string text = read_all(in);
  std::vector<std::pair<char, double>> entries;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream fields{std::string(body)};
    std::string residue;
    std::string value_text;
    std::string extra;
    fields >> residue >> value_text;
    if (residue.size() != 1 || value_text.empty() || (fields >> extra)) {
      throw ParseError("mapping table line " + std::to_string(line_no) + ": expected '<residue> <value>'", line_no, 1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc() || ptr != value_text.data() + value_text.size() || !std::isfinite(value)) {
      throw ParseError("mapping table line " + std::to_string(line_no) + ": bad value '" + value_text + "'", line_no);
    }
    entries.emplace_back(residue[0], value);
  }
  if (entries.empty()) throw ParseError("mapping table is empty");
  return MappingScheme(std::move(name), alphabet, entries, policy);
}

std::vector<SymbolicSequence> parse_fasta(std::string_view text, Alphabet alphabet, UnknownPolicy policy) {
  std::vector<SymbolicSequence> records;
  std::size_t line_no = 0;
  std::size_t header_line = 0;

  auto close_record = [&] {
    if (!records.empty() && records.back().residues.empty()) {
      throw ParseError("FASTA record '" + records.back().identifier + "' has no residues", header_line);
    }
  };

  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!line.empty() && line.front() == '>') {
      close_record();
      records.push_back({std::string(trim(line.substr(1))), alphabet, {}});
      header_line = line_no;
      continue;
    }
    if (trim(line).empty()) continue;
    if (records.empty()) throw ParseError("FASTA data before the first '>' header", line_no, 1);

    for (std::size_t col = 0; col < line.size(); ++col) {
      const char raw = line[col];
      if (std::isspace(static_cast<unsigned char>(raw)) != 0) continue;
      if (!is_residue_char(raw)) {
        throw ParseError(std::string("illegal character '") + raw + "' at line " + std::to_string(line_no) +
                             ", column " + std::to_string(col + 1),
                         line_no, col + 1);
      }
      const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
      if (policy == UnknownPolicy::error && !is_standard(alphabet, c)) {
        throw ParseError(std::string("non-standard ") + alphabet_name(alphabet) + " residue '" + c + "' at line " +
                             std::to_string(line_no) + ", column " + std::to_string(col + 1),
                         line_no, col + 1);
      }
      records.back().residues.push_back(c);
    }
  }
  if (records.empty()) throw ParseError("FASTA input contains no records");
  close_record();
  return records;
}

std::vector<SymbolicSequence> parse_fasta(std::istream& in, Alphabet alphabet, UnknownPolicy policy) {
  return parse_fasta(std::string_view(read_all(in)), alphabet, policy);
}

RealSequence map_sequence(const SymbolicSequence& s, const MappingScheme& scheme) {
  if (s.residues.empty()) throw InvalidArgument("cannot map an empty sequence");
  std::vector<double> out;
  out.reserve(s.residues.size());
  for (std::size_t i = 0; i < s.residues.size(); ++i) {
    const char c = s.residues[i];
    if (auto v = scheme.value(c)) {
      out.push_back(*v);
      continue;
    }
    switch (scheme.unknown_policy()) {
      case UnknownPolicy::zero:
        out.push_back(0.0);
        break;
      case UnknownPolicy::skip:
        break;
      case UnknownPolicy::error:
        throw InvalidArgument(std::string("residue '") + c + "' at position " + std::to_string(i + 1) +
                              " has no value in mapping '" + scheme.name() + "'");
    }
  }
  if (out.empty()) throw InvalidArgument("no residues left after applying the unknown-residue policy");
  return RealSequence(std::move(out));
}

RealSequence map_hydrophobicity(const SymbolicSequence& s, UnknownPolicy policy) {
  if (s.alphabet != Alphabet::protein) throw InvalidArgument("hydropathy mapping needs a protein sequence");
  return map_sequence(s, kyte_doolittle(policy));
}

RealSequence map_indicator(const SymbolicSequence& s, char symbol) {
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(symbol)));
  if (!is_standard(Alphabet::dna, c)) throw InvalidArgument(std::string("indicator symbol '") + symbol + "' is not A, C, G or T");
  if (s.residues.empty()) throw InvalidArgument("cannot map an empty sequence");
  std::vector<double> out;
  out.reserve(s.residues.size());
  for (char r : s.residues) out.push_back(r == c ? 1.0 : 0.0);
  return RealSequence(std::move(out));
}

RealSequence parse_numeric(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  std::size_t token_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto body = trim(line); !body.empty() && body.front() == '#') continue;

    std::size_t pos = 0;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos])) != 0) {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < line.size() && std::isspace(static_cast<unsigned char>(line[end])) == 0) ++end;
      ++token_no;
      const std::string_view token = line.substr(pos, end - pos);
      const char* first = token.data();
      if (!token.empty() && token.front() == '+') ++first;
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw ParseError("unparseable token '" + std::string(token) + "' (token " + std::to_string(token_no) +
                             ") at line " + std::to_string(line_no) + ", column " + std::to_string(pos + 1),
                         line_no, pos + 1);
      }
      values.push_back(value);
      pos = end;
    }
  }
  if (values.empty()) throw ParseError("numeric input contains no values");
  return RealSequence(std::move(values));
}

RealSequence parse_numeric(std::istream& in) { return parse_numeric(std::string_view(read_all(in))); }

std::string render_numeric(const RealSequence& x) {
  std::string out;
  char buf[32];
  for (double v : x.samples()) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
    out.push_back('\n');
  }
  return out;
}

RealSequence center(const RealSequence& x) {
  const auto samples = x.samples();
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
  std::vector<double> out(samples.begin(), samples.end());
  for (double& v : out) v -= mean;
  return RealSequence(std::move(out));
}

}  // namespace fracspec
