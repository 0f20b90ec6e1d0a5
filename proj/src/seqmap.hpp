#pragma once

// Symbolic sequence input and residue-to-number mappings.

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sequence.hpp"

namespace fracspec {

enum class Alphabet { protein, dna };

/// What to do with residues outside the standard alphabet.
enum class UnknownPolicy { zero, error, skip };

std::optional<UnknownPolicy> parse_unknown_policy(std::string_view name);

struct SymbolicSequence {
  std::string identifier;
  Alphabet alphabet = Alphabet::protein;
  std::string residues;  // uppercase
};

/// The standard residues of an alphabet, e.g. "ACGT".
std::string_view standard_residues(Alphabet alphabet);

/// Residue -> value table, total over the standard residues of its alphabet.
class MappingScheme {
 public:
  MappingScheme(std::string name, Alphabet alphabet, const std::vector<std::pair<char, double>>& entries,
                UnknownPolicy policy = UnknownPolicy::zero);

  const std::string& name() const noexcept { return name_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  UnknownPolicy unknown_policy() const noexcept { return policy_; }
  std::optional<double> value(char residue) const;

 private:
  std::string name_;
  Alphabet alphabet_;
  UnknownPolicy policy_;
  std::array<std::optional<double>, 26> values_{};
};

/// Kyte & Doolittle (1982) hydropathy index. Also shipped as
/// data/kyte_doolittle.txt in mapping-table format.
MappingScheme kyte_doolittle(UnknownPolicy policy = UnknownPolicy::zero);

/// Reads "<residue> <value>" lines with '#' comments.
MappingScheme load_mapping_table(std::istream& in, std::string name, Alphabet alphabet,
                                 UnknownPolicy policy = UnknownPolicy::zero);

std::vector<SymbolicSequence> parse_fasta(std::istream& in, Alphabet alphabet,
                                          UnknownPolicy policy = UnknownPolicy::zero);
std::vector<SymbolicSequence> parse_fasta(std::string_view text, Alphabet alphabet,
                                          UnknownPolicy policy = UnknownPolicy::zero);

RealSequence map_sequence(const SymbolicSequence& s, const MappingScheme& scheme);
RealSequence map_hydrophobicity(const SymbolicSequence& s, UnknownPolicy policy = UnknownPolicy::zero);

/// 1.0 where the residue equals symbol (one of A, C, G, T), else 0.0.
RealSequence map_indicator(const SymbolicSequence& s, char symbol);

/// Whitespace-separated decimals; lines whose first non-blank character is
/// '#' are comments.
RealSequence parse_numeric(std::istream& in);
RealSequence parse_numeric(std::string_view text);

/// One sample per line in shortest round-trip form.
std::string render_numeric(const RealSequence& x);

/// Subtracts the sample mean.
RealSequence center(const RealSequence& x);

}  // namespace fracspec
