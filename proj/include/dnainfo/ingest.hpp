#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dnainfo/sequence.hpp"

namespace dnainfo {

/// A genome sequence plus its typed exon/intron/other features, all
/// bounds-checked and with unique feature ids.
struct AnnotatedGenome {
    DnaSequence sequence;
    std::vector<Region> features;
    std::string source_path;
};

enum class SequenceFormat { Fasta, OriginBlock };

/// Guesses the format from the first non-blank character: '>' means FASTA,
/// a digit or an "ORIGIN" line means an ORIGIN block.
SequenceFormat detect_format(std::string_view text);

/// One sequence per '>' record; the header line (sans '>') becomes the id.
/// Whitespace inside bodies is ignored, bases are case-insensitive.
std::vector<DnaSequence> parse_fasta(std::string_view text);

/// GenBank-style ORIGIN layout: an optional "ORIGIN" line, then lines of a
/// 1-based decimal offset followed by 1-6 groups of 1-10 bases, terminated
/// by "//". Each line's offset must equal the number of bases consumed + 1.
DnaSequence parse_origin_block(std::string_view text);

/// Emits the ORIGIN layout parsed above: 10-base lowercase groups, 6 groups
/// per line. parse_origin_block(render_origin_block(s)) == s.
std::string render_origin_block(const DnaSequence& seq);

/// Tab-separated feature lines: id, kind (exon|intron|other), start, end,
/// strand (+ | complement). '#' comment lines and blank lines are skipped.
std::vector<Region> parse_features(std::string_view text);

/// Loads a single-record sequence file (format auto-detected) plus its
/// feature table, and validates every feature against the sequence.
AnnotatedGenome load_annotated(const std::string& sequence_path,
                               const std::string& features_path);

/// Loads all sequences from a FASTA or ORIGIN-block file. An ORIGIN block
/// yields one sequence whose id is the file stem.
std::vector<DnaSequence> load_sequences(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace dnainfo
