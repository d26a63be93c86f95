#include "dnainfo/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "dnainfo/error.hpp"

namespace dnainfo {

namespace {

constexpr std::size_t kMaxGroupBases = 10;
constexpr std::size_t kMaxGroupsPerLine = 6;

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Splits text into lines, tolerating LF and CRLF endings.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

}  // namespace

SequenceFormat detect_format(std::string_view text) {
    for (const auto line : split_lines(text)) {
        const auto content = trimmed(line);
        if (content.empty()) continue;
        if (content.front() == '>') return SequenceFormat::Fasta;
        if (std::isdigit(static_cast<unsigned char>(content.front()))) {
            return SequenceFormat::OriginBlock;
        }
        if (content == "ORIGIN") return SequenceFormat::OriginBlock;
        throw Error("unrecognized sequence format (expected '>' header or ORIGIN block)");
    }
    throw Error("empty sequence file");
}

std::vector<DnaSequence> parse_fasta(std::string_view text) {
    std::vector<DnaSequence> records;
    SequenceBuilder builder;
    std::string current_id;
    std::size_t header_line = 0;
    bool in_record = false;

    const auto finish_record = [&] {
        if (!in_record) return;
        if (builder.size() == 0) {
            throw ParseError("record '" + current_id + "' has an empty body", header_line, 1);
        }
        records.push_back(builder.build(current_id));
    };

    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view line = lines[i];
        const std::size_t line_no = i + 1;
        if (!in_record && is_blank(line)) continue;
        if (!line.empty() && line.front() == '>') {
            finish_record();
            current_id = std::string(trimmed(line.substr(1)));
            header_line = line_no;
            in_record = true;
            continue;
        }
        if (!in_record) {
            throw ParseError("expected '>' header", line_no, 1);
        }
        for (std::size_t col = 0; col < line.size(); ++col) {
            const char c = line[col];
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            const auto base = nucleotide_from_char(c);
            if (!base) {
                throw ParseError(std::string("invalid base '") + c + "'", line_no, col + 1);
            }
            builder.push(*base);
        }
    }
    finish_record();
    if (records.empty()) {
        throw ParseError("no FASTA records found", 1, 1);
    }
    return records;
}

DnaSequence parse_origin_block(std::string_view text) {
    SequenceBuilder builder;
    bool seen_content = false;
    bool terminated = false;

    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view line = lines[i];
        const std::size_t line_no = i + 1;
        const auto content = trimmed(line);
        if (content.empty()) continue;
        if (content == "//") {
            terminated = true;
            break;
        }
        if (!seen_content && content == "ORIGIN") {
            seen_content = true;
            continue;
        }
        seen_content = true;

        std::size_t pos = 0;
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        const std::size_t offset_col = pos + 1;
        std::size_t offset = 0;
        const auto result =
            std::from_chars(line.data() + pos, line.data() + line.size(), offset);
        if (result.ec != std::errc() || result.ptr == line.data() + pos) {
            throw ParseError("expected a 1-based line offset", line_no, offset_col);
        }
        pos = static_cast<std::size_t>(result.ptr - line.data());
        if (offset != builder.size() + 1) {
            throw ParseError("offset mismatch: found " + std::to_string(offset) +
                                 ", expected " + std::to_string(builder.size() + 1),
                             line_no, offset_col);
        }

        std::size_t groups = 0;
        while (pos < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[pos]))) {
                ++pos;
                continue;
            }
            const std::size_t group_start = pos;
            std::size_t group_len = 0;
            while (pos < line.size() &&
                   !std::isspace(static_cast<unsigned char>(line[pos]))) {
                const char c = line[pos];
                const auto base = nucleotide_from_char(c);
                if (!base) {
                    throw ParseError(std::string("invalid base '") + c + "'", line_no,
                                     pos + 1);
                }
                if (++group_len > kMaxGroupBases) {
                    throw ParseError("base group longer than " +
                                         std::to_string(kMaxGroupBases) + " bases",
                                     line_no, group_start + 1);
                }
                builder.push(*base);
                ++pos;
            }
            if (++groups > kMaxGroupsPerLine) {
                throw ParseError("more than " + std::to_string(kMaxGroupsPerLine) +
                                     " base groups on one line",
                                 line_no, group_start + 1);
            }
        }
        if (groups == 0) {
            throw ParseError("expected at least one base group", line_no, offset_col);
        }
    }
    if (!terminated) {
        throw Error("ORIGIN block is missing its \"//\" terminator");
    }
    return builder.build();
}

std::string render_origin_block(const DnaSequence& seq) {
    std::ostringstream out;
    out << "ORIGIN\n";
    const std::size_t per_line = kMaxGroupBases * kMaxGroupsPerLine;
    for (std::size_t start = 0; start < seq.length(); start += per_line) {
        out << (start + 1);
        const std::size_t line_end = std::min(seq.length(), start + per_line);
        for (std::size_t i = start; i < line_end; ++i) {
            if ((i - start) % kMaxGroupBases == 0) out << ' ';
            out << static_cast<char>(
                std::tolower(static_cast<unsigned char>(to_char(seq.base(i)))));
        }
        out << '\n';
    }
    out << "//\n";
    return out.str();
}

namespace {

std::vector<std::pair<std::string_view, std::size_t>> split_tsv(std::string_view line) {
    std::vector<std::pair<std::string_view, std::size_t>> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t end = line.find('\t', start);
        if (end == std::string_view::npos) {
            fields.emplace_back(line.substr(start), start + 1);
            break;
        }
        fields.emplace_back(line.substr(start, end - start), start + 1);
        start = end + 1;
    }
    return fields;
}

std::size_t parse_coordinate(std::string_view field, std::size_t line_no, std::size_t col) {
    std::size_t value = 0;
    const auto result = std::from_chars(field.data(), field.data() + field.size(), value);
    if (result.ec != std::errc() || result.ptr != field.data() + field.size()) {
        throw ParseError("invalid coordinate '" + std::string(field) + "'", line_no, col);
    }
    return value;
}

}  // namespace

std::vector<Region> parse_features(std::string_view text) {
    std::vector<Region> regions;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view line = lines[i];
        const std::size_t line_no = i + 1;
        const auto content = trimmed(line);
        if (content.empty() || content.front() == '#') continue;

        const auto fields = split_tsv(line);
        if (fields.size() != 5) {
            throw ParseError("expected 5 tab-separated fields (id, kind, start, end, "
                             "strand), found " +
                                 std::to_string(fields.size()),
                             line_no, 1);
        }

        Region region;
        region.id = std::string(trimmed(fields[0].first));
        if (region.id.empty()) {
            throw ParseError("empty feature id", line_no, fields[0].second);
        }

        const auto kind = trimmed(fields[1].first);
        if (kind == "exon") {
            region.kind = RegionKind::Exon;
        } else if (kind == "intron") {
            region.kind = RegionKind::Intron;
        } else if (kind == "other") {
            region.kind = RegionKind::Other;
        } else {
            throw ParseError("unknown kind '" + std::string(kind) + "'", line_no,
                             fields[1].second);
        }

        region.start = parse_coordinate(trimmed(fields[2].first), line_no, fields[2].second);
        region.end = parse_coordinate(trimmed(fields[3].first), line_no, fields[3].second);
        if (region.start < 1) {
            throw ParseError("start must be >= 1", line_no, fields[2].second);
        }
        if (region.start > region.end) {
            throw ParseError("start " + std::to_string(region.start) + " exceeds end " +
                                 std::to_string(region.end),
                             line_no, fields[2].second);
        }

        const auto strand = trimmed(fields[4].first);
        if (strand == "+") {
            region.orientation = Orientation::Forward;
        } else if (strand == "complement") {
            region.orientation = Orientation::Complement;
        } else {
            throw ParseError("unknown strand '" + std::string(strand) +
                                 "' (expected '+' or 'complement')",
                             line_no, fields[4].second);
        }
        regions.push_back(std::move(region));
    }
    return regions;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream contents;
    contents << in.rdbuf();
    return contents.str();
}

namespace {

/// Runs `fn`, prefixing any library error with the file it came from so
/// callers see "path: message (line L, column C)".
template <typename F>
auto annotate_errors(const std::string& path, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

DnaSequence load_single_sequence(const std::string& path) {
    const std::string text = read_file(path);
    return annotate_errors(path, [&]() -> DnaSequence {
        if (detect_format(text) == SequenceFormat::Fasta) {
            auto records = parse_fasta(text);
            if (records.size() != 1) {
                throw Error("expected exactly one sequence record, found " +
                            std::to_string(records.size()));
            }
            return std::move(records.front());
        }
        return parse_origin_block(text).with_id(std::filesystem::path(path).stem().string());
    });
}

}  // namespace

AnnotatedGenome load_annotated(const std::string& sequence_path,
                               const std::string& features_path) {
    AnnotatedGenome genome;
    genome.sequence = load_single_sequence(sequence_path);
    const std::string feature_text = read_file(features_path);
    genome.features =
        annotate_errors(features_path, [&] { return parse_features(feature_text); });
    genome.source_path = sequence_path;

    annotate_errors(features_path, [&] {
        std::unordered_set<std::string> ids;
        for (const auto& feature : genome.features) {
            if (!ids.insert(feature.id).second) {
                throw Error("duplicate feature id '" + feature.id + "'");
            }
            if (feature.end > genome.sequence.length()) {
                throw Error("feature '" + feature.id + "' exceeds sequence length (end " +
                            std::to_string(feature.end) + " > " +
                            std::to_string(genome.sequence.length()) + ")");
            }
        }
    });
    return genome;
}

std::vector<DnaSequence> load_sequences(const std::string& path) {
    const std::string text = read_file(path);
    return annotate_errors(path, [&] {
        if (detect_format(text) == SequenceFormat::Fasta) {
            return parse_fasta(text);
        }
        std::vector<DnaSequence> records;
        records.push_back(
            parse_origin_block(text).with_id(std::filesystem::path(path).stem().string()));
        return records;
    });
}

}  // namespace dnainfo
