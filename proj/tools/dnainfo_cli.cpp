// dnainfo: block-entropy, autocorrelation, and Walsh-randomness analysis of
// DNA sequences, with finite-length entropy correction against random
// ensembles. Each subcommand reads FASTA or ORIGIN-block files and writes
// CSV (default) or JSON.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dnainfo/autocorr.hpp"
#include "dnainfo/benchmark.hpp"
#include "dnainfo/entropy.hpp"
#include "dnainfo/error.hpp"
#include "dnainfo/ingest.hpp"
#include "dnainfo/sequence.hpp"
#include "dnainfo/walsh.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kToolName = "dnainfo";
#ifndef DNAINFO_VERSION
#define DNAINFO_VERSION "0.0.0"
#endif
constexpr const char* kToolVersion = DNAINFO_VERSION;

/// Entropy-style values are printed with 6 significant digits, '.' decimal.
std::string fmt6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

dnainfo::CountMode parse_mode(const std::string& text) {
    if (text == "blocks") return dnainfo::CountMode::NonOverlapping;
    if (text == "sliding") return dnainfo::CountMode::Sliding;
    throw dnainfo::Error("unknown mode '" + text + "' (expected 'blocks' or 'sliding')");
}

/// "lo:hi" or a single "n" (meaning n:n).
dnainfo::LengthRange parse_length_range(const std::string& text) {
    dnainfo::LengthRange range;
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            range.lo = range.hi = std::stoi(text);
        } else {
            range.lo = std::stoi(text.substr(0, colon));
            range.hi = std::stoi(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw dnainfo::Error("invalid block-length range '" + text + "' (expected 'lo:hi')");
    }
    if (range.lo < 1 || range.hi < range.lo) {
        throw dnainfo::Error("invalid block-length range '" + text + "' (expected 'lo:hi')");
    }
    return range;
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dnainfo::Error("cannot open output file: " + path);
    out << data;
}

/// Options shared by the analysis subcommands.
struct CommonOptions {
    std::string input;
    std::string output;
    std::string format = "csv";
};

void add_common(CLI::App& cmd, CommonOptions& opts, bool input_required = true) {
    auto* in = cmd.add_option("-i,--input", opts.input, "FASTA or ORIGIN-block sequence file");
    if (input_required) in->required();
    cmd.add_option("-o,--output", opts.output, "Output path (default: standard output)");
    cmd.add_option("-f,--format", opts.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

using MetaList = std::vector<std::pair<std::string, std::string>>;

MetaList base_meta(const std::string& command) {
    return {{"tool", std::string(kToolName) + " " + kToolVersion}, {"command", command}};
}

std::string render_csv(const MetaList& meta, const std::string& header,
                       const std::vector<std::string>& rows) {
    std::string out;
    for (const auto& [key, value] : meta) out += "# " + key + ": " + value + "\n";
    out += header + "\n";
    for (const auto& row : rows) out += row + "\n";
    return out;
}

json meta_to_json(const MetaList& meta) {
    json obj = json::object();
    for (const auto& [key, value] : meta) obj[key] = value;
    return obj;
}

std::string render_json(json document) { return document.dump(2) + "\n"; }

std::vector<dnainfo::DnaSequence> load_inputs(const std::string& path) {
    return dnainfo::load_sequences(path);
}

// ---------------------------------------------------------------- extract

struct ExtractOptions {
    std::string input;
    std::string features;
    std::string output;
};

std::string wrap_bases(const std::string& text, std::size_t width = 60) {
    std::string out;
    for (std::size_t pos = 0; pos < text.size(); pos += width) {
        out += text.substr(pos, width);
        out += '\n';
    }
    return out;
}

int cmd_extract(const ExtractOptions& opts) {
    const auto genome = dnainfo::load_annotated(opts.input, opts.features);

    std::string fasta;
    std::vector<dnainfo::Region> exons;
    for (const auto& feature : genome.features) {
        const auto piece = dnainfo::extract_region(genome.sequence, feature);
        fasta += ">" + feature.id + " " + std::string(dnainfo::to_string(feature.kind)) +
                 " " + std::to_string(feature.start) + ".." + std::to_string(feature.end) +
                 " " + std::string(dnainfo::to_string(feature.orientation)) + "\n";
        fasta += wrap_bases(piece.to_string());
        if (feature.kind == dnainfo::RegionKind::Exon) exons.push_back(feature);
    }

    if (exons.empty()) {
        std::cerr << kToolName << ": warning: no exon features in " << opts.features
                  << "; total_coding record not emitted\n";
    } else {
        const auto coding = dnainfo::concat_regions(genome.sequence, exons, "total_coding");
        fasta += ">total_coding " + std::to_string(exons.size()) + " exons " +
                 std::to_string(coding.length()) + " bp\n";
        fasta += wrap_bases(coding.to_string());
    }

    write_output(opts.output, fasta);
    return 0;
}

// ---------------------------------------------------------------- entropy

struct EntropyOptions {
    CommonOptions common;
    std::string l_range = "2:9";
    std::string mode = "blocks";
    double beta = 0.0;
};

int cmd_entropy(const EntropyOptions& opts) {
    const auto range = parse_length_range(opts.l_range);
    const auto mode = parse_mode(opts.mode);
    const auto sequences = load_inputs(opts.common.input);

    auto meta = base_meta("entropy");
    meta.emplace_back("mode", opts.mode);
    meta.emplace_back("beta", fmt6(opts.beta));

    std::vector<std::string> rows;
    json json_rows = json::array();
    for (const auto& seq : sequences) {
        const auto profile = dnainfo::entropy_profile(seq, range, mode, opts.beta);
        for (const auto& entry : profile.entries) {
            rows.push_back(seq.id() + "," + std::to_string(seq.length()) + "," +
                           std::to_string(entry.block_length) + "," +
                           fmt6(entry.block_entropy_bits) + "," + fmt6(entry.per_base_bits));
            json_rows.push_back({{"sequence_id", seq.id()},
                                 {"length", seq.length()},
                                 {"L", entry.block_length},
                                 {"h_block", entry.block_entropy_bits},
                                 {"h_per_base", entry.per_base_bits}});
        }
    }

    if (opts.common.format == "json") {
        write_output(opts.common.output,
                     render_json({{"metadata", meta_to_json(meta)}, {"rows", json_rows}}));
    } else {
        write_output(opts.common.output,
                     render_csv(meta, "sequence_id,length,L,h_block,h_per_base", rows));
    }
    return 0;
}

// ---------------------------------------------------------------- benchmark

struct BenchmarkOptions {
    std::string input;
    std::string output;
    std::string format = "csv";
    std::string l_range = "2:9";
    std::string mode = "blocks";
    double beta = 0.0;
    std::size_t length = 0;
    std::size_t ensemble_size = 30;
    std::uint64_t seed = dnainfo::kDefaultSeed;
    bool seed_from_clock = false;
};

std::uint64_t effective_seed(std::uint64_t seed, bool from_clock) {
    if (!from_clock) return seed;
    return static_cast<std::uint64_t>(
        std::chrono::system_clock::now().time_since_epoch().count());
}

MetaList ensemble_meta(const dnainfo::EnsembleConfig& config, const std::string& mode_text) {
    return {{"mode", mode_text},
            {"beta", fmt6(config.beta)},
            {"seed", std::to_string(config.seed)},
            {"rng", dnainfo::kRngAlgorithm},
            {"ensemble_size", std::to_string(config.ensemble_size)}};
}

int cmd_benchmark(const BenchmarkOptions& opts) {
    dnainfo::EnsembleConfig config;
    config.ensemble_size = opts.ensemble_size;
    config.seed = effective_seed(opts.seed, opts.seed_from_clock);
    config.l_range = parse_length_range(opts.l_range);
    config.mode = parse_mode(opts.mode);
    config.beta = opts.beta;

    if (opts.length > 0) {
        config.length = opts.length;
    } else if (!opts.input.empty()) {
        const auto sequences = load_inputs(opts.input);
        config.length = sequences.front().length();
    } else {
        throw dnainfo::Error("benchmark needs --length or --input to fix the sequence length");
    }

    const auto table = dnainfo::correction_table(config);

    auto meta = base_meta("benchmark");
    for (auto& item : ensemble_meta(config, opts.mode)) meta.push_back(std::move(item));
    meta.emplace_back("length", std::to_string(table.sequence_length));

    std::vector<std::string> rows;
    json json_rows = json::array();
    for (const auto& entry : table.entries) {
        rows.push_back(std::to_string(entry.block_length) + "," +
                       fmt6(entry.mean_random_per_base) + "," + fmt6(entry.delta));
        json_rows.push_back({{"L", entry.block_length},
                             {"mean_random_h", entry.mean_random_per_base},
                             {"delta", entry.delta}});
    }

    if (opts.format == "json") {
        write_output(opts.output,
                     render_json({{"metadata", meta_to_json(meta)}, {"rows", json_rows}}));
    } else {
        write_output(opts.output, render_csv(meta, "L,mean_random_h,delta", rows));
    }
    return 0;
}

// ---------------------------------------------------------------- autocorr

struct AutocorrOptions {
    CommonOptions common;
    int max_lag = 10;
    bool center = false;
};

int cmd_autocorr(const AutocorrOptions& opts) {
    const auto sequences = load_inputs(opts.common.input);

    auto meta = base_meta("autocorr");
    meta.emplace_back("max_lag", std::to_string(opts.max_lag));
    meta.emplace_back("centered", opts.center ? "true" : "false");

    std::vector<std::string> rows;
    json series = json::array();
    for (const auto& seq : sequences) {
        auto signal = dnainfo::substitute(seq);
        if (opts.center) signal = dnainfo::subtract_mean(std::move(signal));
        const auto autocorr = dnainfo::autocorrelation(signal, opts.max_lag);

        rows.push_back("# sequence: " + seq.id() + " (" + std::to_string(seq.length()) +
                       " bp)");
        json values = json::array();
        for (int lag = -opts.max_lag; lag <= opts.max_lag; ++lag) {
            rows.push_back(std::to_string(lag) + "," + fmt6(autocorr.at_lag(lag)));
            values.push_back({{"lag", lag}, {"value", autocorr.at_lag(lag)}});
        }
        series.push_back({{"sequence_id", seq.id()},
                          {"length", seq.length()},
                          {"values", std::move(values)}});
    }

    if (opts.common.format == "json") {
        write_output(opts.common.output,
                     render_json({{"metadata", meta_to_json(meta)}, {"series", series}}));
    } else {
        write_output(opts.common.output, render_csv(meta, "lag,value", rows));
    }
    return 0;
}

// ---------------------------------------------------------------- walsh

int cmd_walsh(const CommonOptions& opts) {
    const auto sequences = load_inputs(opts.input);
    const auto meta = base_meta("walsh");

    std::vector<std::string> rows;
    json json_rows = json::array();
    for (const auto& seq : sequences) {
        const auto report = dnainfo::randomness_coefficient(seq);
        rows.push_back(report.sequence_id + "," + std::to_string(report.original_length) +
                       "," + std::to_string(report.adjusted_length) + "," +
                       std::string(dnainfo::to_string(report.adjustment)) + "," +
                       std::to_string(report.independent_count) + "," +
                       std::to_string(report.independent_count) + "," +
                       std::to_string(report.adjusted_length));
        json_rows.push_back({{"sequence_id", report.sequence_id},
                             {"original_length", report.original_length},
                             {"adjusted_length", report.adjusted_length},
                             {"adjustment", std::string(dnainfo::to_string(report.adjustment))},
                             {"independent_count", report.independent_count},
                             {"r_numerator", report.independent_count},
                             {"r_denominator", report.adjusted_length},
                             {"coefficient", report.coefficient()}});
    }

    if (opts.format == "json") {
        write_output(opts.output,
                     render_json({{"metadata", meta_to_json(meta)}, {"rows", json_rows}}));
    } else {
        write_output(opts.output,
                     render_csv(meta,
                                "sequence_id,original_length,adjusted_length,adjustment,"
                                "independent_count,r_numerator,r_denominator",
                                rows));
    }
    return 0;
}

// ---------------------------------------------------------------- report

struct ReportOptions {
    CommonOptions common;
    std::string l_range = "2:9";
    std::string mode = "blocks";
    double beta = 0.0;
    std::size_t ensemble_size = 30;
    std::uint64_t seed = dnainfo::kDefaultSeed;
    bool seed_from_clock = false;
};

int cmd_report(const ReportOptions& opts) {
    const auto range = parse_length_range(opts.l_range);
    const auto mode = parse_mode(opts.mode);
    const auto sequences = load_inputs(opts.common.input);

    dnainfo::EnsembleConfig config;
    config.ensemble_size = opts.ensemble_size;
    config.seed = effective_seed(opts.seed, opts.seed_from_clock);
    config.l_range = range;
    config.mode = mode;
    config.beta = opts.beta;

    auto meta = base_meta("report");
    for (auto& item : ensemble_meta(config, opts.mode)) meta.push_back(std::move(item));

    // Correction tables depend only on the sequence length; cache them so a
    // FASTA of same-length records benchmarks once.
    std::map<std::size_t, dnainfo::CorrectionTable> tables;

    std::vector<std::string> rows;
    json json_rows = json::array();
    for (const auto& seq : sequences) {
        config.length = seq.length();
        auto [it, inserted] = tables.try_emplace(seq.length());
        if (inserted) it->second = dnainfo::correction_table(config);

        const auto profile = dnainfo::entropy_profile(seq, range, mode, opts.beta);
        const auto corrected = dnainfo::corrected_profile(profile, it->second);
        for (const auto& entry : corrected.entries) {
            rows.push_back(seq.id() + "," + std::to_string(seq.length()) + "," +
                           std::to_string(entry.block_length) + "," + fmt6(entry.h_raw) +
                           "," + fmt6(entry.delta) + "," + fmt6(entry.h_corrected));
            json_rows.push_back({{"sequence_id", seq.id()},
                                 {"length", seq.length()},
                                 {"L", entry.block_length},
                                 {"h_raw", entry.h_raw},
                                 {"delta", entry.delta},
                                 {"h_corrected", entry.h_corrected}});
        }
    }

    if (opts.common.format == "json") {
        write_output(opts.common.output,
                     render_json({{"metadata", meta_to_json(meta)}, {"rows", json_rows}}));
    } else {
        write_output(opts.common.output,
                     render_csv(meta, "sequence_id,length,L,h_raw,delta,h_corrected", rows));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information analysis of DNA sequences: block entropy with "
                 "finite-length correction, autocorrelation, and Walsh-spectrum "
                 "randomness"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    ExtractOptions extract_opts;
    auto* extract = app.add_subcommand("extract", "Cut annotated features into FASTA records");
    extract->add_option("-i,--input", extract_opts.input, "Genome sequence file")->required();
    extract->add_option("--features", extract_opts.features, "Feature table (TSV)")->required();
    extract->add_option("-o,--output", extract_opts.output, "Output path (default: stdout)");

    EntropyOptions entropy_opts;
    auto* entropy = app.add_subcommand("entropy", "Raw block-entropy profile");
    add_common(*entropy, entropy_opts.common);
    entropy->add_option("-L,--L", entropy_opts.l_range, "Block length range lo:hi");
    entropy->add_option("-m,--mode", entropy_opts.mode, "Counting mode: blocks or sliding")
        ->check(CLI::IsMember({"blocks", "sliding"}));
    entropy->add_option("-b,--beta", entropy_opts.beta, "Additive smoothing constant")
        ->check(CLI::NonNegativeNumber);

    BenchmarkOptions benchmark_opts;
    auto* benchmark =
        app.add_subcommand("benchmark", "Correction table from a random ensemble");
    benchmark->add_option("-i,--input", benchmark_opts.input,
                          "Sequence file fixing the benchmark length");
    benchmark->add_option("-o,--output", benchmark_opts.output, "Output path (default: stdout)");
    benchmark->add_option("-f,--format", benchmark_opts.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    benchmark->add_option("-L,--L", benchmark_opts.l_range, "Block length range lo:hi");
    benchmark->add_option("-m,--mode", benchmark_opts.mode, "Counting mode: blocks or sliding")
        ->check(CLI::IsMember({"blocks", "sliding"}));
    benchmark->add_option("-b,--beta", benchmark_opts.beta, "Additive smoothing constant")
        ->check(CLI::NonNegativeNumber);
    benchmark->add_option("-n,--length", benchmark_opts.length,
                          "Random sequence length (alternative to --input)");
    benchmark->add_option("-e,--ensemble-size", benchmark_opts.ensemble_size,
                          "Number of random sequences");
    auto* bench_seed = benchmark->add_option("-s,--seed", benchmark_opts.seed, "Master RNG seed");
    benchmark->add_flag("--seed-from-clock", benchmark_opts.seed_from_clock,
                        "Derive the seed from the clock (non-reproducible)")
        ->excludes(bench_seed);

    AutocorrOptions autocorr_opts;
    auto* autocorr = app.add_subcommand("autocorr", "Autocorrelation of the numeric signal");
    add_common(*autocorr, autocorr_opts.common);
    autocorr->add_option("-k,--max-lag", autocorr_opts.max_lag, "Largest lag (series spans -k..k)");
    autocorr->add_flag("--center", autocorr_opts.center, "Subtract the signal mean first");

    CommonOptions walsh_opts;
    auto* walsh = app.add_subcommand("walsh", "Walsh-spectrum randomness coefficient");
    add_common(*walsh, walsh_opts);

    ReportOptions report_opts;
    auto* report =
        app.add_subcommand("report", "Corrected entropy report (entropy + benchmark)");
    add_common(*report, report_opts.common);
    report->add_option("-L,--L", report_opts.l_range, "Block length range lo:hi");
    report->add_option("-m,--mode", report_opts.mode, "Counting mode: blocks or sliding")
        ->check(CLI::IsMember({"blocks", "sliding"}));
    report->add_option("-b,--beta", report_opts.beta, "Additive smoothing constant")
        ->check(CLI::NonNegativeNumber);
    report->add_option("-e,--ensemble-size", report_opts.ensemble_size,
                       "Number of random sequences per correction table");
    auto* report_seed = report->add_option("-s,--seed", report_opts.seed, "Master RNG seed");
    report->add_flag("--seed-from-clock", report_opts.seed_from_clock,
                     "Derive the seed from the clock (non-reproducible)")
        ->excludes(report_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (extract->parsed()) return cmd_extract(extract_opts);
        if (entropy->parsed()) return cmd_entropy(entropy_opts);
        if (benchmark->parsed()) return cmd_benchmark(benchmark_opts);
        if (autocorr->parsed()) return cmd_autocorr(autocorr_opts);
        if (walsh->parsed()) return cmd_walsh(walsh_opts);
        if (report->parsed()) return cmd_report(report_opts);
    } catch (const dnainfo::Error& e) {
        std::cerr << kToolName << ": error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << kToolName << ": error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
