#include <doctest.h>

#include <random>
#include <string>

#include "dnainfo/error.hpp"
#include "dnainfo/ingest.hpp"
#include "test_util.hpp"

using namespace dnainfo;

TEST_CASE("format detection") {
    CHECK(detect_format(">x\nACGT\n") == SequenceFormat::Fasta);
    CHECK(detect_format("\n  >y\nAC\n") == SequenceFormat::Fasta);
    CHECK(detect_format("ORIGIN\n1 acgt\n//\n") == SequenceFormat::OriginBlock);
    CHECK(detect_format("1 acgt\n//\n") == SequenceFormat::OriginBlock);
}

TEST_CASE("FASTA: single record") {
    const auto records = parse_fasta(">chr1 test\nacgt\nACGT\n");
    REQUIRE(records.size() == 1);
    CHECK(records[0].id() == "chr1 test");
    CHECK(records[0].to_string() == "ACGTACGT");
}

TEST_CASE("FASTA: multiple records and whitespace-tolerant bodies") {
    const auto records = parse_fasta(">a\nAC GT\n\n>b\nTT\nTT\n");
    REQUIRE(records.size() == 2);
    CHECK(records[0].id() == "a");
    CHECK(records[0].to_string() == "ACGT");
    CHECK(records[1].id() == "b");
    CHECK(records[1].to_string() == "TTTT");
}

TEST_CASE("FASTA: CRLF line endings are accepted") {
    const auto records = parse_fasta(">a\r\nACGT\r\n");
    REQUIRE(records.size() == 1);
    CHECK(records[0].to_string() == "ACGT");
}

TEST_CASE("FASTA: invalid base reported with line and column") {
    try {
        parse_fasta(">a\nACGNAT\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 4);
        CHECK(std::string(e.what()).find("invalid base 'N'") != std::string::npos);
    }
}

TEST_CASE("FASTA: structural errors") {
    CHECK_THROWS_AS(parse_fasta("ACGT\n"), ParseError);          // no header
    CHECK_THROWS_AS(parse_fasta(">a\n>b\nACGT\n"), ParseError);  // empty body
    CHECK_THROWS_AS(parse_fasta(">only\n"), ParseError);         // empty last body
    CHECK_THROWS_AS(parse_fasta(""), ParseError);                // no records at all
}

TEST_CASE("ORIGIN: minimal block") {
    CHECK(parse_origin_block("ORIGIN\n1 gtaagt\n//\n").to_string() == "GTAAGT");
    CHECK(parse_origin_block("1 gtaagt\n//\n").to_string() == "GTAAGT");
}

TEST_CASE("ORIGIN: the 1092-base intron fixture parses") {
    const auto seq = parse_origin_block(testutil::kOriginIntron);
    CHECK(seq.length() == 1092);
    const auto text = seq.to_string();
    CHECK(text.substr(0, 10) == "GTAAGTAGTT");
    CHECK(text.substr(1090) == "AG");  // canonical intron AG tail
}

TEST_CASE("ORIGIN: offset must equal bases consumed plus one") {
    try {
        parse_origin_block("1 acgtacgtac\n21 acgt\n//\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        const std::string what = e.what();
        CHECK(what.find("offset mismatch") != std::string::npos);
        CHECK(what.find("21") != std::string::npos);
        CHECK(what.find("11") != std::string::npos);
    }
}

TEST_CASE("ORIGIN: group and line shape limits") {
    // 11-base group
    CHECK_THROWS_AS(parse_origin_block("1 acgtacgtacg\n//\n"), ParseError);
    // seven groups on one line
    CHECK_THROWS_AS(
        parse_origin_block("1 aaaa aaaa aaaa aaaa aaaa aaaa aaaa\n//\n"),
        ParseError);
    // offset with no groups
    CHECK_THROWS_AS(parse_origin_block("1\n//\n"), ParseError);
}

TEST_CASE("ORIGIN: missing terminator is an error") {
    CHECK_THROWS_AS(parse_origin_block("ORIGIN\n1 acgt\n"), Error);
}

TEST_CASE("ORIGIN: invalid bases carry position info") {
    try {
        parse_origin_block("ORIGIN\n1 acgt acnt\n//\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("'n'") != std::string::npos);
    }
}

TEST_CASE("ORIGIN: render emits six ten-base groups per line and round-trips") {
    std::mt19937_64 rng(8201);
    const std::size_t lengths[] = {1, 9, 10, 11, 59, 60, 61, 120, 599, 600, 601, 1092};
    for (const auto len : lengths) {
        const DnaSequence seq(testutil::random_base_string(rng, len), "roundtrip");
        const auto rendered = render_origin_block(seq);
        CHECK(rendered.rfind("ORIGIN\n", 0) == 0);
        CHECK(rendered.find("//") != std::string::npos);
        const auto reparsed = parse_origin_block(rendered);
        CHECK(reparsed == seq);
    }
    for (int rep = 0; rep < 60; ++rep) {
        const auto len = 1 + static_cast<std::size_t>(rng() % 2000);
        const DnaSequence seq(testutil::random_base_string(rng, len), "roundtrip");
        CHECK(parse_origin_block(render_origin_block(seq)) == seq);
    }
}

TEST_CASE("ORIGIN: fixture render keeps the documented offsets") {
    const auto seq = parse_origin_block(testutil::kOriginIntron);
    const auto rendered = render_origin_block(seq);
    CHECK(rendered.find("\n1081 tttgtttaat ag\n") != std::string::npos);
    CHECK(rendered.find("\n61 ") != std::string::npos);
}

TEST_CASE("feature table: documented example rows") {
    const auto regions = parse_features(
        "# id kind start end strand\n"
        "e1\texon\t1\t197\t+\n"
        "i1\tintron\t198\t1289\t+\n"
        "x1\tother\t5\t9\tcomplement\n"
        "\n");
    REQUIRE(regions.size() == 3);
    CHECK(regions[0].id == "e1");
    CHECK(regions[0].kind == RegionKind::Exon);
    CHECK(regions[0].start == 1);
    CHECK(regions[0].end == 197);
    CHECK(regions[0].orientation == Orientation::Forward);
    CHECK(regions[1].kind == RegionKind::Intron);
    CHECK(regions[2].kind == RegionKind::Other);
    CHECK(regions[2].orientation == Orientation::Complement);
}

TEST_CASE("feature table: malformed rows are rejected") {
    CHECK_THROWS_WITH_AS(parse_features("e1\texon\t1\t197\n"),
                         doctest::Contains("tab-separated"), ParseError);
    CHECK_THROWS_WITH_AS(parse_features("e1\tgene\t1\t9\t+\n"),
                         doctest::Contains("unknown kind"), ParseError);
    CHECK_THROWS_WITH_AS(parse_features("e1\texon\t0\t9\t+\n"),
                         doctest::Contains(">= 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_features("e1\texon\t9\t5\t+\n"),
                         doctest::Contains("exceeds"), ParseError);
    CHECK_THROWS_WITH_AS(parse_features("e1\texon\t1\t9\t-\n"),
                         doctest::Contains("unknown strand"), ParseError);
    CHECK_THROWS_AS(parse_features("e1\texon\tone\t9\t+\n"), ParseError);
}

TEST_CASE("load_annotated validates features against the sequence") {
    testutil::TempFile fasta(">g\nATGCAT\n", ".fa");

    SUBCASE("in-bounds features load") {
        testutil::TempFile feats("e1\texon\t1\t6\t+\n", ".tsv");
        const auto genome = load_annotated(fasta.path(), feats.path());
        CHECK(genome.sequence.length() == 6);
        REQUIRE(genome.features.size() == 1);
        CHECK(genome.features[0].id == "e1");
    }

    SUBCASE("out-of-bounds feature names itself") {
        testutil::TempFile feats("e9\texon\t1\t7\t+\n", ".tsv");
        CHECK_THROWS_WITH_AS(load_annotated(fasta.path(), feats.path()),
                             doctest::Contains("e9"), Error);
    }

    SUBCASE("duplicate feature ids are rejected") {
        testutil::TempFile feats("e1\texon\t1\t3\t+\ne1\tintron\t4\t6\t+\n", ".tsv");
        CHECK_THROWS_WITH_AS(load_annotated(fasta.path(), feats.path()),
                             doctest::Contains("e1"), Error);
    }
}

TEST_CASE("load_annotated auto-detects ORIGIN input") {
    testutil::TempFile origin(testutil::kOriginIntron, ".txt");
    testutil::TempFile feats("i1\tintron\t1\t1092\t+\n", ".tsv");
    const auto genome = load_annotated(origin.path(), feats.path());
    CHECK(genome.sequence.length() == 1092);
    CHECK(genome.features[0].kind == RegionKind::Intron);
}

TEST_CASE("load_annotated insists on a single sequence record") {
    testutil::TempFile fasta(">a\nAC\n>b\nGT\n", ".fa");
    testutil::TempFile feats("e1\texon\t1\t2\t+\n", ".tsv");
    CHECK_THROWS_AS(load_annotated(fasta.path(), feats.path()), Error);
}

TEST_CASE("load_sequences names ORIGIN input after the file stem") {
    testutil::TempFile origin(testutil::kOriginIntron, ".txt");
    const auto records = load_sequences(origin.path());
    REQUIRE(records.size() == 1);
    const auto stem = std::filesystem::path(origin.path()).stem().string();
    CHECK(records[0].id() == stem);

    testutil::TempFile fasta(">a\nAC\n>b\nGT\n", ".fa");
    CHECK(load_sequences(fasta.path()).size() == 2);
}

TEST_CASE("read_file reports missing paths") {
    CHECK_THROWS_AS(read_file("/nonexistent/really/not/here.fa"), Error);
}
