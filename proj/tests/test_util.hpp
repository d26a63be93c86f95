#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <unistd.h>

namespace testutil {

// 1092-base intron in ORIGIN layout. A handful of groups in the source
// listing were garbled to 9 or 11 characters; they are normalized to ten
// here so every full line carries 60 bases.
inline constexpr const char* kOriginIntron =
    "ORIGIN\n"
    "1 gtaagtagtt cacagaatgt tatttttcac ttaaaaaaaa agatttttat ggaataatct\n"
    "61 caaacatcct gatagttagg gttagtttga tcgattatag caggctactt cataaattaa\n"
    "121 gcccatagat ttaagtcttg tgtagattat ttatcttctc acaagaaaaa tagtataaaa\n"
    "181 tacatgcctt gtactacaaa gaagaactaa taaggtggaa ttgattcagg acagcatatc\n"
    "241 accaactctg agaaaaatgc aacaaatgca aattcattga ctaaatcttt attgagggtc\n"
    "301 tgttacaggc actttattaa ctaataatca gcataatttc tgtgtgagaa taaatgtaaa\n"
    "361 aatctgtatt aaaatttcca aatgattatt ttaaagtgta aatgcatgct ctaacagtat\n"
    "421 gcccatgtag agctccagag ttttttcttg gaaacagaat gagtagtaca tgagattttc\n"
    "481 tgcctcattg gagtagtatt gaagataatt aatataaagg gaaattgtat atttactgat\n"
    "541 taattgatat caatctatta attccaacaa gtgaatgtct ctggaaagat tatcaaggca\n"
    "601 aagtgttaaa ttggcaaaca aaagtcattc aaaccttcat ttttctgctc acagtgttga\n"
    "661 taattaatca gaaaaaagag caaaaaatat taaggttaat tgaacaaaag tatgttataa\n"
    "721 catactatgt tttttatata tttttatatt agaattgaaa tattcagtat ttcttttaca\n"
    "781 aaatttttct ttcaaaatgt atactttttt ttcttaattt ttttttttgc agcttctcat\n"
    "841 ggtcaagaat gtatactatt ctgtgggcta aatatcatat cttagaatta taagacatag\n"
    "901 aaacattaaa tgaatagaga taaactcagg tgtaaattat gcaattaaaa tggactgcat\n"
    "961 tctattatgc atttaactaa ggtcattttt tttttaatgc acaaaaaaga acacccaaaa\n"
    "1021 gatatatctg gaaaactttc tttcagtgat acattttttc tgtttttttt ctgcttttct\n"
    "1081 tttgtttaat ag\n"
    "//\n";

inline std::string random_base_string(std::mt19937_64& rng, std::size_t length) {
    static constexpr char kBases[4] = {'A', 'T', 'G', 'C'};
    std::string text(length, 'A');
    for (auto& c : text) c = kBases[rng() & 3u];
    return text;
}

/// Temp-file helper; the file is removed when the object goes out of scope.
class TempFile {
public:
    explicit TempFile(const std::string& contents, const std::string& suffix = ".txt") {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("dnainfo_test_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++) + suffix);
        std::ofstream out(path_);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace testutil
