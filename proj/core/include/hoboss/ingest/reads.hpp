#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hoboss::ingest {

struct ReadSet {
    std::vector<std::string> reads;    // over {A,C,G,T} only
    std::vector<std::string> sources;  // input identifiers, in load order
};

struct ParseOptions {
    std::size_t min_read_len = 1;  // fragments shorter than this are dropped
};

// Splits a raw record at every character outside {A,C,G,T} (lower case is
// folded to upper case first); empty fragments are dropped.
std::vector<std::string> split_acgt(std::string_view sequence);

// FASTA or FASTQ, detected from the first record; gzip-compressed input is
// read transparently.
ReadSet parse_reads(std::span<const std::filesystem::path> paths, const ParseOptions &options = {});

// Parses in-memory FASTA/FASTQ text; `source` names the input in error messages.
ReadSet parse_reads_text(std::string_view text, std::string source, const ParseOptions &options = {});

}  // namespace hoboss::ingest
