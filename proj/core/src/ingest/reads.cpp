#include "hoboss/ingest/reads.hpp"

#include <zlib.h>

#include <memory>

#include "hoboss/error.hpp"

namespace hoboss::ingest {

namespace {

class LineSource {
  public:
    virtual ~LineSource() = default;
    // false at end of input; strips the trailing "\n" / "\r\n"
    virtual bool next(std::string &line) = 0;
};

class TextLines : public LineSource {
  public:
    explicit TextLines(std::string_view text) : text_(text) {}
    bool next(std::string &line) override {
        if (pos_ >= text_.size())
            return false;
        auto end = text_.find('\n', pos_);
        if (end == std::string_view::npos)
            end = text_.size();
        line.assign(text_.substr(pos_, end - pos_));
        pos_ = end + 1;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return true;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class GzLines : public LineSource {
  public:
    explicit GzLines(const std::filesystem::path &path) : file_(gzopen(path.c_str(), "rb")) {
        if (!file_)
            throw IoError("cannot open '" + path.string() + "'");
    }
    ~GzLines() override { gzclose(file_); }
    GzLines(const GzLines &) = delete;
    GzLines &operator=(const GzLines &) = delete;

    bool next(std::string &line) override {
        line.clear();
        char buf[1 << 14];
        bool any = false;
        while (gzgets(file_, buf, sizeof(buf)) != nullptr) {
            any = true;
            line += buf;
            if (!line.empty() && line.back() == '\n')
                break;
        }
        if (!any) {
            int err = Z_OK;
            const char *msg = gzerror(file_, &err);
            if (err != Z_OK && err != Z_STREAM_END)
                throw IoError(std::string("read error: ") + msg);
            return false;
        }
        if (!line.empty() && line.back() == '\n')
            line.pop_back();
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return true;
    }

  private:
    gzFile file_;
};

void add_fragments(std::string_view sequence, const ParseOptions &options, ReadSet &out) {
    for (auto &fragment : split_acgt(sequence))
        if (fragment.size() >= options.min_read_len)
            out.reads.push_back(std::move(fragment));
}

void parse_lines(LineSource &lines, const std::string &source, const ParseOptions &options, ReadSet &out) {
    std::string line;
    std::size_t line_no = 0;
    auto where = [&](std::size_t n) { return source + ":" + std::to_string(n); };

    // skip leading blank lines, then detect the format
    bool have = false;
    while ((have = lines.next(line))) {
        ++line_no;
        if (!line.empty())
            break;
    }
    if (!have)
        return;

    if (line[0] == '>') {
        std::string sequence;
        while (lines.next(line)) {
            ++line_no;
            if (!line.empty() && line[0] == '>') {
                add_fragments(sequence, options, out);
                sequence.clear();
                continue;
            }
            sequence += line;
        }
        add_fragments(sequence, options, out);
    } else if (line[0] == '@') {
        while (true) {
            const std::size_t header_line = line_no;
            std::string sequence, plus, quality;
            if (!lines.next(sequence))
                throw ParseError(where(header_line) + ": FASTQ record truncated after header");
            ++line_no;
            if (!lines.next(plus) || plus.empty() || plus[0] != '+')
                throw ParseError(where(line_no + 1) + ": FASTQ record missing '+' separator");
            ++line_no;
            if (!lines.next(quality))
                throw ParseError(where(line_no + 1) + ": FASTQ record missing quality line");
            ++line_no;
            if (quality.size() != sequence.size())
                throw ParseError(where(line_no) + ": FASTQ quality length differs from sequence length");
            add_fragments(sequence, options, out);

            bool more = false;
            while ((more = lines.next(line))) {
                ++line_no;
                if (!line.empty())
                    break;
            }
            if (!more)
                break;
            if (line[0] != '@')
                throw ParseError(where(line_no) + ": expected FASTQ header starting with '@'");
        }
    } else {
        throw ParseError(where(line_no) + ": expected FASTA ('>') or FASTQ ('@') record");
    }
}

}  // namespace

std::vector<std::string> split_acgt(std::string_view sequence) {
    std::vector<std::string> fragments;
    std::string current;
    for (char c : sequence) {
        if (c >= 'a' && c <= 'z')
            c = static_cast<char>(c - 'a' + 'A');
        if (c == 'A' || c == 'C' || c == 'G' || c == 'T') {
            current.push_back(c);
        } else if (!current.empty()) {
            fragments.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty())
        fragments.push_back(std::move(current));
    return fragments;
}

ReadSet parse_reads(std::span<const std::filesystem::path> paths, const ParseOptions &options) {
    ReadSet out;
    for (const auto &path : paths) {
        std::error_code ec;
        if (!std::filesystem::is_regular_file(path, ec))
            throw IoError("cannot read '" + path.string() + "': not a regular file");
        GzLines lines(path);
        parse_lines(lines, path.string(), options, out);
        out.sources.push_back(path.string());
    }
    return out;
}

ReadSet parse_reads_text(std::string_view text, std::string source, const ParseOptions &options) {
    ReadSet out;
    TextLines lines(text);
    parse_lines(lines, source, options, out);
    out.sources.push_back(std::move(source));
    return out;
}

}  // namespace hoboss::ingest
