// hoboss: build, assemble, stats, verify, simulate, bench

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "hoboss/assembly/fasta.hpp"
#include "hoboss/assembly/omnitigs.hpp"
#include "hoboss/assembly/unitigs.hpp"
#include "hoboss/error.hpp"
#include "hoboss/ingest/reads.hpp"
#include "hoboss/oracle/equivalence.hpp"
#include "hoboss/sim/simulate.hpp"
#include "hoboss/vo/ho_boss.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace hoboss;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point start) {
    return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

unsigned thread_cap() {
    if (const char *env = std::getenv("HOBOSS_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1)
                return static_cast<unsigned>(n);
        } catch (const std::exception &) {
        }
        throw UsageError("HOBOSS_THREADS must be a positive integer");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void check_orders(unsigned k, unsigned m) {
    if (k < 2 || k > ingest::kDefaultMaxOrder)
        throw UsageError("-k must lie in [2, " + std::to_string(ingest::kDefaultMaxOrder) + "]");
    if (m < 1 || m > k)
        throw UsageError("-m must lie in [1, K]");
}

std::ofstream open_out(const fs::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

// Prints one TSV header plus one row, or the same fields as a JSON object.
void print_record(std::ostream &out, const json &record, bool as_json) {
    if (as_json) {
        out << record.dump(2) << '\n';
        return;
    }
    bool first = true;
    for (const auto &[key, value] : record.items()) {
        out << (first ? "" : "\t") << key;
        first = false;
    }
    out << '\n';
    first = true;
    for (const auto &[key, value] : record.items()) {
        out << (first ? "" : "\t");
        if (value.is_number_float()) {
            std::ostringstream s;
            s << std::setprecision(6) << value.get<double>();
            out << s.str();
        } else if (value.is_string()) {
            out << value.get<std::string>();
        } else {
            out << value.dump();
        }
        first = false;
    }
    out << '\n';
}

ingest::ReadSet load_reads(const std::vector<std::string> &files, std::size_t min_len) {
    std::vector<fs::path> paths(files.begin(), files.end());
    ingest::ParseOptions options;
    options.min_read_len = min_len;
    auto reads = ingest::parse_reads(paths, options);
    if (reads.reads.empty())
        throw ArgumentError("no reads found in the input");
    return reads;
}

// ---- build ----

struct BuildArgs {
    std::vector<std::string> reads;
    unsigned k = 31, m = 1;
    std::string out;
    std::size_t min_len = 1;
};

int cmd_build(const BuildArgs &a) {
    check_orders(a.k, a.m);
    const auto reads = load_reads(a.reads, a.min_len);
    const auto index = vo::HoBossIndex::build(reads, a.k, a.m);
    index.save(fs::path(a.out));
    const auto &boss = index.boss();
    const std::uint64_t bits = boss.last().size_in_bits() + boss.non_dollar().size_in_bits() +
                               boss.reduced().size_in_bits() + 64 * kBaseCount + index.topology().size_in_bits();
    json rec;
    rec["n_kmers"] = boss.num_nodes();
    rec["n_edges"] = boss.num_edges();
    rec["bits_per_edge"] = static_cast<double>(bits) / static_cast<double>(boss.num_edges());
    print_record(std::cout, rec, false);
    return 0;
}

// ---- assemble ----

struct AssembleArgs {
    std::string index;
    std::string out;
    std::string mode = "link";
    std::string unitigs;
    std::vector<std::string> reads;
    std::string stats;
    bool json = false;
};

int cmd_assemble(const AssembleArgs &a) {
    if (a.mode != "link" && a.mode != "cycle-only")
        throw UsageError("--mode must be 'link' or 'cycle-only'");
    const auto index = vo::HoBossIndex::load(fs::path(a.index));

    const auto start = Clock::now();
    const auto starters = assembly::find_starters(index.boss());
    const auto store = a.mode == "link" ? assembly::assemble_all(index, starters)
                                        : assembly::assemble_cycle_only(index, starters, thread_cap());
    const double elapsed = micros_since(start);
    const auto counts = assembly::count_assembly(store);

    {
        auto out = open_out(a.out);
        assembly::write_omnitigs_fasta(out, store);
    }
    const auto unitigs = assembly::extract_unitigs(index.boss());
    if (!a.unitigs.empty()) {
        auto out = open_out(a.unitigs);
        assembly::write_unitigs_fasta(out, unitigs);
    }
    std::uint64_t max_unitig = 0;
    if (!a.reads.empty()) {
        max_unitig = assembly::max_unitig_length(load_reads(a.reads, 1), index.min_order(), index.order());
    } else {
        for (const auto &u : unitigs)
            max_unitig = std::max<std::uint64_t>(max_unitig, u.size());
    }

    std::uint64_t n_pm = 0;
    if (a.mode == "link")
        n_pm = store.pm().count_ones();
    else
        n_pm = assembly::mark_pm_nodes(index).count_ones();

    json rec;
    rec["n_kmers"] = index.num_nodes();
    rec["n_starters"] = starters.starters.size();
    rec["n_pm_nodes"] = n_pm;
    rec["max_omnitig"] = counts.max_omnitig;
    rec["max_unitig"] = max_unitig;
    rec["traversed_nodes"] = counts.traversed_nodes;
    rec["omnitig_nodes"] = counts.omnitig_nodes;
    rec["pct_reduction"] = counts.pct_reduction;
    rec["us_per_node"] = counts.traversed_nodes ? elapsed / static_cast<double>(counts.traversed_nodes) : 0.0;
    if (a.stats.empty()) {
        print_record(std::cout, rec, a.json);
    } else {
        auto out = open_out(a.stats);
        print_record(out, rec, a.json);
    }
    return 0;
}

// ---- stats ----

int cmd_stats(const std::string &path, bool as_json) {
    const auto index = vo::HoBossIndex::load(fs::path(path));
    const auto &boss = index.boss();
    const std::vector<std::pair<std::string, std::uint64_t>> parts{
          {"B", boss.last().size_in_bits()},
          {"BE", boss.non_dollar().size_in_bits()},
          {"E'", boss.reduced().size_in_bits()},
          {"C", 64 * kBaseCount},
          {"F", index.topology().size_in_bits()},
    };
    std::uint64_t total = 0;
    for (const auto &[name, bits] : parts)
        total += bits;

    if (as_json) {
        json rec;
        rec["n_kmers"] = boss.num_nodes();
        rec["n_edges"] = boss.num_edges();
        rec["f_length"] = index.topology().size();
        rec["total_bits"] = total;
        json structures = json::array();
        for (const auto &[name, bits] : parts)
            structures.push_back({{"structure", name},
                                  {"bits", bits},
                                  {"fraction", static_cast<double>(bits) / static_cast<double>(total)}});
        rec["structures"] = structures;
        std::cout << rec.dump(2) << '\n';
        return 0;
    }
    std::cout << "structure\tbits\tfraction\n";
    for (const auto &[name, bits] : parts)
        std::cout << name << '\t' << bits << '\t' << std::setprecision(9)
                  << static_cast<double>(bits) / static_cast<double>(total) << '\n';
    std::cout << "# n_kmers=" << boss.num_nodes() << " n_edges=" << boss.num_edges()
              << " f_length=" << index.topology().size() << " total_bits=" << total << '\n';
    return 0;
}

// ---- verify ----

struct VerifyArgs {
    std::vector<std::string> reads;
    std::string index;
    unsigned k = 5, m = 2;
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs &a) {
    oracle::EquivalenceReport total;
    std::uint64_t instances = 0;
    if (!a.reads.empty() || !a.index.empty()) {
        if (a.reads.empty())
            throw UsageError("verify --index needs the reads the index was built from");
        const auto reads = load_reads(a.reads, 1);
        vo::HoBossIndex index;
        if (a.index.empty()) {
            check_orders(a.k, a.m);
            index = vo::HoBossIndex::build(reads, a.k, a.m);
        } else {
            index = vo::HoBossIndex::load(fs::path(a.index));
        }
        const oracle::NaiveGraph graph(reads.reads, index.order(), index.min_order());
        total.merge(oracle::check_equivalence(index, graph));
        ++instances;
    } else {
        for (std::uint64_t t = 0; t < a.trials; ++t) {
            const auto inst = sim::random_small_instance(a.seed + t);
            const auto index = vo::HoBossIndex::build(ingest::ReadSet{inst.reads, {}}, inst.order, inst.min_order);
            std::stringstream buf;
            index.save(buf);
            const auto reloaded = vo::HoBossIndex::load(buf);
            const oracle::NaiveGraph graph(inst.reads, inst.order, inst.min_order);
            total.merge(oracle::check_equivalence(reloaded, graph));
            ++instances;
        }
    }
    std::cout << "instances\t" << instances << "\nchecks\t" << total.checks << "\nfailures\t" << total.failures
              << '\n';
    for (const auto &m : total.messages)
        std::cout << "# " << m << '\n';
    std::cout << (total.ok() ? "PASS" : "FAIL") << '\n';
    return total.ok() ? 0 : kExitRuntime;
}

// ---- simulate ----

struct SimulateArgs {
    std::string genome;
    std::uint64_t genome_len = 0;
    double coverage = 10;
    std::uint32_t read_len = 150;
    std::uint64_t seed = 1;
    bool circular = false;
    std::string out;
    std::string genome_out;
};

int cmd_simulate(const SimulateArgs &a) {
    std::string genome;
    if (!a.genome.empty()) {
        const std::vector<fs::path> paths{a.genome};
        for (const auto &piece : ingest::parse_reads(paths).reads)
            genome += piece;
    } else if (a.genome_len > 0) {
        genome = sim::random_genome(a.genome_len, a.seed);
    } else {
        throw UsageError("simulate needs a genome FASTA or --genome-len");
    }
    sim::SampleOptions opt;
    opt.coverage = a.coverage;
    opt.read_len = a.read_len;
    opt.seed = a.seed;
    opt.circular = a.circular;
    const auto reads = sim::sample_reads(genome, opt);
    if (!a.genome_out.empty()) {
        auto out = open_out(a.genome_out);
        sim::write_fasta(out, {genome}, "genome");
    }
    if (a.out.empty() || a.out == "-") {
        sim::write_fasta(std::cout, reads, "read_");
    } else {
        auto out = open_out(a.out);
        sim::write_fasta(out, reads, "read_");
    }
    std::cerr << "simulated " << reads.size() << " reads of length " << a.read_len << " from " << genome.size()
              << " bp\n";
    return 0;
}

// ---- bench ----

struct BenchArgs {
    std::vector<std::string> reads;
    unsigned k = 21, m = 11;
    std::uint64_t genome_len = 20000;
    double coverage = 10;
    std::uint64_t seed = 1;
    bool json = false;
};

int cmd_bench(const BenchArgs &a) {
    check_orders(a.k, a.m);
    ingest::ReadSet reads;
    if (!a.reads.empty()) {
        reads = load_reads(a.reads, 1);
    } else {
        sim::SampleOptions opt;
        opt.coverage = a.coverage;
        opt.seed = a.seed;
        reads.reads = sim::sample_reads(sim::random_genome(a.genome_len, a.seed), opt);
    }
    auto start = Clock::now();
    const auto index = vo::HoBossIndex::build(reads, a.k, a.m);
    const double build_us = micros_since(start);

    std::uint64_t forwards = 0, shorters = 0;
    start = Clock::now();
    for (std::uint64_t v = 1; v <= index.num_nodes(); ++v) {
        const vo::NodeRange r{v, v};
        const auto out = index.out_symbols(r);
        for (Base s : out.symbols) {
            (void)index.vo_forward(r, s);
            ++forwards;
        }
    }
    const double forward_us = micros_since(start);
    start = Clock::now();
    for (std::uint64_t v = 1; v <= index.num_nodes(); ++v) {
        (void)index.shorter({v, v});
        ++shorters;
    }
    const double shorter_us = micros_since(start);

    start = Clock::now();
    const auto link = assembly::assemble_all(index);
    const double link_us = micros_since(start);
    start = Clock::now();
    const auto cycle = assembly::assemble_cycle_only(index, thread_cap());
    const double cycle_us = micros_since(start);
    const auto link_counts = assembly::count_assembly(link);
    const auto cycle_counts = assembly::count_assembly(cycle);

    json rec;
    rec["n_kmers"] = index.num_nodes();
    rec["build_ms"] = build_us / 1000;
    rec["ns_per_forward"] = forwards ? 1000 * forward_us / static_cast<double>(forwards) : 0.0;
    rec["ns_per_shorter"] = shorters ? 1000 * shorter_us / static_cast<double>(shorters) : 0.0;
    rec["link_ms"] = link_us / 1000;
    rec["cycle_only_ms"] = cycle_us / 1000;
    rec["link_traversed"] = link_counts.traversed_nodes;
    rec["cycle_only_traversed"] = cycle_counts.traversed_nodes;
    rec["pct_reduction"] = link_counts.pct_reduction;
    print_record(std::cout, rec, a.json);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hidden-order BOSS index and right-maximal omnitig assembler"};
    app.require_subcommand(1);

    BuildArgs build;
    auto *b = app.add_subcommand("build", "Build an index from FASTA/FASTQ reads");
    b->add_option("reads", build.reads, "Read files (FASTA/FASTQ, optionally gzip)")->required();
    b->add_option("-k", build.k, "Maximum order K")->required();
    b->add_option("-m", build.m, "Minimum order m")->required();
    b->add_option("-o,--output", build.out, "Output .hoboss file")->required();
    b->add_option("--min-read-len", build.min_len, "Drop read fragments shorter than this");

    AssembleArgs assemble;
    auto *as = app.add_subcommand("assemble", "Assemble right-maximal omnitigs from an index");
    as->add_option("index", assemble.index, "Index file")->required();
    as->add_option("-o,--output", assemble.out, "Omnitig FASTA")->required();
    as->add_option("--mode", assemble.mode, "link or cycle-only")->capture_default_str();
    as->add_option("--unitigs", assemble.unitigs, "Also write order-K unitigs to this FASTA");
    as->add_option("--reads", assemble.reads, "Reads for max_unitig over orders m..K");
    as->add_option("--stats", assemble.stats, "Write the stats record here instead of stdout");
    as->add_flag("--json", assemble.json, "Stats as JSON");

    std::string stats_path;
    bool stats_json = false;
    auto *st = app.add_subcommand("stats", "Per-structure space breakdown of an index");
    st->add_option("index", stats_path, "Index file")->required();
    st->add_flag("--json", stats_json, "JSON output");

    VerifyArgs verify;
    auto *ve = app.add_subcommand("verify", "Cross-check the index against the brute-force oracle");
    ve->add_option("reads", verify.reads, "Read files; without them, random instances are generated");
    ve->add_option("--index", verify.index, "Check this index file instead of building one");
    ve->add_option("-k", verify.k, "Order K when building from reads")->capture_default_str();
    ve->add_option("-m", verify.m, "Minimum order when building from reads")->capture_default_str();
    ve->add_option("--trials", verify.trials, "Random instances")->capture_default_str();
    ve->add_option("--seed", verify.seed, "First seed")->capture_default_str();

    SimulateArgs simulate;
    auto *si = app.add_subcommand("simulate", "Sample error-free reads from a genome");
    si->add_option("genome", simulate.genome, "Genome FASTA");
    si->add_option("--genome-len", simulate.genome_len, "Random genome of this length instead of a file");
    si->add_option("--coverage", simulate.coverage, "Coverage")->capture_default_str();
    si->add_option("--read-len", simulate.read_len, "Read length")->capture_default_str();
    si->add_option("--seed", simulate.seed, "Seed")->capture_default_str();
    si->add_flag("--circular", simulate.circular, "Reads may wrap around the genome end");
    si->add_option("-o,--output", simulate.out, "Reads FASTA (default stdout)");
    si->add_option("--genome-out", simulate.genome_out, "Also write the genome");

    BenchArgs bench;
    auto *be = app.add_subcommand("bench", "Time navigation and assembly");
    be->add_option("reads", bench.reads, "Read files; default is a simulated genome");
    be->add_option("-k", bench.k, "Order K")->capture_default_str();
    be->add_option("-m", bench.m, "Minimum order")->capture_default_str();
    be->add_option("--genome-len", bench.genome_len, "Simulated genome length")->capture_default_str();
    be->add_option("--coverage", bench.coverage, "Simulated coverage")->capture_default_str();
    be->add_option("--seed", bench.seed, "Seed")->capture_default_str();
    be->add_flag("--json", bench.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*b)
            return cmd_build(build);
        if (*as)
            return cmd_assemble(assemble);
        if (*st)
            return cmd_stats(stats_path, stats_json);
        if (*ve)
            return cmd_verify(verify);
        if (*si)
            return cmd_simulate(simulate);
        if (*be)
            return cmd_bench(bench);
    } catch (const UsageError &e) {
        std::cerr << "hoboss: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError &e) {
        std::cerr << "hoboss: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "hoboss: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
