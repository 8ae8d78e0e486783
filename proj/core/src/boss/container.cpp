#include "hoboss/boss/container.hpp"

#include <fstream>
#include <string>

#include "hoboss/error.hpp"
#include "hoboss/ingest/edge_table.hpp"
#include "hoboss/succinct/binary_io.hpp"

namespace hoboss::boss {

void write_container(std::ostream &out, const BossIndex &boss, std::uint16_t min_order,
                     const succinct::BpTree *topology) {
    io::write_tag(out, std::string_view(kContainerMagic, 4));
    io::write_le<std::uint16_t>(out, kContainerVersion);
    io::write_le<std::uint16_t>(out, static_cast<std::uint16_t>(boss.order()));
    io::write_le<std::uint16_t>(out, min_order);

    boss.last().serialize(out, "BBIT");
    boss.non_dollar().serialize(out, "BEBT");
    boss.reduced().serialize(out, "EPRM");

    io::write_tag(out, "CARR");
    io::write_le<std::uint64_t>(out, boss.counts().size());
    for (std::uint64_t c : boss.counts())
        io::write_le<std::uint64_t>(out, c);

    if (topology)
        topology->serialize(out, "FBPT");
    else
        succinct::BitSeq().serialize(out, "FBPT");

    io::write_tag(out, "META");
    io::write_le<std::uint64_t>(out, boss.num_nodes());
    io::write_le<std::uint64_t>(out, boss.num_edges());
    if (!out)
        throw IoError("failed writing index container");
}

Container read_container(std::istream &in) {
    try {
        io::expect_tag(in, std::string_view(kContainerMagic, 4));
    } catch (const FormatError &) {
        throw FormatError("not an index container (bad magic)");
    }
    const auto version = io::read_le<std::uint16_t>(in);
    if (version != kContainerVersion)
        throw FormatError("unsupported index container version " + std::to_string(version));
    const auto order = io::read_le<std::uint16_t>(in);
    const auto min_order = io::read_le<std::uint16_t>(in);
    if (order < 2 || order > ingest::kDefaultMaxOrder)
        throw FormatError("index container: order K = " + std::to_string(order) + " out of range");
    if (min_order > order)
        throw FormatError("index container: minimum order exceeds K");

    auto last = succinct::BitSeq::deserialize(in, "BBIT");
    auto non_dollar = succinct::BitSeq::deserialize(in, "BEBT");
    auto reduced = succinct::WaveletSeq::deserialize(in, "EPRM");

    io::expect_tag(in, "CARR");
    if (io::read_le<std::uint64_t>(in) != kBaseCount)
        throw FormatError("index container: C array has the wrong size");
    BossIndex::Counts counts{};
    for (auto &c : counts)
        c = io::read_le<std::uint64_t>(in);

    auto topology_bits = succinct::BitSeq::deserialize(in, "FBPT");

    io::expect_tag(in, "META");
    const auto n_nodes = io::read_le<std::uint64_t>(in);
    const auto n_edges = io::read_le<std::uint64_t>(in);

    Container out;
    try {
        out.boss = BossIndex(order, std::move(last), std::move(non_dollar), std::move(reduced), counts);
        if (topology_bits.size() > 0)
            out.topology = succinct::BpTree(std::move(topology_bits));
    } catch (const InvariantViolation &e) {
        throw FormatError(std::string("index container: ") + e.what());
    } catch (const ArgumentError &e) {
        throw FormatError(std::string("index container: ") + e.what());
    }
    if (out.boss.num_nodes() != n_nodes || out.boss.num_edges() != n_edges)
        throw FormatError("index container: metadata disagrees with the stored arrays");
    out.min_order = min_order;
    return out;
}

void save_container(const std::filesystem::path &path, const BossIndex &boss, std::uint16_t min_order,
                    const succinct::BpTree *topology) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    write_container(out, boss, min_order, topology);
}

Container load_container(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "'");
    return read_container(in);
}

}  // namespace hoboss::boss
