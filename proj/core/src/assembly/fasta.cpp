#include "hoboss/assembly/fasta.hpp"

#include <ostream>

namespace hoboss::assembly {

void write_omnitigs_fasta(std::ostream &out, const OmnitigStore &store) {
    for (std::size_t i = 0; i < store.size(); ++i) {
        const auto &o = store.omnitigs()[i];
        const std::string text = store.materialize(i);
        out << ">omni_" << i << " start=" << o.seed << " len=" << text.size() << " linked=" << (o.linked() ? 1 : 0)
            << '\n'
            << text << '\n';
    }
}

void write_unitigs_fasta(std::ostream &out, const std::vector<std::string> &unitigs) {
    for (std::size_t i = 0; i < unitigs.size(); ++i)
        out << ">uni_" << i << " len=" << unitigs[i].size() << '\n' << unitigs[i] << '\n';
}

}  // namespace hoboss::assembly
