#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hoboss/assembly/omnitigs.hpp"

namespace hoboss::assembly {

// >omni_<idx> start=<kmer> len=<L> linked=<0|1>, sequence on one line
void write_omnitigs_fasta(std::ostream &out, const OmnitigStore &store);
// >uni_<idx> len=<L>
void write_unitigs_fasta(std::ostream &out, const std::vector<std::string> &unitigs);

}  // namespace hoboss::assembly
