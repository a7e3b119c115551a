#pragma once

#include "voa/format.hpp"
#include "voa/orbifold.hpp"
#include "voa/scext.hpp"

namespace voa {

Table table6_table();

// extension census shaped like the published module tables:
// module, branching, conformal weight, qdim, qdim^2
Table extension_table(const std::string& base_spec, const std::string& generator,
                      bool untwisted_only);

// integral-cw>=2 census with the case twist: label, cw, (u|Lambda), twisted cw
Table census_table(const Table6Case& c);

Table mirror_table();
Table mirror_table_from(
    const std::vector<std::tuple<IntLabels, IntLabels, Rat, long long>>& pairs);

Table multiplicities_table();

// regenerate every golden table under dir; returns the file names written
std::vector<std::string> write_golden_all(const std::string& dir);

}  // namespace voa
