#pragma once

#include <json.hpp>

#include "gp/words.hpp"

namespace gp {

// JSON building blocks shared by the export functions. Group tables are
// written out in full so a report is readable without the original
// input files.
nlohmann::ordered_json group_json(const GroupDescriptor& G);
nlohmann::ordered_json spec_json(const GraphProductSpec& spec);

} // namespace gp
