#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ql/structure.hpp"

namespace ql {

// Stable kebab-case label for a structure class, used by reports and the C
// surface alike.
std::string class_label(StructureClass k);

// Full command-line driver; args excludes the program name. Returns the
// process exit code: 0 when the queried property holds or the input is
// accepted, 1 when a countermodel or rejection was printed, 2 on usage or
// format errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out);

}  // namespace ql
