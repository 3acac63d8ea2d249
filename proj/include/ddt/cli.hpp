#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddt {

// Batch front end. Returns the process exit code: 0 on success (all
// requested checks passed), 1 on a failed verification, 2 on usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ddt
