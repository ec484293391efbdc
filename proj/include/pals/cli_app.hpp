#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pals {

// exit codes, documented in --help: 0 ok, 2 usage, 3 format, 4 rekey, 5 io,
// 1 any other failure
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pals
