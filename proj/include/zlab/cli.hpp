#ifndef ZLAB_CLI_HPP
#define ZLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace zlab {

// Runs the workbench command line.  `args` holds the arguments without the
// program name.  Human-readable output goes to `out`, diagnostics to `err`.
//
// Exit codes:
//   0  success / the queried property holds
//   1  definite negative answer (identity fails, non-membership, an empty
//      search, or a reproduction discrepancy)
//   2  usage or input error (bad flags, malformed table file, unparsable
//      identity, unknown variety, size-guard violation)
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace zlab

#endif  // ZLAB_CLI_HPP
