#ifndef ADEG_CLI_CORE_HPP
#define ADEG_CLI_CORE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace adeg {

// Full command-line front end; args excludes argv[0]. Returns the process
// exit code: 0 all asserted properties certified, 2 reported-only gaps,
// 1 failures or errors. A manifest is written for every run.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adeg

#endif
