#ifndef CAPGRAPH_CLI_HPP
#define CAPGRAPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace capgraph
{
    inline constexpr const char * tool_version = "0.1.0";

    // Exit codes: 0 all checks pass, 1 hard failure, 2 usage or config
    // error, 3 budget exhaustion.
    int run_cli(const std::vector<std::string> & args, std::ostream & out,
        std::ostream & err);
}

#endif
