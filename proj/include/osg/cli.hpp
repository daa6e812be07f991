#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace osg {

/// Exit codes of the `osg` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;     // usage, format or validation error
inline constexpr int kExitFailures = 2;  // verify/conjecture/replay found failures

/// Entry point behind the `osg` executable. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a..b" or "a"; every value must be a valid potency.
std::vector<unsigned> parse_potency_range(const std::string& text);

}  // namespace osg
