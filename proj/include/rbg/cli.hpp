#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rbg {

/// Runs one `rbg` invocation; args excludes the program name.
/// Exit codes: 0 success, 1 mathematical refusal (JSON on `out`),
/// 2 usage, input, schema or cap error (message on `err`).
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbg
