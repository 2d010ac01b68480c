#pragma once

#include <iosfwd>

#include <json.hpp>

namespace wavetraj::runner {

// Executes one CLI request described by a JSON config (see README for the
// key reference). Normal output goes to `out`; failures are reported as a
// single-line JSON object on `err`. Returns the process exit code:
// 0 success, 1 unexpected failure, 2 configuration error, 3 numerical or
// domain error, 4 io error. `validate` mode returns 5 when the cross-check
// exceeds its tolerance.
int run(const nlohmann::json& cfg, std::ostream& out, std::ostream& err);

}  // namespace wavetraj::runner
