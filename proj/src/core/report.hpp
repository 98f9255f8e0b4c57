#ifndef EDSFN_CORE_REPORT_HPP
#define EDSFN_CORE_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "json.hpp"

namespace edsfn {

using Json = nlohmann::ordered_json;

struct RunOptions {
    long nmax = 50;
    long depth = 0;  // component solver depth; 0 picks the exponent lcm
};

/// Commands accepted by run_command.
const std::vector<std::string>& report_commands();

/// Runs fibres | eds | height | hasse | bounds | report on a loaded curve.
/// Rationals are strings "a/b" (or "a" when integral); key names are fixed.
Json run_command(std::string_view command, const AnyCurve& curve, const RunOptions& opts);

/// Human-readable table for a run_command or repro result.
std::string render_text(const Json& report);

std::string rational_text(const mpq_class& q);

}  // namespace edsfn

#endif
