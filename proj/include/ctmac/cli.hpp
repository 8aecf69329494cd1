#pragma once

#include <ostream>
#include <string>

#include <ctmac/report.hpp>

namespace ctmac
{

// One JSON object on one line: check, params, lhs, rhs, equal, refused, notes,
// and, when with_timing is set, millis and terms_peak.
std::string report_json(const Report &r, bool with_timing = true);
// "[PASS] check k=v ...: lhs == rhs" and the like.
std::string report_text(const Report &r);

// Parses the command line and runs it.  Reports go to out, diagnostics and
// usage errors to err.  Returns 0 if no check failed, 1 if one did, 2 on a
// usage error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace ctmac
