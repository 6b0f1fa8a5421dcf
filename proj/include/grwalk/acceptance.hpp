#pragma once

#include <iosfwd>
#include <string>

namespace grwalk {

// Runs the verification suite ("all" or "fast"; fast trims the random-sample
// counts), printing one pass/fail line per criterion. Returns the number of
// failed criteria. Throws InvalidParamsError for an unknown suite name.
int run_acceptance(const std::string& suite, std::ostream& out);

} // namespace grwalk
