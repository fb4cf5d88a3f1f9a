#pragma once

#include <string>

#include "manna/classify.hpp"
#include "manna/division.hpp"
#include "manna/problem.hpp"
#include "manna/verify.hpp"

namespace manna {

/// Problem files are one JSON document:
///   { "agents": ["1","2"], "items": ["a","b"],
///     "utilities": [[4,-2],["1","-5"]] }
/// Rationals are integers or "p/q" strings; columns must not be all
/// zero. Parse errors carry the line number when available.
Problem load_problem(const std::string& path);
Problem problem_from_json(const std::string& text, const std::string& origin);
std::string problem_to_json(const Problem& p);

/// Division files:
///   { "allocation": [["3/4","1"],["1/4","0"]],
///     "prices": ["4","-2"], "budget": 1, "profile": ["1","1/4"] }
/// The profile is optional and recomputed when absent.
CompetitiveDivision load_division(const std::string& path, const Problem& p);
CompetitiveDivision division_from_json(const std::string& text,
                                       const Problem& p,
                                       const std::string& origin);
std::string division_to_json(const Problem& p, const CompetitiveDivision& d);

std::string classification_to_json(const Classification& cls);
std::string report_to_json(const VerificationReport& report);

/// "1 1/4" style exact rendering used by the command line tool.
std::string profile_to_string(const UtilityProfile& profile);

}  // namespace manna
