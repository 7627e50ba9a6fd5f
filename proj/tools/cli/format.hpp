#pragma once

#include <string>

#include "cli/instance.hpp"
#include "goint/grouping.hpp"
#include "goint/overlap_ops.hpp"
#include "goint/verify.hpp"

namespace goint::cli {

/// Reports list at most this many violations; the count field has the total.
inline constexpr std::size_t kMaxListedViolations = 50;

/// x rounded to 12 significant digits.
double round12(double x);
Json num(double x);
std::string csv_num(double x);

Json to_json(const LevelProfile& m);
Json to_json(const AxiomReport& r);
Json to_json(const PropertyReport& r);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace goint::cli
