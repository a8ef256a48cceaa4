#pragma once

// Verification suites run over random trials by the CLI.

#include "tpdilog/identities.hpp"

#include <string_view>
#include <vector>

namespace tpdilog {

enum class Suite { chain, s3, tetra, mrho, wedge, bversion, script_l, all };

std::string_view suite_name(Suite s);
Suite parse_suite(std::string_view name);

/// Relative tolerance of the wedge suite.
inline constexpr double kWedgeTolerance = 1e-8;

/// Runs one suite (or every applicable suite for Suite::all) over the
/// configured trials. script_l needs n = 4; every suite needs n >= 3.
IdentityReport run_suite(Suite suite, const TrialConfig& config);

}  // namespace tpdilog
