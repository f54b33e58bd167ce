#pragma once

#include <string>

#include "lacuna/bautin.hpp"
#include "lacuna/bounds.hpp"
#include "lacuna/verifier.hpp"

namespace lacuna {

// Machine report: JSON with exact rationals as strings and floats as
// 17-significant-digit strings tagged with their rounding direction.
// Emission is deterministic; parse + re-emit is byte-identical.
std::string emit_bound_report(const BoundReport& report);
std::string emit_verification_report(const BoundReport& report, const VerificationRun& run);
std::string emit_triangulation(const BautinMatrix& matrix);

// Parses any machine report and re-emits it with the same settings (the
// round-trip used by the byte-stability contract).
std::string reemit_report(const std::string& report_text);

// Human-readable table.
std::string format_bound_report(const BoundReport& report);
std::string format_verification_run(const VerificationRun& run);

}  // namespace lacuna
