#pragma once

#include <string>
#include <vector>

#include "cgaskey/family.hpp"
#include "cgaskey/report.hpp"

namespace cgaskey {

/// Names accepted by run_suite, in report order.
const std::vector<std::string>& check_names();

/// Runs one named check on an instance. Checks that do not apply to the family
/// come back as a single skipped entry carrying the reason.
Report run_check(const std::string& name, const FamilyInstance& inst);

/// Every check in check_names(); names outside `selected` are listed as skipped.
/// An empty selection means all. Unknown names throw ParseError.
Report run_suite(const FamilyInstance& inst, const std::vector<std::string>& selected = {});

}  // namespace cgaskey
