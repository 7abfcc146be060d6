#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ksinv/moduli_components.hpp"
#include "ksinv/s_invariant.hpp"

namespace ksinv::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kDomainError = 2 };

/// Flat key -> string record, in output order. Rationals appear as canonical
/// "p/q" strings and flags as "true"/"false".
using OutputRecord = std::vector<std::pair<std::string, std::string>>;

OutputRecord report_record(const SInvariantReport& report);
OutputRecord row_record(const ComponentRow& row);

/// Header `n,k,l,spin,s,abs_s,ek_mod1` followed by one line per row.
std::string render_table_csv(const ComponentTable& table);
std::string render_table_json(const ComponentTable& table, int n, std::int64_t l);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ksinv::cli
