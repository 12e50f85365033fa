#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grshull/quantum.hpp"
#include "json.hpp"

namespace grshull {

using Json = nlohmann::ordered_json;

// Every admissible (lambda, tau, rho, sigma) for this q, ordered by
// (lambda, tau, rho, sigma). With exact_sigma_only the sigma values are
// restricted to {2, 3, rho}, the ones whose entanglement count is certified;
// otherwise every sigma up to rho/kappa is produced.
std::vector<CodeParams> admissible_families(long long q, bool exact_sigma_only);

// One table line: the quantum record for dimension k plus the hull data
// behind it.
struct TableRow {
    long long k = 0;
    QuantumCodeRecord record;
    HullComputation hull;
};

// Rows for k_lo <= k <= k_hi (throws if the range leaves [1, n]). Dimensions
// whose quantum dimension would be negative are skipped.
std::vector<TableRow> table_rows(const CodeParams& params, long long k_lo,
                                 long long k_hi);

std::string exact_text(Exactness e);
std::string mds_text(MdsStatus m);

// CSV with the fixed header k,n,K,d,c,exact,eaqmds.
std::string rows_to_csv(const std::vector<TableRow>& rows);

Json record_to_json(const QuantumCodeRecord& record);
QuantumCodeRecord record_from_json(const Json& j);
Json row_to_json(const TableRow& row);
Json rows_to_json(const std::vector<TableRow>& rows);

// Scope of a formula-vs-oracle verification run.
struct VerifySpec {
    std::vector<long long> qs;
    long long max_n = 2000;  // families with larger n are skipped with a warning
    std::optional<std::pair<long long, long long>> k_range;
    bool exact_sigma_only = true;
    // Test hook: shifts the residue target of both counting lattices, leaving
    // the Gram side untouched, so a nonzero value must produce mismatches.
    long long inject_l_offset = 0;
};

struct VerifyMismatch {
    CodeParams params;
    long long k = 0;
    long long formula_c = 0;
    long long oracle_c = 0;
    bool equality_required = false;
};

struct VerifyReport {
    long long families_checked = 0;
    long long instances_checked = 0;
    long long families_skipped = 0;
    std::vector<std::string> warnings;
    std::vector<VerifyMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// For every admissible family of every q: compare the counted c against the
// Gram-rank oracle for each k in range. Inside the certified window the two
// must be equal; outside it the rank must not exceed the count.
VerifyReport run_verify(const VerifySpec& spec);

std::string verify_report_text(const VerifyReport& report);
Json verify_report_json(const VerifyReport& report);

}  // namespace grshull
