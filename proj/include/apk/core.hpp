#pragma once

#include <string>
#include <vector>

#include "apk/types.hpp"

namespace apk {

struct Violation {
    std::string code;     // stable identifier, e.g. "sign-condition"
    std::string rho;      // block id, empty for document-level findings
    int row = -1;         // row index within block, -1 if not row-specific
    std::string message;  // human-readable detail
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every structural invariant; with strict = true also good parity of
// each row's summand and the dimension sum against the group. Violations are
// data in the report, never exceptions.
ValidationReport validate(const ExtendedMultiSegment& e, bool strict);
ValidationReport validate(const AParameter& psi, bool strict);

// Good parity for a single summand: parity of a+b determined by the group
// family and the selfdual type of rho.
bool good_parity(const GroupSpec& group, Selfdual type, long long a, long long b);

// prod_rho prod_i (-1)^{floor(b_i/2)+l_i} eta_i^{b_i} == 1. Equivalent to
// the rendered symbol containing an even number of minus slots.
bool sign_condition(const ExtendedMultiSegment& e);
int sign_contribution(const ExtSegment& row);

MultiSegment support(const ExtendedMultiSegment& e);

// Each row ([A,B], l, eta) maps to the summand (rho, A+B+1, A-B+1).
AParameter to_parameter(const ExtendedMultiSegment& e);

// [A,B] -> [A+t, B+t] on every row; (l, eta) and row order unchanged. The
// group rank grows accordingly so strict validity is preserved.
ExtendedMultiSegment shift(const ExtendedMultiSegment& e, long long t);

// Smallest non-negative integer t with B_i + t >= 0 for every row.
long long min_shift_to_nonneg(const ExtendedMultiSegment& e);

// Rows of the A-parameter as segments: A = (a+b)/2 - 1, B = (a-b)/2,
// listed per rho in an order satisfying (P'): ascending B, ties by A.
ExtendedMultiSegment parameter_rows(const AParameter& psi);

}  // namespace apk
