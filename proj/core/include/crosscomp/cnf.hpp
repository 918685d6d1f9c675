#pragma once

#include <vector>

namespace crosscomp {

/// Literals are nonzero; -v is the negation of variable v (1-based).
using Clause = std::vector<int>;

struct CnfFormula {
    int variable_count = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Throws PreconditionError on a zero literal or one naming an undeclared variable.
void check_formula(const CnfFormula& f);

/// A clause containing both v and -v.
bool is_tautological(const Clause& clause);

/// Literals sorted by (variable, polarity) with repeats removed; clause order kept.
CnfFormula canonical_formula(const CnfFormula& f);

bool evaluate(const CnfFormula& f, const std::vector<bool>& assignment);

}  // namespace crosscomp
