#include "crosscomp/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "crosscomp/errors.hpp"

namespace crosscomp {

void check_formula(const CnfFormula& f) {
    if (f.variable_count < 0)
        throw PreconditionError("negative variable count");
    for (const auto& clause : f.clauses)
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > f.variable_count)
                throw PreconditionError("literal " + std::to_string(lit) + " does not name a declared variable");
}

bool is_tautological(const Clause& clause) {
    for (int lit : clause)
        if (std::find(clause.begin(), clause.end(), -lit) != clause.end())
            return true;
    return false;
}

CnfFormula canonical_formula(const CnfFormula& f) {
    CnfFormula out{f.variable_count, {}};
    for (auto clause : f.clauses) {
        std::sort(clause.begin(), clause.end(), [](int a, int b) {
            if (std::abs(a) != std::abs(b))
                return std::abs(a) < std::abs(b);
            return a > b;
        });
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        out.clauses.push_back(std::move(clause));
    }
    return out;
}

bool evaluate(const CnfFormula& f, const std::vector<bool>& assignment) {
    for (const auto& clause : f.clauses) {
        bool satisfied = false;
        for (int lit : clause) {
            bool value = assignment.at(static_cast<std::size_t>(std::abs(lit)));
            if ((lit > 0) == value) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied)
            return false;
    }
    return true;
}

}  // namespace crosscomp
