#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "patterns.hpp"

namespace antiramsey {

struct unsupported_domain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A closed-form AR value together with the (n, parameter) domain on which
// the formula is proven. `exact` is false for the cycle lower bound, which
// is only a bound for general k.
struct FormulaValue {
    long long value = 0;
    bool exact = true;
    std::string validity;
};

// AR(n, K_{1,k}) for k >= 2, n >= k+1.
FormulaValue star_formula(int n, int k);

// AR(n, P_{k+1}) for a path of length k >= 2. Exact, but the proven
// threshold in n is only "large enough"; the validity string records that.
FormulaValue path_formula(int n, int k);

// Lower bound on AR(n, C_k) for n >= k >= 3 (tight for k = 3, 4).
FormulaValue cycle_lower_bound(int n, int k);

// AR(n, tP_2) for t >= 2, n >= 2t+1 (two branches split at n = (5t-7)/2).
FormulaValue matching_formula(int n, int t);

// AR(2t, tP_2) for t >= 3.
FormulaValue perfect_matching_formula(int t);

// The full table value for a catalog pattern, piecewise over n. Throws
// std::invalid_argument when n < |V(P)| and unsupported_domain if (P, n)
// falls outside every proven range.
FormulaValue ar_formula(const PatternGraph& p, int n);

struct CrossCheckReport {
    struct Entry {
        std::string identity;
        bool pass = false;
        std::string detail;  // first counterexample, when failing
    };
    std::vector<Entry> entries;
    bool all_pass() const;
};

// Arithmetic identities tying the evaluators together over 4 <= n <= 200.
CrossCheckReport cross_checks();

}  // namespace antiramsey
