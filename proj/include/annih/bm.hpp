#pragma once

#include <vector>

#include "annih/inverse.hpp"

namespace annih {

/// Minimal polynomial of a finite sequence, together with the final
/// auxiliary polynomial and the per-prefix linear complexities.
struct MinPolyResult {
    UnivariatePoly mu1;
    int lc = 0;  // linear complexity = deg(mu1)
    UnivariatePoly mu2;
    std::vector<int> profile;  // entry k: linear complexity of s_0..s_k
    bool degenerate = false;   // all-zero input; mu1 = 1 by convention
};

/// The sequence-side discrepancy sum_{j=0}^{deg mu1} [mu1]_j s_{j+i-deg mu1}.
/// Requires deg(mu1) <= i <= n-1 so every index lands inside the sequence.
FieldElement seq_discrepancy(const UnivariatePoly& mu1, const Sequence& s, int i);

/// Minimal polynomial by the shift-register synthesis that tracks the
/// degree gap d directly (no last-length-change bookkeeping). Matches the
/// dehomogenized head of the annihilator-basis construction exactly.
MinPolyResult minimal_polynomial(const Sequence& s);

std::vector<int> linear_complexity_profile(const Sequence& s);

}  // namespace annih
