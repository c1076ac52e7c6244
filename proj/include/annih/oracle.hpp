#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annih/bm.hpp"
#include "annih/engine.hpp"

namespace annih {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool passed = false;  // conjunction of the checks
};

/// True iff sum_j [p]_j s_{j+i-deg p} = 0 for every deg p <= i <= n-1.
bool annihilating_poly(const UnivariatePoly& p, const Sequence& s);

/// Exhaustive search for the lexicographically-least monic annihilating
/// polynomial of least degree <= max_deg; nullopt if none. Guarded:
/// finite field with p^max_deg <= 10^6 only.
std::optional<UnivariatePoly> brute_min_poly(const Sequence& s, int max_deg);

/// Number of monic annihilating polynomials of degree exactly deg.
long long count_monic_annihilating_polys(const Sequence& s, int deg);

/// Number of monic z-divisible forms of degree exactly deg annihilating F.
long long count_z_divisible_annihilators(const InverseForm& F, int deg);

/// Buchberger's criterion: every S-polynomial reduces to zero modulo the
/// basis.
bool buchberger_certify(const std::vector<Form>& basis);

/// Counts the monomials outside the leading-term ideal. Throws
/// InfiniteStaircase unless the leading monomials include a pure x power
/// and a pure z power.
long long staircase_dim_count(const std::vector<Form>& basis);

struct ClassicalBm {
    int lc = 0;
    UnivariatePoly poly;  // reversed connection polynomial, monic of degree lc
};

/// Textbook shift-register synthesis with the last-length-change rule,
/// kept as an independent cross-check of the minimal-polynomial path.
ClassicalBm classical_bm(const Sequence& s);

/// Every monomial of degree 1-m annihilates F, and no constructed basis
/// element is a constant.
bool power_ideal_check(const InverseForm& F);

/// Monic elements, all annihilating F, pairwise non-divisible leading
/// terms, and Buchberger certification.
bool minimal_gb_check(const std::vector<Form>& basis, const InverseForm& F);

/// Full textbook interreduction: replaces each element by its remainder
/// modulo the others until a fixpoint.
std::vector<Form> full_reduce(std::vector<Form> basis);

/// The all-pairs reducedness definition (no monomial of any element lies
/// in the leading-term ideal of the rest).
bool fully_reduced(const std::vector<Form>& basis);

/// Runs the whole battery of checks on one sequence.
VerificationReport verify_instance(const Sequence& s);

}  // namespace annih
