#pragma once

#include <optional>
#include <vector>

#include "annih/inverse.hpp"

namespace annih {

/// The single product coefficient [form * G] at total x-degree
/// |form| + |G|; zero when that degree is positive. For a form known to
/// annihilate the truncation of G this measures the failure to annihilate
/// G itself.
FieldElement discrepancy(const Form& form, const InverseForm& G);

struct RunOptions {
    bool reduced = false;   // keep the basis reduced after every step
    bool trace = false;     // record per-step snapshots
    bool validate = false;  // run the internal invariant checks each step
};

struct TraceRow {
    int m = 0;
    std::vector<Form> basis;
    std::vector<int> degree_tuple;
};

/// The finished construction for an inverse form of total degree m: a
/// minimal (or reduced) grlex Groebner basis of its annihilator ideal,
/// ordered by strictly decreasing leading monomials, plus the degree
/// tuple, the complexity profile and the quotient dimension.
struct AnnihilatorBasis {
    Field field;
    std::vector<Form> basis;
    std::vector<int> degree_tuple;
    int m = 0;
    int lambda = 0;              // = |basis[0]|, the linear complexity
    std::vector<int> profile;    // lambda of each subform, order v down to m
    long long dim = 0;           // = |f1| * |f2|
    bool reduced = false;        // actual reducedness of the emitted basis
    std::optional<std::vector<TraceRow>> trace;

    const Form& f1() const { return basis.front(); }
    const Form& f2() const { return basis[1]; }
    int order() const { return m + static_cast<int>(profile.size()) - 1; }

    /// lambda_j read off the profile; by convention zero at j = order+1.
    int profile_lambda(int j) const;
};

/// The running state of the induction: the generating pair (f1, f2) at the
/// head of the accumulated tuple, the degree tuple, the stored denominator
/// of the quotient, and the inverse form consumed so far.
class EngineState {
public:
    /// Base case for c * x^v: basis (x^(1-v), z), degree tuple (v, v+1),
    /// stored denominator c.
    EngineState(int v, const FieldElement& lc, RunOptions opts = {});

    /// One induction step: consumes the next coefficient a (the x^(m-1)
    /// coefficient of the augmented inverse form) and rebuilds the tuple.
    void step(const FieldElement& a);

    int m() const { return m_; }
    const std::vector<Form>& basis() const { return basis_; }
    const std::vector<int>& degree_tuple() const { return dtuple_; }
    const Form& f1() const { return basis_.front(); }
    const Form& f2() const { return basis_[1]; }
    int gap() const { return f2().degree() - f1().degree(); }  // d = |f2| - |f1|
    const FieldElement& denom() const { return denom_; }
    const std::vector<int>& profile() const { return profile_; }
    const InverseForm& consumed() const { return current_; }

    AnnihilatorBasis finish() const;

private:
    void reduce_head();
    void snapshot();
    void check_invariants(int old_gap, bool delta1_zero) const;

    RunOptions opts_;
    int m_;
    std::vector<Form> basis_;
    std::vector<int> dtuple_;
    FieldElement denom_;
    std::vector<int> profile_;
    InverseForm current_;
    std::vector<TraceRow> trace_;
};

EngineState init_state(int v, const FieldElement& lc, RunOptions opts = {});

/// Runs the full induction over the coefficients of F, order down to m.
AnnihilatorBasis run(const InverseForm& F, RunOptions opts = {});

/// Fast reducedness test: only monomials of f1 against the leading
/// monomial of f2 need checking for constructed bases.
bool is_reduced(const AnnihilatorBasis& basis);

/// dim_K(R / I) = |f1| * |f2|.
long long dimension(const AnnihilatorBasis& basis);

/// The same dimension as the staircase rectangle sum
/// sum_i (D_i - D_{i-1}) * lambda_{D_{i-1}}.
long long staircase_rectangle_sum(const AnnihilatorBasis& basis);

/// Leading exponents of the basis elements, in basis order.
std::vector<Monomial> staircase(const AnnihilatorBasis& basis);

struct UniquenessReport {
    bool f1_unique = false;
    std::optional<Form> witness;  // f1*z^d - f2 when d > 0
};

/// The degree-lambda generator is unique iff |f1| < |f2| iff
/// 2*lambda < 2 - m; when the gap is positive, also builds the second
/// z-divisible annihilating form of degree |f2|.
UniquenessReport classify_uniqueness(const AnnihilatorBasis& basis);

/// z-valuation of each element equals D_i - m.
bool factor_check(const AnnihilatorBasis& basis);

/// Each interior D_i is the least j whose lambda drops below
/// lambda_{D_{i-1}}.
bool next_degree_check(const AnnihilatorBasis& basis);

}  // namespace annih
