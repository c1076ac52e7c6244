#include "annih/engine.hpp"

#include <algorithm>

namespace annih {

FieldElement discrepancy(const Form& form, const InverseForm& G) {
    const int d = form.degree() + G.total_degree();
    if (d > 0) return form.field().zero();
    FieldElement sum = form.field().zero();
    for (int j = std::max(0, d); j <= form.degree(); ++j) {
        const FieldElement& c = form.coeff(j);
        if (c.is_zero()) continue;
        FieldElement g = G.coeff(d - j);
        if (g.is_zero()) continue;
        sum += c * g;
    }
    return sum;
}

int AnnihilatorBasis::profile_lambda(int j) const {
    if (j == order() + 1) return 0;
    if (j < m || j > order()) throw IndexOutOfRange("no lambda recorded at degree " + std::to_string(j));
    return profile[static_cast<std::size_t>(order() - j)];
}

EngineState::EngineState(int v, const FieldElement& lc, RunOptions opts)
    : opts_(opts),
      m_(v),
      denom_(lc),
      current_(InverseForm::x_power(lc.field(), lc, v)) {
    if (v > 0) throw IndexOutOfRange("order must be <= 0");
    if (lc.is_zero()) throw ZeroForm("leading coefficient must be nonzero");
    const Field& k = lc.field();
    basis_.push_back(Form::monomial(k, Monomial{1 - v, 0}));
    basis_.push_back(Form::monomial(k, Monomial{0, 1}));
    dtuple_ = {v, v + 1};
    profile_.push_back(1 - v);
    if (opts_.trace) snapshot();
}

EngineState init_state(int v, const FieldElement& lc, RunOptions opts) {
    return EngineState(v, lc, opts);
}

void EngineState::step(const FieldElement& a) {
    const InverseForm next = augment(a, current_);
    const FieldElement delta1 = discrepancy(f1(), next);
    const int d = gap();

    if (opts_.validate && discrepancy(f2(), next) != denom_)
        throw InvariantViolation("stored denominator drifted from the discrepancy of f2");

    const bool active = !delta1.is_zero() && d > 0;
    const FieldElement q = delta1.is_zero() ? f1().field().zero() : delta1 / denom_;
    Form head = ominus(f1(), f2(), q);

    std::vector<Form> grown;
    grown.reserve(basis_.size() + 1);
    grown.push_back(std::move(head));
    std::vector<int> dgrown;
    dgrown.reserve(dtuple_.size() + 1);
    dgrown.push_back(m_ - 1);
    if (active) {
        // The tuple grows: every previous element shifts up by one slot.
        for (std::size_t i = 0; i < basis_.size(); ++i) grown.push_back(mul_z(basis_[i], 1));
        dgrown.insert(dgrown.end(), dtuple_.begin(), dtuple_.end());
        denom_ = delta1;
    } else {
        for (std::size_t i = 1; i < basis_.size(); ++i) grown.push_back(mul_z(basis_[i], 1));
        dgrown.insert(dgrown.end(), dtuple_.begin() + 1, dtuple_.end());
    }

    basis_ = std::move(grown);
    dtuple_ = std::move(dgrown);
    m_ -= 1;
    current_ = next;
    profile_.push_back(f1().degree());
    if (opts_.reduced) reduce_head();
    if (opts_.validate) check_invariants(d, delta1.is_zero());
    if (opts_.trace) snapshot();
}

void EngineState::reduce_head() {
    const Monomial lm2 = f2().exponent();
    const Form& head = f1();
    bool reducible = false;
    for (int j = 0; j <= head.degree() && !reducible; ++j)
        reducible = !head.coeff(j).is_zero() && lm2.divides(Monomial{j, head.degree() - j});
    if (!reducible) return;
    auto r = rem(head, {f2()});
    if (!r) throw InvariantViolation("head of the basis reduced to zero");
    basis_.front() = std::move(*r);
}

void EngineState::snapshot() {
    trace_.push_back(TraceRow{m_, basis_, dtuple_});
}

void EngineState::check_invariants(int old_gap, bool delta1_zero) const {
    auto fail = [](const char* what) { throw InvariantViolation(what); };

    if (basis_.size() < 2 || basis_.size() != dtuple_.size()) fail("basis/degree-tuple size mismatch");
    if (!f1().is_monic() || f1().divisible_by_z()) fail("f1 must be monic with z not dividing it");
    if (!f2().is_monic() || !f2().divisible_by_z()) fail("f2 must be monic and divisible by z");
    if (f1().degree() + f2().degree() != 2 - m_) fail("degree sum of the pair must be 2 - m");
    if (denom_.is_zero()) fail("stored denominator must stay nonzero");

    const int lambda = f1().degree();
    if (static_cast<int>(basis_.size()) > lambda + 1) fail("tuple longer than lambda + 1");
    if (profile_.size() >= 2 && profile_[profile_.size() - 2] > lambda) fail("profile must be non-decreasing");

    const int newd = gap();
    if (delta1_zero ? (newd != old_gap + 1) : (newd != 1 - std::abs(old_gap)))
        fail("gap did not follow the flip rule");

    const int v = m_ + static_cast<int>(profile_.size()) - 1;
    auto lambda_at = [&](int j) -> int {
        if (j == v + 1) return 0;
        return profile_[static_cast<std::size_t>(v - j)];
    };
    if (dtuple_.front() != m_ || dtuple_.back() != v + 1) fail("degree tuple endpoints are wrong");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i > 0 && dtuple_[i] <= dtuple_[i - 1]) fail("degree tuple must be strictly increasing");
        Monomial e = basis_[i].exponent();
        if (e.xdeg != lambda_at(dtuple_[i]) || e.zdeg != dtuple_[i] - m_)
            fail("leading exponent disagrees with the degree tuple");
        if (!basis_[i].is_monic()) fail("every basis element must be monic");
        if (i > 0 && lambda_at(dtuple_[i - 1]) + lambda_at(dtuple_[i]) != 2 - dtuple_[i])
            fail("lambda sum relation failed");
    }
}

AnnihilatorBasis EngineState::finish() const {
    AnnihilatorBasis out{f1().field(), basis_, dtuple_, m_, f1().degree(), profile_,
                         static_cast<long long>(f1().degree()) * f2().degree(),
                         false, std::nullopt};
    out.reduced = is_reduced(out);
    if (opts_.trace) out.trace = trace_;
    return out;
}

AnnihilatorBasis run(const InverseForm& F, RunOptions opts) {
    const int v = F.order();
    EngineState state(v, F.coeff(v), opts);
    for (int i = v - 1; i >= F.total_degree(); --i) state.step(F.coeff(i));
    return state.finish();
}

bool is_reduced(const AnnihilatorBasis& basis) {
    const Monomial lm2 = basis.f2().exponent();
    const Form& head = basis.f1();
    for (int j = 0; j <= head.degree(); ++j)
        if (!head.coeff(j).is_zero() && lm2.divides(Monomial{j, head.degree() - j})) return false;
    return true;
}

long long dimension(const AnnihilatorBasis& basis) {
    return static_cast<long long>(basis.f1().degree()) * basis.f2().degree();
}

long long staircase_rectangle_sum(const AnnihilatorBasis& basis) {
    long long sum = 0;
    for (std::size_t i = 1; i < basis.degree_tuple.size(); ++i)
        sum += static_cast<long long>(basis.degree_tuple[i] - basis.degree_tuple[i - 1]) *
               basis.profile_lambda(basis.degree_tuple[i - 1]);
    return sum;
}

std::vector<Monomial> staircase(const AnnihilatorBasis& basis) {
    std::vector<Monomial> out;
    out.reserve(basis.basis.size());
    for (const Form& g : basis.basis) out.push_back(g.exponent());
    return out;
}

UniquenessReport classify_uniqueness(const AnnihilatorBasis& basis) {
    UniquenessReport report;
    const int d = basis.f2().degree() - basis.f1().degree();
    report.f1_unique = d > 0;
    if (d > 0) {
        Form shifted = mul_z(basis.f1(), d);
        std::vector<FieldElement> coeffs = shifted.coeffs();
        for (int j = 0; j <= shifted.degree(); ++j)
            coeffs[static_cast<std::size_t>(j)] -= basis.f2().coeff(j);
        report.witness = Form(basis.field, shifted.degree(), std::move(coeffs));
    }
    return report;
}

bool factor_check(const AnnihilatorBasis& basis) {
    for (std::size_t i = 0; i < basis.basis.size(); ++i)
        if (z_valuation(basis.basis[i]) != basis.degree_tuple[i] - basis.m) return false;
    return true;
}

bool next_degree_check(const AnnihilatorBasis& basis) {
    const int c = static_cast<int>(basis.degree_tuple.size());
    for (int i = 1; i + 1 < c; ++i) {
        const int target = basis.profile_lambda(basis.degree_tuple[static_cast<std::size_t>(i - 1)]);
        int least = basis.order() + 2;  // sentinel: not found
        for (int j = basis.m; j <= basis.order(); ++j) {
            if (target > basis.profile_lambda(j)) {
                least = j;
                break;
            }
        }
        if (least != basis.degree_tuple[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

}  // namespace annih
