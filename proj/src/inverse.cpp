#include "annih/inverse.hpp"

#include <algorithm>

namespace annih {

InverseForm::InverseForm(Field field, int total_degree, std::vector<FieldElement> coeffs)
    : field_(field), m_(total_degree), coeffs_(std::move(coeffs)) {
    if (m_ > 0 || coeffs_.size() != static_cast<std::size_t>(1 - m_))
        throw ZeroForm("inverse form of total degree " + std::to_string(m_) + " needs " +
                       std::to_string(1 - m_) + " coefficients");
    bool nonzero = false;
    for (const auto& c : coeffs_) {
        if (c.field() != field_) throw FieldMismatch("inverse-form coefficient from a different field");
        nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero) throw ZeroForm("the zero inverse form is excluded");
}

InverseForm InverseForm::x_power(const Field& field, const FieldElement& c, int v) {
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(1 - v), field.zero());
    coeffs.front() = c;
    return InverseForm(field, v, std::move(coeffs));
}

FieldElement InverseForm::coeff(int j) const {
    if (j < m_ || j > 0) return field_.zero();
    return coeffs_[static_cast<std::size_t>(j - m_)];
}

int InverseForm::order() const {
    for (int j = 0; j >= m_; --j)
        if (!coeff(j).is_zero()) return j;
    throw ZeroForm("unreachable: inverse-form invariant broken");
}

std::pair<int, int> InverseForm::min_exponent() const {
    for (int j = m_; j <= 0; ++j)
        if (!coeff(j).is_zero()) return {j, m_ - j};
    throw ZeroForm("unreachable: inverse-form invariant broken");
}

bool Sequence::nontrivial() const {
    return std::any_of(terms.begin(), terms.end(),
                       [](const FieldElement& t) { return !t.is_zero(); });
}

int Sequence::valuation() const {
    for (int i = 0; i < length(); ++i)
        if (!terms[static_cast<std::size_t>(i)].is_zero()) return i;
    throw AllZeroSequence("all-zero sequence has no valuation");
}

InverseForm from_sequence(const Sequence& s) {
    if (s.terms.empty() || !s.nontrivial())
        throw AllZeroSequence("a nontrivial sequence is required");
    int m = 1 - s.length();
    // coeffs[k] = F_{m+k} = s_{-(m+k)} = s_{n-1-k}
    std::vector<FieldElement> coeffs(s.terms.rbegin(), s.terms.rend());
    return InverseForm(s.field, m, std::move(coeffs));
}

Sequence to_sequence(const InverseForm& F) {
    std::vector<FieldElement> terms(F.coeffs().rbegin(), F.coeffs().rend());
    return Sequence{F.field(), std::move(terms)};
}

int order(const InverseForm& F) { return F.order(); }

InverseForm augment(const FieldElement& a, const InverseForm& F) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(F.coeffs().size() + 1);
    coeffs.push_back(a);
    coeffs.insert(coeffs.end(), F.coeffs().begin(), F.coeffs().end());
    return InverseForm(F.field(), F.total_degree() - 1, std::move(coeffs));
}

InverseForm subform(const InverseForm& F, int i) {
    if (i < F.total_degree() || i > F.order())
        throw IndexOutOfRange("subform index " + std::to_string(i) + " outside [" +
                              std::to_string(F.total_degree()) + ", " +
                              std::to_string(F.order()) + "]");
    std::vector<FieldElement> coeffs(F.coeffs().end() - (1 - i), F.coeffs().end());
    return InverseForm(F.field(), i, std::move(coeffs));
}

std::optional<InverseForm> contract(const Form& form, const InverseForm& F) {
    const int d = form.degree() + F.total_degree();
    if (d > 0) return std::nullopt;
    // Only the product coefficients at x-degrees d..0 survive; compute those
    // directly instead of materializing form * F.
    std::vector<FieldElement> out(static_cast<std::size_t>(1 - d), form.field().zero());
    bool nonzero = false;
    for (int j = 0; j <= form.degree(); ++j) {
        const FieldElement& c = form.coeff(j);
        if (c.is_zero()) continue;
        for (int i = std::max(d, F.total_degree() + j); i <= 0; ++i) {
            FieldElement t = F.coeff(i - j);
            if (t.is_zero()) continue;
            FieldElement& slot = out[static_cast<std::size_t>(i - d)];
            slot += c * t;
        }
    }
    for (const auto& c : out) nonzero = nonzero || !c.is_zero();
    if (!nonzero) return std::nullopt;
    return InverseForm(form.field(), d, std::move(out));
}

bool annihilates(const Form& form, const InverseForm& F) {
    return !contract(form, F).has_value();
}

std::string to_display(const InverseForm& F) {
    std::string out;
    auto inv_power = [](const char* var, int e) -> std::string {
        if (e == 0) return "";
        return std::string(var) + "^" + std::to_string(e);
    };
    for (int j = 0; j >= F.total_degree(); --j) {
        FieldElement c = F.coeff(j);
        if (c.is_zero()) continue;
        std::string x = inv_power("x", j);
        std::string z = inv_power("z", F.total_degree() - j);
        std::string mono = x.empty() ? z : (z.empty() ? x : x + "*" + z);
        std::string cs = c.str();
        bool neg = !cs.empty() && cs.front() == '-';
        if (!out.empty() && !neg) out += "+";
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else if (cs == "-1")
            out += "-" + mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

}  // namespace annih
