#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annih/forms.hpp"

namespace annih {

/// A nonzero inverse form F in K[x^-1, z^-1]: homogeneous of total degree
/// m <= 0, stored densely with coeffs()[k] the coefficient F_{m+k} of
/// x^(m+k) z^(-k). K[x,z] acts on these by contraction.
class InverseForm {
public:
    InverseForm(Field field, int total_degree, std::vector<FieldElement> coeffs);

    /// c * x^v, the single-term inverse form (c nonzero, v <= 0).
    static InverseForm x_power(const Field& field, const FieldElement& c, int v);

    const Field& field() const { return field_; }
    int total_degree() const { return m_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    /// F_j, zero outside [m, 0].
    FieldElement coeff(int j) const;

    /// The order v = max{ j : F_j != 0 }.
    int order() const;

    /// The grlex-minimal exponent (xdeg, zdeg), both <= 0.
    std::pair<int, int> min_exponent() const;

    friend bool operator==(const InverseForm& a, const InverseForm& b) {
        return a.m_ == b.m_ && a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const InverseForm& a, const InverseForm& b) { return !(a == b); }

private:
    Field field_;
    int m_;
    std::vector<FieldElement> coeffs_;
};

/// A finite sequence s_0..s_{n-1}, n >= 1. All-zero sequences are
/// representable (the minimal-polynomial routine accepts them) but are
/// rejected wherever a nonzero inverse form is required.
struct Sequence {
    Field field;
    std::vector<FieldElement> terms;

    int length() const { return static_cast<int>(terms.size()); }
    bool nontrivial() const;

    /// min{ i : s_i != 0 }; throws AllZeroSequence if none.
    int valuation() const;
};

/// The inverse form of a nontrivial sequence: total degree 1-n, with the
/// x^(-j) coefficient equal to s_j.
InverseForm from_sequence(const Sequence& s);

/// Reads the sequence back: s_j = F_{-j}, n = 1 - m. Inverse to
/// from_sequence.
Sequence to_sequence(const InverseForm& F);

int order(const InverseForm& F);

/// a x^(m-1) + F z^-1: prepends one coefficient, the inverse-form
/// counterpart of appending a sequence term.
InverseForm augment(const FieldElement& a, const InverseForm& F);

/// The subform of total degree i (m <= i <= order): drops the
/// coefficients below x^i.
InverseForm subform(const InverseForm& F, int i);

/// The module action. nullopt encodes zero, in particular whenever
/// |form| + |F| > 0.
std::optional<InverseForm> contract(const Form& form, const InverseForm& F);

bool annihilates(const Form& form, const InverseForm& F);

std::string to_display(const InverseForm& F);

}  // namespace annih
