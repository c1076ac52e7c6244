#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "annih/field.hpp"

namespace annih {

/// A monomial x^a z^b. Degrees are tiny; plain ints throughout.
struct Monomial {
    int xdeg = 0;
    int zdeg = 0;

    int degree() const { return xdeg + zdeg; }
    bool divides(const Monomial& other) const {
        return xdeg <= other.xdeg && zdeg <= other.zdeg;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order with x > z: first by total degree, ties by
/// x-degree.
std::strong_ordering grlex_cmp(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);

std::string to_display(const Monomial& m);

/// A nonzero homogeneous bivariate polynomial of total degree deg,
/// stored densely by x-degree: coeff(j) multiplies x^j z^(deg-j).
/// The zero polynomial is never a Form; operations that can vanish
/// return std::optional<Form>.
class Form {
public:
    Form(Field field, int degree, std::vector<FieldElement> coeffs);

    static Form monomial(const Field& field, const Monomial& m);
    static Form monomial(const Field& field, const FieldElement& c, const Monomial& m);

    const Field& field() const { return field_; }
    int degree() const { return degree_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    const FieldElement& coeff(int xdeg) const { return coeffs_.at(static_cast<std::size_t>(xdeg)); }

    /// Grlex exponent (j*, deg-j*) with j* the largest nonzero position.
    Monomial exponent() const;
    const FieldElement& leading_coeff() const;
    bool is_monic() const { return leading_coeff().is_one(); }
    bool divisible_by_z() const { return coeffs_.back().is_zero(); }

    friend bool operator==(const Form& a, const Form& b) {
        return a.degree_ == b.degree_ && a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

private:
    Field field_;
    int degree_;
    std::vector<FieldElement> coeffs_;
};

struct Leading {
    FieldElement lc;
    Monomial exponent;
};

Leading leading(const Form& form);

Form mul(const Form& a, const Form& b);
Form mul_x(const Form& form, int k);
Form mul_z(const Form& form, int k);
Form add(const Form& a, const Form& b);  // same degree; throws ZeroResult if the sum vanishes
Form scale(const Form& form, const FieldElement& c);

/// x^max(d,0)*f1 - q*x^max(-d,0)*f2 with d = |f2| - |f1|; returns f1 when
/// q = 0. Throws ZeroResult if the combination vanishes.
Form ominus(const Form& f1, const Form& f2, const FieldElement& q);

/// Remainder of grlex division by an ordered divisor list: repeatedly
/// clears the grlex-greatest reducible monomial using the first divisor
/// whose leading monomial divides it. nullopt encodes the zero remainder.
std::optional<Form> rem(const Form& form, const std::vector<Form>& divisors);

std::optional<Form> s_poly(const Form& a, const Form& b);

/// Largest p with z^p dividing the form.
int z_valuation(const Form& form);

/// The z-free cofactor: form / z^z_valuation(form).
Form z_cofactor(const Form& form);

/// Dense univariate polynomial, trailing zeros trimmed; empty == zero.
class UnivariatePoly {
public:
    UnivariatePoly(Field field, std::vector<FieldElement> coeffs);

    static UnivariatePoly zero(const Field& field);
    static UnivariatePoly one(const Field& field);
    static UnivariatePoly x_pow(const Field& field, int k);

    const Field& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // zero -> -1
    FieldElement coeff(int i) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const UnivariatePoly& a, const UnivariatePoly& b) { return !(a == b); }

private:
    Field field_;
    std::vector<FieldElement> coeffs_;
};

UnivariatePoly add(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly sub(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly scale(const UnivariatePoly& p, const FieldElement& c);
UnivariatePoly shift_x(const UnivariatePoly& p, int k);  // multiply by x^k
UnivariatePoly mul(const UnivariatePoly& a, const UnivariatePoly& b);

/// Substitutes z = 1; positions coincide with the form's x-degrees.
UnivariatePoly dehomogenize(const Form& form);

/// Human-readable rendering, terms in decreasing (grlex/degree) order:
/// "x^4+x*z^3+z^4", "x^4+x+1", "2/5*x^2*z".
std::string to_display(const Form& form);
std::string to_display(const UnivariatePoly& p);

}  // namespace annih
