#include "annih/forms.hpp"

#include <algorithm>

namespace annih {

std::strong_ordering grlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.xdeg <=> b.xdeg;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    return {std::max(a.xdeg, b.xdeg), std::max(a.zdeg, b.zdeg)};
}

namespace {

std::string power_str(const char* var, int e) {
    if (e == 0) return "";
    std::string s = var;
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

// Appends "c*mono" (or "-c*mono") to out, eliding unit coefficients.
void append_term(std::string& out, const FieldElement& c, const std::string& mono) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs.front() == '-';
    if (!out.empty() && !neg) out += "+";
    if (mono.empty()) {
        out += cs;
        return;
    }
    if (cs == "1") {
        out += mono;
    } else if (cs == "-1") {
        out += "-" + mono;
    } else {
        out += cs + "*" + mono;
    }
}

}  // namespace

std::string to_display(const Monomial& m) {
    std::string x = power_str("x", m.xdeg);
    std::string z = power_str("z", m.zdeg);
    if (x.empty() && z.empty()) return "1";
    if (x.empty()) return z;
    if (z.empty()) return x;
    return x + "*" + z;
}

Form::Form(Field field, int degree, std::vector<FieldElement> coeffs)
    : field_(field), degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 0 || coeffs_.size() != static_cast<std::size_t>(degree_) + 1)
        throw ZeroForm("form of degree " + std::to_string(degree_) + " needs " +
                       std::to_string(degree_ + 1) + " coefficients");
    bool nonzero = false;
    for (const auto& c : coeffs_) {
        if (c.field() != field_) throw FieldMismatch("form coefficient from a different field");
        nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero) throw ZeroForm("the zero polynomial is not a form");
}

Form Form::monomial(const Field& field, const Monomial& m) {
    return monomial(field, field.one(), m);
}

Form Form::monomial(const Field& field, const FieldElement& c, const Monomial& m) {
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(m.degree()) + 1, field.zero());
    coeffs[static_cast<std::size_t>(m.xdeg)] = c;
    return Form(field, m.degree(), std::move(coeffs));
}

Monomial Form::exponent() const {
    for (int j = degree_; j >= 0; --j)
        if (!coeffs_[static_cast<std::size_t>(j)].is_zero()) return {j, degree_ - j};
    throw ZeroForm("unreachable: form invariant broken");
}

const FieldElement& Form::leading_coeff() const {
    return coeffs_[static_cast<std::size_t>(exponent().xdeg)];
}

Leading leading(const Form& form) {
    Monomial e = form.exponent();
    return {form.coeff(e.xdeg), e};
}

Form mul(const Form& a, const Form& b) {
    const Field& k = a.field();
    int deg = a.degree() + b.degree();
    std::vector<FieldElement> out(static_cast<std::size_t>(deg) + 1, k.zero());
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            out[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return Form(k, deg, std::move(out));
}

Form mul_x(const Form& form, int k) {
    if (k == 0) return form;
    std::vector<FieldElement> out(static_cast<std::size_t>(k), form.field().zero());
    out.insert(out.end(), form.coeffs().begin(), form.coeffs().end());
    return Form(form.field(), form.degree() + k, std::move(out));
}

Form mul_z(const Form& form, int k) {
    if (k == 0) return form;
    std::vector<FieldElement> out = form.coeffs();
    out.insert(out.end(), static_cast<std::size_t>(k), form.field().zero());
    return Form(form.field(), form.degree() + k, std::move(out));
}

Form add(const Form& a, const Form& b) {
    if (a.degree() != b.degree()) throw ZeroResult("adding forms of different degrees");
    std::vector<FieldElement> out = a.coeffs();
    bool nonzero = false;
    for (int j = 0; j <= a.degree(); ++j) {
        out[static_cast<std::size_t>(j)] += b.coeff(j);
        nonzero = nonzero || !out[static_cast<std::size_t>(j)].is_zero();
    }
    if (!nonzero) throw ZeroResult("form sum vanished");
    return Form(a.field(), a.degree(), std::move(out));
}

Form scale(const Form& form, const FieldElement& c) {
    if (c.is_zero()) throw ZeroResult("scaling a form by zero");
    std::vector<FieldElement> out = form.coeffs();
    for (auto& x : out) x *= c;
    return Form(form.field(), form.degree(), std::move(out));
}

Form ominus(const Form& f1, const Form& f2, const FieldElement& q) {
    if (q.is_zero()) return f1;
    int d = f2.degree() - f1.degree();
    Form lhs = mul_x(f1, std::max(d, 0));
    Form rhs = scale(mul_x(f2, std::max(-d, 0)), q);
    std::vector<FieldElement> out = lhs.coeffs();
    bool nonzero = false;
    for (int j = 0; j <= lhs.degree(); ++j) {
        out[static_cast<std::size_t>(j)] -= rhs.coeff(j);
        nonzero = nonzero || !out[static_cast<std::size_t>(j)].is_zero();
    }
    if (!nonzero) throw ZeroResult("combination of forms vanished");
    return Form(f1.field(), lhs.degree(), std::move(out));
}

std::optional<Form> rem(const Form& form, const std::vector<Form>& divisors) {
    // Homogeneous input and divisors keep every intermediate value inside
    // one coefficient vector of fixed total degree; a reduction at x-degree
    // j only touches strictly smaller positions, so one top-down sweep is a
    // complete division.
    const int deg = form.degree();
    std::vector<FieldElement> work = form.coeffs();
    for (int j = deg; j >= 0; --j) {
        FieldElement& cur = work[static_cast<std::size_t>(j)];
        if (cur.is_zero()) continue;
        Monomial target{j, deg - j};
        bool reduced = true;
        while (reduced && !cur.is_zero()) {
            reduced = false;
            for (const Form& g : divisors) {
                Monomial lm = g.exponent();
                if (!lm.divides(target)) continue;
                FieldElement factor = cur / g.coeff(lm.xdeg);
                int shift = j - lm.xdeg;  // multiply g by x^shift z^(...)
                for (int t = 0; t <= lm.xdeg; ++t) {
                    if (g.coeff(t).is_zero()) continue;
                    work[static_cast<std::size_t>(t + shift)] -= factor * g.coeff(t);
                }
                reduced = true;
                break;
            }
        }
    }
    bool nonzero = std::any_of(work.begin(), work.end(),
                               [](const FieldElement& c) { return !c.is_zero(); });
    if (!nonzero) return std::nullopt;
    return Form(form.field(), deg, std::move(work));
}

std::optional<Form> s_poly(const Form& a, const Form& b) {
    Leading la = leading(a), lb = leading(b);
    Monomial l = lcm(la.exponent, lb.exponent);
    Form left = mul_z(mul_x(scale(a, inv(la.lc)), l.xdeg - la.exponent.xdeg),
                      l.zdeg - la.exponent.zdeg);
    Form right = mul_z(mul_x(scale(b, inv(lb.lc)), l.xdeg - lb.exponent.xdeg),
                       l.zdeg - lb.exponent.zdeg);
    std::vector<FieldElement> out = left.coeffs();
    bool nonzero = false;
    for (int j = 0; j <= left.degree(); ++j) {
        out[static_cast<std::size_t>(j)] -= right.coeff(j);
        nonzero = nonzero || !out[static_cast<std::size_t>(j)].is_zero();
    }
    if (!nonzero) return std::nullopt;
    return Form(a.field(), left.degree(), std::move(out));
}

int z_valuation(const Form& form) {
    return form.exponent().zdeg;
}

Form z_cofactor(const Form& form) {
    int p = z_valuation(form);
    if (p == 0) return form;
    std::vector<FieldElement> out(form.coeffs().begin(),
                                  form.coeffs().begin() + (form.degree() - p + 1));
    return Form(form.field(), form.degree() - p, std::move(out));
}

UnivariatePoly::UnivariatePoly(Field field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.field() != field_) throw FieldMismatch("polynomial coefficient from a different field");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::zero(const Field& field) { return UnivariatePoly(field, {}); }

UnivariatePoly UnivariatePoly::one(const Field& field) {
    return UnivariatePoly(field, {field.one()});
}

UnivariatePoly UnivariatePoly::x_pow(const Field& field, int k) {
    std::vector<FieldElement> c(static_cast<std::size_t>(k) + 1, field.zero());
    c.back() = field.one();
    return UnivariatePoly(field, std::move(c));
}

FieldElement UnivariatePoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_.zero();
    return coeffs_[static_cast<std::size_t>(i)];
}

UnivariatePoly add(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<FieldElement> out;
    int n = std::max(a.degree(), b.degree()) + 1;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) out.push_back(a.coeff(i) + b.coeff(i));
    return UnivariatePoly(a.field(), std::move(out));
}

UnivariatePoly sub(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<FieldElement> out;
    int n = std::max(a.degree(), b.degree()) + 1;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) out.push_back(a.coeff(i) - b.coeff(i));
    return UnivariatePoly(a.field(), std::move(out));
}

UnivariatePoly scale(const UnivariatePoly& p, const FieldElement& c) {
    std::vector<FieldElement> out = p.coeffs();
    for (auto& x : out) x *= c;
    return UnivariatePoly(p.field(), std::move(out));
}

UnivariatePoly shift_x(const UnivariatePoly& p, int k) {
    if (p.is_zero() || k == 0) return p;
    std::vector<FieldElement> out(static_cast<std::size_t>(k), p.field().zero());
    out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
    return UnivariatePoly(p.field(), std::move(out));
}

UnivariatePoly mul(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return UnivariatePoly::zero(a.field());
    std::vector<FieldElement> out(static_cast<std::size_t>(a.degree() + b.degree()) + 1,
                                  a.field().zero());
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            out[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return UnivariatePoly(a.field(), std::move(out));
}

UnivariatePoly dehomogenize(const Form& form) {
    return UnivariatePoly(form.field(), form.coeffs());
}

std::string to_display(const Form& form) {
    std::string out;
    for (int j = form.degree(); j >= 0; --j) {
        if (form.coeff(j).is_zero()) continue;
        Monomial m{j, form.degree() - j};
        append_term(out, form.coeff(j), m.degree() == 0 ? "" : to_display(m));
    }
    return out;
}

std::string to_display(const UnivariatePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (p.coeff(i).is_zero()) continue;
        append_term(out, p.coeff(i), power_str("x", i));
    }
    return out;
}

}  // namespace annih
