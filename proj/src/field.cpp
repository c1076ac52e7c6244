#include "annih/field.hpp"

#include <charconv>

namespace annih {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t acc = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % mod;  // operands < 2^31, no overflow
        base = base * base % mod;
        exp >>= 1;
    }
    return acc;
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("not an integer: '" + std::string(text) + "'");
    return value;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 7, 61}) {  // deterministic below 2^31
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::gf(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31))
        throw NonPrimeModulus("modulus out of range [2, 2^31): " + std::to_string(p));
    if (!is_prime(p))
        throw NonPrimeModulus("modulus is not prime: " + std::to_string(p));
    return Field(FieldKind::prime, p);
}

Field Field::rationals() { return Field(FieldKind::rational, 0); }

std::string Field::name() const {
    return kind_ == FieldKind::prime ? "gf" + std::to_string(p_) : "q";
}

FieldElement Field::zero() const { return FieldElement(*this); }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t n) const {
    FieldElement e(*this);
    if (kind_ == FieldKind::prime) {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        e.res_ = static_cast<std::uint64_t>(r);
    } else {
        e.rat_ = n;
    }
    return e;
}

FieldElement Field::from_string(std::string_view text) const {
    if (text.empty()) throw ParseError("empty field element");
    if (kind_ == FieldKind::prime) return from_int(parse_int(text));

    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits) || (!den.empty() && !all_digits(den)) || (den.empty() && text.find('/') != std::string_view::npos))
        throw ParseError("not a rational: '" + std::string(text) + "'");

    using boost::multiprecision::cpp_int;
    cpp_int n{std::string(num)};
    cpp_int d = den.empty() ? cpp_int(1) : cpp_int{std::string(den)};
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    FieldElement e(*this);
    e.rat_ = Rational(n, d);
    return e;
}

Field parse_field(std::string_view text) {
    if (text == "q") return Field::rationals();
    if (text.size() > 2 && text.substr(0, 2) == "gf" && all_digits(text.substr(2))) {
        if (text.size() > 12) throw ParseError("field modulus too large: '" + std::string(text) + "'");
        return Field::gf(static_cast<std::uint64_t>(parse_int(text.substr(2))));
    }
    throw ParseError("unknown field '" + std::string(text) + "' (expected gf<p> or q)");
}

void FieldElement::require_same_field(const FieldElement& other) const {
    if (field_ != other.field_)
        throw FieldMismatch("elements of " + field_.name() + " and " + other.field_.name() + " do not mix");
}

bool FieldElement::is_zero() const {
    return field_.kind() == FieldKind::prime ? res_ == 0 : rat_.is_zero();
}

bool FieldElement::is_one() const {
    return field_.kind() == FieldKind::prime ? res_ == 1 : rat_ == 1;
}

std::string FieldElement::str() const {
    if (field_.kind() == FieldKind::prime) return std::to_string(res_);
    std::string s = numerator(rat_).str();
    if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
    return s;
}

FieldElement FieldElement::operator-() const {
    FieldElement r(*this);
    if (field_.kind() == FieldKind::prime) {
        if (res_ != 0) r.res_ = field_.modulus() - res_;
    } else {
        r.rat_ = -rat_;
    }
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (field_.kind() == FieldKind::prime) {
        res_ += rhs.res_;
        if (res_ >= field_.modulus()) res_ -= field_.modulus();
    } else {
        rat_ += rhs.rat_;
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (field_.kind() == FieldKind::prime) {
        res_ += field_.modulus() - rhs.res_;
        if (res_ >= field_.modulus()) res_ -= field_.modulus();
    } else {
        rat_ -= rhs.rat_;
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (field_.kind() == FieldKind::prime) {
        res_ = res_ * rhs.res_ % field_.modulus();
    } else {
        rat_ *= rhs.rat_;
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (rhs.is_zero()) throw DivisionByZero("division by zero in " + field_.name());
    if (field_.kind() == FieldKind::prime && field_.modulus() == 2) return *this;  // rhs == 1
    return *this *= inv(rhs);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    return a.field_.kind() == FieldKind::prime ? a.res_ == b.res_ : a.rat_ == b.rat_;
}

FieldElement inv(const FieldElement& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero in " + a.field().name());
    FieldElement r(a);
    if (a.field().kind() == FieldKind::prime) {
        // extended Euclid on (p, a)
        std::int64_t p = static_cast<std::int64_t>(a.field().modulus());
        std::int64_t t = 0, t_new = 1;
        std::int64_t rr = p, r_new = static_cast<std::int64_t>(a.res_);
        while (r_new != 0) {
            std::int64_t q = rr / r_new;
            std::int64_t tmp = t - q * t_new;
            t = t_new;
            t_new = tmp;
            tmp = rr - q * r_new;
            rr = r_new;
            r_new = tmp;
        }
        if (t < 0) t += p;
        r.res_ = static_cast<std::uint64_t>(t);
    } else {
        r.rat_ = 1 / a.rat_;
    }
    return r;
}

}  // namespace annih
