#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "annih/errors.hpp"

namespace annih {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { prime, rational };

/// Deterministic primality test for n < 2^31 (Miller-Rabin, bases 2, 7, 61).
bool is_prime(std::uint64_t n);

class FieldElement;

/// A coefficient field: GF(p) for a prime p < 2^31, or the rationals.
/// Immutable value type; equal inputs construct equal fields.
class Field {
public:
    static Field gf(std::uint64_t p);
    static Field rationals();

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }  // 0 for the rationals
    std::string name() const;                     // "gf2", "gf101", "q"

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t n) const;
    FieldElement from_string(std::string_view text) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;
};

/// Parses a CLI field selector: "gf2", "gf<p>", "q".
Field parse_field(std::string_view text);

/// An exact field element in canonical form: a residue 0 <= r < p for
/// GF(p), a reduced fraction with positive denominator for the rationals.
/// Elements of distinct fields never mix; every binary operation checks.
class FieldElement {
public:
    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Canonical string: "3", "0", "-2/5".
    std::string str() const;

    std::uint64_t residue() const { return res_; }  // GF(p) only
    const Rational& rational() const { return rat_; }

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    friend class Field;
    friend FieldElement inv(const FieldElement&);

    explicit FieldElement(const Field& field) : field_(field) {}

    void require_same_field(const FieldElement& other) const;

    Field field_;
    std::uint64_t res_ = 0;
    Rational rat_;
};

/// Multiplicative inverse; throws DivisionByZero on zero.
FieldElement inv(const FieldElement& a);

}  // namespace annih
