#pragma once

#include <random>
#include <string>
#include <vector>

#include "annih/oracle.hpp"

namespace annih::testhelp {

inline FieldElement fe(const Field& k, long long v) { return k.from_int(v); }

/// Form from ascending x-degree coefficients: asc[j] is the coefficient of
/// x^j z^(deg-j), deg = asc.size() - 1.
inline Form form(const Field& k, const std::vector<long long>& asc) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(asc.size());
    for (long long v : asc) coeffs.push_back(k.from_int(v));
    return Form(k, static_cast<int>(asc.size()) - 1, std::move(coeffs));
}

inline UnivariatePoly poly(const Field& k, const std::vector<long long>& asc) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(asc.size());
    for (long long v : asc) coeffs.push_back(k.from_int(v));
    return UnivariatePoly(k, std::move(coeffs));
}

inline Sequence seq(const Field& k, const std::vector<long long>& terms) {
    Sequence s{k, {}};
    s.terms.reserve(terms.size());
    for (long long v : terms) s.terms.push_back(k.from_int(v));
    return s;
}

inline Sequence golden_seq(const Field& k) { return seq(k, {1, 0, 0, 1, 1, 0, 1, 0}); }

inline FieldElement random_element(const Field& k, std::mt19937_64& rng) {
    if (k.kind() == FieldKind::prime)
        return k.from_int(static_cast<std::int64_t>(rng() % k.modulus()));
    std::int64_t num = static_cast<std::int64_t>(rng() % 41) - 20;
    std::int64_t den = static_cast<std::int64_t>(rng() % 20) + 1;
    return k.from_string(std::to_string(num) + "/" + std::to_string(den));
}

inline FieldElement random_nonzero(const Field& k, std::mt19937_64& rng) {
    for (;;) {
        FieldElement e = random_element(k, rng);
        if (!e.is_zero()) return e;
    }
}

inline Sequence random_sequence(const Field& k, std::mt19937_64& rng, int n) {
    for (;;) {
        Sequence s{k, {}};
        s.terms.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) s.terms.push_back(random_element(k, rng));
        if (s.nontrivial()) return s;
    }
}

inline Form random_form(const Field& k, std::mt19937_64& rng, int deg) {
    for (;;) {
        std::vector<FieldElement> coeffs;
        coeffs.reserve(static_cast<std::size_t>(deg) + 1);
        for (int j = 0; j <= deg; ++j) coeffs.push_back(random_element(k, rng));
        bool nonzero = false;
        for (const auto& c : coeffs) nonzero = nonzero || !c.is_zero();
        if (nonzero) return Form(k, deg, std::move(coeffs));
    }
}

inline InverseForm random_inverse(const Field& k, std::mt19937_64& rng, int m) {
    return from_sequence(random_sequence(k, rng, 1 - m));
}

}  // namespace annih::testhelp
