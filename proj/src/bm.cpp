#include "annih/bm.hpp"

namespace annih {

FieldElement seq_discrepancy(const UnivariatePoly& mu1, const Sequence& s, int i) {
    const int deg = mu1.degree();
    if (deg < 0) throw ZeroForm("discrepancy of the zero polynomial");
    if (i < deg || i >= s.length())
        throw IndexOutOfRange("discrepancy index " + std::to_string(i) + " outside [" +
                              std::to_string(deg) + ", " + std::to_string(s.length() - 1) + "]");
    FieldElement sum = s.field.zero();
    for (int j = 0; j <= deg; ++j) {
        FieldElement c = mu1.coeff(j);
        if (c.is_zero()) continue;
        sum += c * s.terms[static_cast<std::size_t>(j + i - deg)];
    }
    return sum;
}

MinPolyResult minimal_polynomial(const Sequence& s) {
    const Field& k = s.field;
    if (s.terms.empty()) throw AllZeroSequence("empty sequence");
    if (!s.nontrivial()) {
        return MinPolyResult{UnivariatePoly::one(k), 0, UnivariatePoly::one(k),
                             std::vector<int>(static_cast<std::size_t>(s.length()), 0), true};
    }

    const int v = s.valuation();
    std::vector<int> profile(static_cast<std::size_t>(v), 0);

    UnivariatePoly mu1 = UnivariatePoly::x_pow(k, v + 1);
    UnivariatePoly mu2 = UnivariatePoly::one(k);
    // The paper-style init assumes a normalized first nonzero term; keep the
    // general case exact by seeding the denominator with s_v itself.
    FieldElement delta2 = s.terms[static_cast<std::size_t>(v)];
    int d = -v;
    profile.push_back(mu1.degree());

    for (int i = v + 1; i < s.length(); ++i) {
        FieldElement delta1 = seq_discrepancy(mu1, s, i);
        if (!delta1.is_zero()) {
            FieldElement q = delta1 / delta2;
            if (d <= 0) {
                mu1 = sub(mu1, shift_x(scale(mu2, q), -d));
            } else {
                UnivariatePoly psi = mu1;
                mu1 = sub(shift_x(mu1, d), scale(mu2, q));
                mu2 = psi;
                delta2 = delta1;
                d = -d;
            }
        }
        d += 1;
        profile.push_back(mu1.degree());
    }

    return MinPolyResult{mu1, mu1.degree(), mu2, std::move(profile), false};
}

std::vector<int> linear_complexity_profile(const Sequence& s) {
    return minimal_polynomial(s).profile;
}

}  // namespace annih
