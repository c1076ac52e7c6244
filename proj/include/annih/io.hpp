#pragma once

#include <string>

#include "annih/bm.hpp"
#include "annih/engine.hpp"
#include "annih/oracle.hpp"

namespace annih {

/// Comma-separated canonical field elements, e.g. "1,0,0,1,1,0,1,0".
Sequence parse_sequence(const Field& field, std::string_view text);

/// {"deg": d, "coeffs": ["c0", ...]} with c_j the coefficient of
/// x^j z^(d-j).
std::string form_to_json(const Form& form);
Form form_from_json(const Field& field, const std::string& text);

/// {"m": -7, "coeffs": ["F_m", ..., "F_0"]}.
std::string inverse_to_json(const InverseForm& F);
InverseForm inverse_from_json(const Field& field, const std::string& text);

std::string basis_to_json(const AnnihilatorBasis& basis);
std::string minpoly_to_json(const Field& field, const MinPolyResult& result);
std::string profile_to_json(const std::vector<int>& profile);
std::string trace_to_json(const Field& field, const std::vector<TraceRow>& rows);
std::string report_to_json(const VerificationReport& report);

std::string basis_to_text(const AnnihilatorBasis& basis);
std::string minpoly_to_text(const MinPolyResult& result);
std::string profile_to_text(const std::vector<int>& profile);

/// The per-step table with columns m | F | D; z-divisible entries are
/// shown with the z power factored out, e.g. (x^3+x^2*z+x*z^2+z^3)*z^2.
/// Set color to render the header with ANSI bold.
std::string trace_to_text(const std::vector<TraceRow>& rows, bool color = false);

std::string report_to_text(const VerificationReport& report);

}  // namespace annih
