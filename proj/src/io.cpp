#include "annih/io.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace annih {

using json = nlohmann::ordered_json;

namespace {

json coeffs_to_json(const std::vector<FieldElement>& coeffs) {
    json arr = json::array();
    for (const auto& c : coeffs) arr.push_back(c.str());
    return arr;
}

std::vector<FieldElement> coeffs_from_json(const Field& field, const json& arr) {
    if (!arr.is_array()) throw ParseError("expected an array of coefficient strings");
    std::vector<FieldElement> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string()) throw ParseError("coefficients must be strings");
        out.push_back(field.from_string(item.get<std::string>()));
    }
    return out;
}

json parse(const std::string& text) {
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) throw ParseError("malformed JSON");
    return value;
}

json form_json(const Form& form) {
    return json{{"deg", form.degree()}, {"coeffs", coeffs_to_json(form.coeffs())}};
}

std::string joined(const std::vector<int>& values, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

// Trace rendering mirrors the usual hand-written tables: a z-divisible
// form with more than one term is shown as (cofactor)*z^p.
std::string trace_form(const Form& form) {
    int p = z_valuation(form);
    if (p == 0) return to_display(form);
    Form cofactor = z_cofactor(form);
    int terms = 0;
    for (const auto& c : cofactor.coeffs()) terms += !c.is_zero();
    if (terms < 2) return to_display(form);
    std::string power = p == 1 ? "z" : "z^" + std::to_string(p);
    return "(" + to_display(cofactor) + ")*" + power;
}

std::string tuple_text(const std::vector<TraceRow>& rows, std::size_t i) {
    std::string forms;
    for (std::size_t j = 0; j < rows[i].basis.size(); ++j) {
        if (j) forms += ",";
        forms += trace_form(rows[i].basis[j]);
    }
    return "(" + forms + ")";
}

}  // namespace

Sequence parse_sequence(const Field& field, std::string_view text) {
    std::vector<FieldElement> terms;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view token = text.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        terms.push_back(field.from_string(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (terms.empty()) throw ParseError("empty sequence");
    return Sequence{field, std::move(terms)};
}

std::string form_to_json(const Form& form) { return form_json(form).dump(); }

Form form_from_json(const Field& field, const std::string& text) {
    json value = parse(text);
    if (!value.contains("deg") || !value.contains("coeffs"))
        throw ParseError("form JSON needs 'deg' and 'coeffs'");
    return Form(field, value["deg"].get<int>(), coeffs_from_json(field, value["coeffs"]));
}

std::string inverse_to_json(const InverseForm& F) {
    return json{{"m", F.total_degree()}, {"coeffs", coeffs_to_json(F.coeffs())}}.dump();
}

InverseForm inverse_from_json(const Field& field, const std::string& text) {
    json value = parse(text);
    if (!value.contains("m") || !value.contains("coeffs"))
        throw ParseError("inverse-form JSON needs 'm' and 'coeffs'");
    return InverseForm(field, value["m"].get<int>(), coeffs_from_json(field, value["coeffs"]));
}

std::string basis_to_json(const AnnihilatorBasis& basis) {
    json out;
    out["field"] = basis.field.name();
    out["m"] = basis.m;
    out["lambda"] = basis.lambda;
    out["degree_tuple"] = basis.degree_tuple;
    out["dim"] = basis.dim;
    out["reduced"] = basis.reduced;
    out["profile"] = basis.profile;
    json arr = json::array();
    for (const Form& g : basis.basis) arr.push_back(form_json(g));
    out["basis"] = arr;
    out["min_poly"] = coeffs_to_json(dehomogenize(basis.f1()).coeffs());
    return out.dump();
}

std::string minpoly_to_json(const Field& field, const MinPolyResult& result) {
    json out;
    out["field"] = field.name();
    out["mu1"] = coeffs_to_json(result.mu1.coeffs());
    out["lc"] = result.lc;
    out["mu2"] = coeffs_to_json(result.mu2.coeffs());
    out["profile"] = result.profile;
    out["degenerate"] = result.degenerate;
    return out.dump();
}

std::string profile_to_json(const std::vector<int>& profile) {
    return json{{"profile", profile}}.dump();
}

std::string trace_to_json(const Field&, const std::vector<TraceRow>& rows) {
    json arr = json::array();
    for (const TraceRow& row : rows) {
        json basis = json::array();
        for (const Form& g : row.basis) basis.push_back(form_json(g));
        arr.push_back(json{{"m", row.m}, {"basis", basis}, {"degree_tuple", row.degree_tuple}});
    }
    return arr.dump();
}

std::string report_to_json(const VerificationReport& report) {
    json checks = json::array();
    for (const Check& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return json{{"checks", checks}, {"passed", report.passed}}.dump();
}

std::string basis_to_text(const AnnihilatorBasis& basis) {
    std::ostringstream out;
    out << "field = " << basis.field.name() << "\n";
    out << "m = " << basis.m << "\n";
    out << "lambda = " << basis.lambda << "\n";
    out << "dim = " << basis.dim << "\n";
    out << "reduced = " << (basis.reduced ? "true" : "false") << "\n";
    out << "degree_tuple = (" << joined(basis.degree_tuple) << ")\n";
    out << "profile = " << joined(basis.profile) << "\n";
    for (std::size_t i = 0; i < basis.basis.size(); ++i)
        out << "F" << i + 1 << " = " << to_display(basis.basis[i]) << "\n";
    out << "min_poly = " << to_display(dehomogenize(basis.f1())) << "\n";
    return out.str();
}

std::string minpoly_to_text(const MinPolyResult& result) {
    std::ostringstream out;
    out << "mu1 = " << to_display(result.mu1) << "\n";
    out << "lc = " << result.lc << "\n";
    return out.str();
}

std::string profile_to_text(const std::vector<int>& profile) {
    return "profile = " + joined(profile) + "\n";
}

std::string trace_to_text(const std::vector<TraceRow>& rows, bool color) {
    std::ostringstream out;
    const char* bold = color ? "\x1b[1m" : "";
    const char* reset = color ? "\x1b[0m" : "";
    out << bold << std::setw(4) << "m" << " | F | D" << reset << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << std::setw(4) << rows[i].m << " | " << tuple_text(rows, i) << " | ("
            << joined(rows[i].degree_tuple) << ")\n";
    }
    return out.str();
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    std::size_t width = 8;
    for (const Check& c : report.checks) width = std::max(width, c.name.size());
    for (const Check& c : report.checks)
        out << std::left << std::setw(static_cast<int>(width) + 2) << c.name
            << (c.passed ? "PASS  " : "FAIL  ") << c.detail << "\n";
    out << std::left << std::setw(static_cast<int>(width) + 2) << "overall"
        << (report.passed ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace annih
