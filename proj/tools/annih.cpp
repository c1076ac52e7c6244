#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "annih/io.hpp"

namespace {

using namespace annih;

struct Options {
    std::string command;
    std::string field_text;
    std::string seq_text;
    std::string file_path;
    std::string inverse_path;
    bool use_stdin = false;
    bool reduced = false;
    bool json = false;
    std::uint64_t seed = 0;
    bool seeded = false;
    int len = 16;
};

void add_common(CLI::App* sub, Options& opts) {
    sub->add_option("--field", opts.field_text, "coefficient field: gf2, gf<p>, q")->required();
    sub->add_option("--seq", opts.seq_text, "inline sequence, comma-separated");
    sub->add_option("--file", opts.file_path, "file with one sequence per line");
    sub->add_option("--inverse", opts.inverse_path, "JSON file with an inverse form {\"m\":..,\"coeffs\":[..]}");
    sub->add_flag("--stdin", opts.use_stdin, "read sequences from standard input, one per line");
    sub->add_flag("--json", opts.json, "emit JSON instead of text");
}

struct Input {
    std::optional<Sequence> seq;
    std::optional<InverseForm> inv;

    const Sequence& sequence() {
        if (!seq) seq = to_sequence(*inv);
        return *seq;
    }
    const InverseForm& inverse() {
        if (!inv) inv = from_sequence(*seq);
        return *inv;
    }
};

std::vector<Input> collect_inputs(const Field& field, const Options& opts) {
    std::vector<Input> inputs;
    int sources = !opts.seq_text.empty() + !opts.file_path.empty() + !opts.inverse_path.empty() +
                  opts.use_stdin + (opts.seeded ? 1 : 0);
    if (sources != 1) throw ParseError("exactly one input source is required (--seq, --file, --inverse, --stdin or --seed)");

    auto push_line = [&](const std::string& line) {
        if (line.empty()) return;
        inputs.push_back(Input{parse_sequence(field, line), std::nullopt});
    };

    if (!opts.seq_text.empty()) {
        push_line(opts.seq_text);
    } else if (!opts.file_path.empty()) {
        std::ifstream in(opts.file_path);
        if (!in) throw ParseError("cannot open file: " + opts.file_path);
        std::string line;
        while (std::getline(in, line)) push_line(line);
    } else if (opts.use_stdin) {
        std::string line;
        while (std::getline(std::cin, line)) push_line(line);
    } else if (!opts.inverse_path.empty()) {
        std::ifstream in(opts.inverse_path);
        if (!in) throw ParseError("cannot open file: " + opts.inverse_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        inputs.push_back(Input{std::nullopt, inverse_from_json(field, buffer.str())});
    } else {
        // deterministic random sequence for verify --seed
        std::mt19937_64 rng(opts.seed);
        Sequence s{field, {}};
        do {
            s.terms.clear();
            for (int i = 0; i < opts.len; ++i) {
                if (field.kind() == FieldKind::prime) {
                    s.terms.push_back(field.from_int(static_cast<std::int64_t>(rng() % field.modulus())));
                } else {
                    std::int64_t num = static_cast<std::int64_t>(rng() % 19) - 9;
                    std::int64_t den = static_cast<std::int64_t>(rng() % 9) + 1;
                    s.terms.push_back(field.from_string(std::to_string(num) + "/" + std::to_string(den)));
                }
            }
        } while (!s.nontrivial());
        inputs.push_back(Input{std::move(s), std::nullopt});
    }
    if (inputs.empty()) throw ParseError("no inputs supplied");
    return inputs;
}

bool color_enabled() {
    const char* env = std::getenv("ANNIH_COLOR");
    return env != nullptr && std::string(env) == "1";
}

// Returns the rendered output for one input; sets ok=false on a failed
// verification.
std::string run_one(const Options& opts, const Field& field, Input& input, bool& ok) {
    if (opts.command == "gb") {
        AnnihilatorBasis basis = run(input.inverse(), RunOptions{opts.reduced, false, false});
        return opts.json ? basis_to_json(basis) : basis_to_text(basis);
    }
    if (opts.command == "trace") {
        AnnihilatorBasis basis = run(input.inverse(), RunOptions{opts.reduced, true, false});
        return opts.json ? trace_to_json(field, *basis.trace)
                         : trace_to_text(*basis.trace, color_enabled());
    }
    if (opts.command == "minpoly") {
        MinPolyResult result = minimal_polynomial(input.sequence());
        return opts.json ? minpoly_to_json(field, result) : minpoly_to_text(result);
    }
    if (opts.command == "profile") {
        std::vector<int> profile = linear_complexity_profile(input.sequence());
        return opts.json ? profile_to_json(profile) : profile_to_text(profile);
    }
    // verify
    const Sequence& s = input.sequence();
    if (!s.nontrivial()) throw AllZeroSequence("verify needs a nontrivial sequence");
    VerificationReport report = verify_instance(s);
    ok = ok && report.passed;
    return opts.json ? report_to_json(report) : report_to_text(report);
}

int dispatch(const Options& opts) {
    Field field = parse_field(opts.field_text);
    std::vector<Input> inputs = collect_inputs(field, opts);
    bool ok = true;
    std::string out;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        std::string one = run_one(opts, field, inputs[i], ok);
        if (opts.json) {
            out += (i ? "," : "") + one;
        } else {
            if (i) out += "\n";
            out += one;
        }
    }
    if (opts.json) {
        if (inputs.size() > 1) out = "[" + out + "]";
        out += "\n";
    }
    std::cout << out;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"annih: Groebner bases of sequence annihilator ideals, minimal polynomials "
                 "and linear complexity profiles over exact fields"};
    app.require_subcommand(1);

    Options opts;
    auto* gb = app.add_subcommand("gb", "construct the annihilator basis");
    auto* trace = app.add_subcommand("trace", "print the per-step construction table");
    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of a sequence");
    auto* profile = app.add_subcommand("profile", "linear complexity profile of a sequence");
    auto* verify = app.add_subcommand("verify", "run the brute-force verification battery");
    for (auto* sub : {gb, trace, minpoly, profile, verify}) add_common(sub, opts);
    for (auto* sub : {gb, trace})
        sub->add_flag("--reduced", opts.reduced, "emit the reduced basis");
    verify->add_option("--seed", opts.seed, "verify a seeded random sequence")
        ->each([&](const std::string&) { opts.seeded = true; });
    verify->add_option("--len", opts.len, "length of the seeded random sequence")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opts.command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(opts);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonPrimeModulus& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FieldMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
