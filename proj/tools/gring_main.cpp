#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gring/specfile.hpp"
#include "gring/suites.hpp"

namespace {

using namespace gring;

struct Opts {
    std::string field_text = "GF(32003)";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string spec_path;
    long long degree = -1;  // -1: per-command default
    std::string t_text;
    int trials = 1;
    std::string out_path;
};

void add_common(CLI::App* sub, Opts& o, bool data_driven) {
    sub->add_option("--field", o.field_text, "coefficient field, QQ or GF(<p>)")
        ->capture_default_str();
    sub->add_option("--out", o.out_path, "write the JSON report to this path");
    if (data_driven) {
        sub->add_option_function<std::uint64_t>(
               "--seed",
               [&o](std::uint64_t v) {
                   o.seed = v;
                   o.seed_given = true;
               },
               "seed for the deterministic generator (required unless --spec)");
        sub->add_option("--spec", o.spec_path, "spec file with a ring declaration and bindings");
        sub->add_option("--degree", o.degree, "verification degree bound")
            ->check(CLI::Range(0, 64));
        sub->add_option("--trials", o.trials, "number of seeded random instances")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--t", o.t_text, "comma-separated list of t values, e.g. 0,1,7");
    }
}

std::pair<BigInt, BigInt> parse_rational_token(const std::string& token) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < token.size() && (token[pos] == '+' || token[pos] == '-')) {
        negative = token[pos] == '-';
        ++pos;
    }
    const auto digits = [&](const char* what) {
        if (pos >= token.size() || !std::isdigit(static_cast<unsigned char>(token[pos])))
            throw std::invalid_argument(std::string("expected ") + what + " in t value '" + token +
                                        "'");
        BigInt v = 0;
        while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
            v = v * 10 + (token[pos] - '0');
            ++pos;
        }
        return v;
    };
    BigInt num = digits("digits");
    BigInt den = 1;
    if (pos < token.size() && token[pos] == '/') {
        ++pos;
        den = digits("denominator digits");
    }
    if (pos != token.size())
        throw std::invalid_argument("bad t value '" + token + "'");
    if (negative) num = -num;
    return {num, den};
}

std::vector<std::pair<BigInt, BigInt>> parse_rational_list(const std::string& text) {
    std::vector<std::pair<BigInt, BigInt>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string::npos ? text.size() : comma;
        out.push_back(parse_rational_token(text.substr(start, end - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

template <class F>
std::vector<typename F::Element> t_values_from(const F& field, const std::string& text,
                                               const std::string& fallback) {
    std::vector<typename F::Element> out;
    for (const auto& [num, den] : parse_rational_list(text.empty() ? fallback : text))
        out.push_back(field.from_ratio(num, den));
    return out;
}

template <class F>
typename F::Element constant_value(const Polynomial<F>& p, const std::string& name) {
    if (p.is_zero()) return p.field().zero();
    if (p.term_count() == 1 && p.terms()[0].mono.is_one()) return p.terms()[0].coef;
    throw std::invalid_argument("binding '" + name + "' must be a constant");
}

template <class F>
struct FamilyFileData {
    Polynomial<F> p3, p4, p9;
    std::optional<typename F::Element> t;
};

template <class F>
FamilyFileData<F> family_from_file(const SpecFileText& text, const F& field) {
    auto ring = realize_ring(text.decl, field);
    auto bindings = materialize_assignments(text, ring);
    const auto get = [&](const char* name) {
        auto it = bindings.find(name);
        if (it == bindings.end())
            throw std::invalid_argument(std::string("spec file is missing a binding for ") + name);
        return it->second;
    };
    FamilyFileData<F> data{get("P3"), get("P4"), get("P9"), std::nullopt};
    auto it = bindings.find("t");
    if (it != bindings.end()) data.t = constant_value(it->second, "t");
    return data;
}

template <class F>
CurveRingSpec<F> curve_from_file(const SpecFileText& text, const F& field) {
    auto ring = realize_ring(text.decl, field);
    auto bindings = materialize_assignments(text, ring);
    auto it = bindings.find("P9");
    if (it == bindings.end())
        throw std::invalid_argument("spec file is missing a binding for P9");
    return CurveRingSpec<F>(it->second);
}

void require_seed(const Opts& o) {
    if (!o.seed_given)
        throw std::invalid_argument("--seed is required for seeded random suites (no hidden entropy)");
}

template <class F>
VerificationReport dispatch(const std::string& command, const Opts& o, const F& field,
                            const std::optional<SpecFileText>& file) {
    if (command == "verify-segre") return segre_suite(field);
    if (command == "verify-extrasym") return extrasym_suite(field);

    if (command == "curve-ring") {
        const long long degree = o.degree < 0 ? 14 : o.degree;
        if (file) return curve_ring_spec_suite(curve_from_file(*file, field), "file", degree);
        require_seed(o);
        return curve_ring_suite(field, o.seed, o.trials, degree);
    }

    if (command == "family") {
        const long long degree = o.degree < 0 ? 12 : o.degree;
        const auto ts = t_values_from(field, o.t_text, "0,1,7");
        std::vector<FamilySpec<F>> specs;
        std::vector<std::string> labels;
        if (file) {
            const auto data = family_from_file(*file, field);
            specs.emplace_back(data.p3, data.p4, data.p9, field.zero());
            labels.emplace_back("file");
        } else {
            require_seed(o);
            specs = random_family_specs(field, o.seed, o.trials, field.zero());
            labels = trial_labels(o.seed, o.trials);
        }
        return family_suite(field, specs, labels, ts, degree);
    }

    if (command == "eliminate") {
        const long long degree = o.degree < 0 ? 12 : o.degree;
        std::vector<FamilySpec<F>> specs;
        std::vector<std::string> labels;
        if (file) {
            const auto data = family_from_file(*file, field);
            auto t = data.t.value_or(field.one());
            if (!o.t_text.empty()) t = t_values_from(field, o.t_text, "1").at(0);
            specs.emplace_back(data.p3, data.p4, data.p9, t);
            labels.emplace_back("file");
        } else {
            require_seed(o);
            const auto t = t_values_from(field, o.t_text, "1").at(0);
            specs = random_family_specs(field, o.seed, o.trials, t, true);
            labels = trial_labels(o.seed, o.trials);
        }
        return eliminate_suite(specs, labels, degree);
    }

    if (command == "branch-curve") {
        std::vector<FamilySpec<F>> specs;
        std::vector<std::string> labels;
        if (file) {
            const auto data = family_from_file(*file, field);
            if (data.t && !field.is_zero(*data.t))
                throw std::invalid_argument("the branch-curve recipe needs t = 0 in the spec file");
            specs.emplace_back(data.p3, data.p4, data.p9, field.zero());
            labels.emplace_back("file");
        } else {
            require_seed(o);
            specs = random_family_specs(field, o.seed, o.trials, field.zero());
            labels = trial_labels(o.seed, o.trials);
        }
        return branch_suite(specs, labels);
    }

    if (command == "suite") {
        require_seed(o);
        VerificationReport report;
        report.extend(segre_suite(field));
        report.extend(extrasym_suite(field));
        if (!(field.spec() == FieldSpec::rationals())) {
            const RationalField qq;
            report.extend(segre_suite(qq));
            report.extend(extrasym_suite(qq));
        }
        report.extend(curve_ring_suite(field, o.seed, 5, 14));
        report.extend(family_suite(field, random_family_specs(field, o.seed + 100, 5, field.zero()),
                                   trial_labels(o.seed + 100, 5),
                                   t_values_from(field, "", "0"), 12));
        report.extend(family_suite(field, random_family_specs(field, o.seed + 200, 3, field.zero()),
                                   trial_labels(o.seed + 200, 3),
                                   t_values_from(field, "", "0,1,7"), 12));
        report.extend(
            eliminate_suite(random_family_specs(field, o.seed + 300, 3, field.one(), true),
                            trial_labels(o.seed + 300, 3), 12));
        report.extend(branch_suite(random_family_specs(field, o.seed + 400, 5, field.zero()),
                                   trial_labels(o.seed + 400, 5)));
        report.extend(pfaffian_soundness_suite(field, o.seed + 500, 100));
        report.extend(oracle_equivalence_suite(field, o.seed + 600, 10));
        return report;
    }

    throw std::invalid_argument("unknown command '" + command + "'");
}

int run(const std::string& command, const Opts& o) {
    try {
        std::optional<SpecFileText> file;
        if (!o.spec_path.empty()) file = read_spec_file(o.spec_path);
        const FieldSpec spec = file ? file->decl.field : FieldSpec::parse(o.field_text);
        VerificationReport report = with_field(
            spec, [&](auto field) { return dispatch(command, o, field, file); });
        report.sort_by_name();

        int passed = 0, failed = 0, info = 0;
        for (const auto& c : report.checks()) {
            std::cout << (c.status == "pass"   ? "[PASS] "
                          : c.status == "fail" ? "[FAIL] "
                                               : "[INFO] ")
                      << c.name << " (" << c.millis << " ms)\n";
            if (c.status == "fail")
                for (const auto& w : c.witnesses) std::cout << "         " << w << "\n";
            passed += c.status == "pass";
            failed += c.status == "fail";
            info += c.status == "info";
        }
        std::cout << passed << "/" << (passed + failed) << " checks passed";
        if (info > 0) std::cout << " (" << info << " informational)";
        std::cout << "\n";

        if (!o.out_path.empty()) {
            const nlohmann::json seed_json =
                o.seed_given ? nlohmann::json(o.seed) : nlohmann::json(nullptr);
            std::ofstream out(o.out_path);
            if (!out) throw std::runtime_error("cannot write report to '" + o.out_path + "'");
            out << report_json(report, command, seed_json, spec.name()).dump(2) << "\n";
        }
        return failed == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gring: exact verification of weighted graded rings in Pfaffian format"};
    app.require_subcommand(1);
    Opts o;

    add_common(app.add_subcommand("verify-segre",
                                  "doubled generic 3x3 matrix: 15 Pfaffians = 9 minors"),
               o, false);
    add_common(app.add_subcommand("verify-extrasym",
                                  "generic extrasymmetric matrix: 9 Pfaffians generate all 15"),
               o, false);
    add_common(app.add_subcommand("curve-ring",
                                  "curve-ring Hilbert function against the counting oracle"),
               o, true);
    add_common(app.add_subcommand("family", "flatness evidence for the deformation family"), o,
               true);
    add_common(app.add_subcommand("eliminate",
                                  "eliminate u,v,w at t != 0 down to a degree-9 hypersurface"),
               o, true);
    add_common(app.add_subcommand("branch-curve", "branch-curve recipe at t = 0"), o, true);
    add_common(app.add_subcommand("suite", "run every verification suite"), o, true);

    CLI11_PARSE(app, argc, argv);
    return run(app.get_subcommands().at(0)->get_name(), o);
}
