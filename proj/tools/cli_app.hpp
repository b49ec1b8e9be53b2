#pragma once

// Command-line front end. Kept in a header so the tests can drive it
// in-process through run_cli().

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lefschetz/lefschetz.hpp"

namespace lefschetz::cli {

using nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kAssertionFailed = 1, kUsageError = 2 };

/// Thrown by command handlers for bad option values the parser cannot catch.
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    json failures = json::array();
    int exit_code = kSuccess;
};

// ---------------------------------------------------------------------------
// Rendering

inline json to_json(const HilbertSeries& h) {
    return {{"start", h.start()}, {"coefficients", h.coefficients()}, {"text", to_string(h)}};
}

inline json to_json(const MapFailure& f) {
    return {{"i", f.degree}, {"d", f.power}, {"rank", f.rank}, {"expected", f.expected}};
}

inline json to_json(const LefschetzReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back(to_json(f));
    return {{"property", to_string(r.property)}, {"holds", r.holds}, {"linear_form", r.form.coefficients()},
            {"failures", failures}};
}

inline json to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const SweepSummary& s) {
    return {{"instances", s.instances}, {"checked", s.checked}, {"passed", s.passed()}};
}

inline json labels(const std::vector<Monomial>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(to_string(m));
    return out;
}

inline void render_text(const json& value, const std::string& indent, std::ostream& out) {
    if (value.is_object()) {
        for (const auto& [key, item] : value.items()) {
            const bool flat = item.is_array() && std::none_of(item.begin(), item.end(),
                                                               [](const json& e) { return e.is_structured(); });
            if (item.is_structured() && !item.empty() && !flat) {
                out << indent << key << ":\n";
                render_text(item, indent + "  ", out);
            } else {
                out << indent << key << ": " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const auto& item : value) {
            if (item.is_object()) {
                out << indent << "-\n";
                render_text(item, indent + "  ", out);
            } else {
                out << indent << "- " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
            }
        }
    }
}

inline json report_json(const Report& report, long runtime_ms) {
    return {{"command", report.command}, {"inputs", report.inputs}, {"result", report.result},
            {"failures", report.failures}, {"runtime_ms", runtime_ms}, {"version", kVersion}};
}

inline void write_report(const json& doc, bool as_json, std::ostream& out) {
    if (as_json) {
        out << doc.dump(2) << "\n";
        return;
    }
    out << doc["command"].get<std::string>() << "\n";
    out << "inputs:\n";
    render_text(doc["inputs"], "  ", out);
    out << "result:\n";
    render_text(doc["result"], "  ", out);
    out << "failures: " << doc["failures"].size() << "\n";
    render_text(doc["failures"], "  ", out);
    out << "runtime_ms: " << doc["runtime_ms"].get<long>() << "\n";
}

// ---------------------------------------------------------------------------
// Option helpers

inline std::vector<long> parse_integer_list(const std::string& text, const char* what) {
    std::vector<long> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("invalid integer in ") + what + ": '" + item + "'");
        }
    }
    return out;
}

inline std::size_t variable_option(const std::string& name) {
    if (name == "x") return 0;
    if (name == "y") return 1;
    if (name == "z") return 2;
    if (name == "t") return 3;
    throw UsageError("unknown variable '" + name + "'");
}

struct ModuleOptions {
    std::string num = "1";
    std::string den;
    std::size_t vars = 0;

    QuotientModule build() const {
        const auto n = vars != 0 ? vars : std::max(infer_num_vars(num), infer_num_vars(den));
        return QuotientModule(parse_ideal(num, n), parse_ideal(den, n));
    }
    json to_json() const { return {{"num", num}, {"den", den}, {"vars", vars}}; }
};

inline void add_module_options(CLI::App* cmd, ModuleOptions& opts) {
    cmd->add_option("--num", opts.num, "numerator ideal I (default 1)");
    cmd->add_option("--den", opts.den, "denominator ideal J (must be Artinian)")->required();
    cmd->add_option("--vars", opts.vars, "ambient variable count (default: inferred)")->check(CLI::Range(1, 4));
}

/// Coefficients of a homogeneous element, keyed by monomial text.
using Element = std::map<std::string, long>;

/// Image of `element` (in M_i) under x ell^d, as a coefficient vector on M_{i+d}.
inline std::vector<Integer> image_of(const QuotientModule& module, const LinearForm& form, int d, int i,
                                     const Element& element) {
    const auto basis = degree_basis(module, i);
    std::vector<Integer> vec(basis.size());
    for (const auto& [text, coeff] : element) {
        const auto m = parse_monomial(text, module.num_vars());
        const auto it = std::find(basis.begin(), basis.end(), m);
        if (it == basis.end()) throw std::logic_error("element term " + text + " is not in the degree basis");
        vec[static_cast<std::size_t>(it - basis.begin())] += coeff;
    }
    return mult_matrix(module, form, d, i).apply(vec);
}

inline bool all_zero(const std::vector<Integer>& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Reproductions of the worked examples. Each one asserts the stated outcome
// and records every mismatch as a failure.

class Expectations {
public:
    explicit Expectations(Report& report) : report_(report) {}
    void expect(bool ok, const std::string& what) {
        report_.result["assertions"].push_back({{"check", what}, {"ok", ok}});
        if (!ok) report_.failures.push_back(what);
    }

private:
    Report& report_;
};

inline void reproduce_example_1var(Report& report) {
    Expectations e(report);
    const auto base = QuotientModule::algebra(MonomialIdeal::minimalize(1, {Monomial{2}}));
    const std::vector<GradedSummand> summands{{base, 0}, {base, 2}};
    const auto form = LinearForm::all_ones(1);
    const auto series = direct_sum_hilbert(summands);
    report.result["hilbert"] = to_json(series);
    e.expect(series == HilbertSeries(0, {1, 1, 1, 1}), "Hilbert series is 1+t+t^2+t^3");
    e.expect(is_unimodal(series) && is_symmetric(series).has_value(), "series is unimodal and symmetric");
    e.expect(check_slp(base, form).holds, "each summand has the SLP");
    const auto wlp = check_direct_sum(summands, form, Property::Weak);
    report.result["wlp"] = to_json(wlp);
    e.expect(!wlp.holds, "the direct sum fails the WLP");
    e.expect(wlp.failures == std::vector<MapFailure>{{1, 1, 0, 1}},
             "the only failing map is x: M_1 -> M_2 with rank 0 (neither injective nor surjective)");
    const auto verdict = direct_sum_slp(summands, form);
    report.result["doubled_reflecting_degrees"] = {verdict.degrees[0].doubled, verdict.degrees[1].doubled};
    e.expect(!verdict.coincide && !verdict.block_holds, "reflecting degrees 1/2 and 5/2 do not coincide");
}

inline void reproduce_example_lex(Report& report) {
    Expectations e(report);
    const auto ideal = parse_ideal("x^3, y^4");
    const auto denom = parse_ideal("x^5, y^5");
    const auto module_slp = check_slp(QuotientModule(ideal, denom));
    report.result["module_slp"] = to_json(module_slp);
    e.expect(module_slp.holds, "I/J = (x^3,y^4)/(x^5,y^5) has the SLP");

    const auto lex_i = lex_ideal(ideal);
    const auto lex_j = lex_ideal(denom);
    report.result["lex_numerator"] = to_string(lex_i);
    report.result["lex_denominator"] = to_string(lex_j);
    e.expect(lex_i == parse_ideal("x^3, x^2*y^2, x*y^4, y^6"), "Lex(I) = (x^3, x^2y^2, xy^4, y^6)");
    e.expect(lex_j == parse_ideal("x^5, x^4*y, x^3*y^3, x^2*y^5, x*y^7, y^9"),
             "Lex(J) = (x^5, x^4y, x^3y^3, x^2y^5, xy^7, y^9)");

    const QuotientModule gin(lex_i, lex_j);
    const auto series = hilbert_series(gin);
    const auto wlp = check_wlp(gin);
    report.result["lex_wlp"] = to_json(wlp);
    e.expect(series[4] == 3 && series[5] == 3, "G_4 and G_5 have dimension 3");
    const auto at4 = std::find_if(wlp.failures.begin(), wlp.failures.end(),
                                  [](const MapFailure& f) { return f.degree == 4 && f.power == 1; });
    e.expect(at4 != wlp.failures.end() && at4->rank <= 2, "x+y: G_4 -> G_5 is not bijective");
    e.expect(all_zero(image_of(gin, LinearForm::all_ones(2), 1, 4, {{"x^4", 1}})), "x^4 (x+y) = 0 in G");
}

inline void reproduce_example_3var(Report& report) {
    Expectations e(report);
    const QuotientModule module(parse_ideal("x^2, y^2, z^2"), parse_ideal("x^3, y^3, z^3"));
    const auto series = hilbert_series(module);
    report.result["hilbert"] = to_json(series);
    e.expect(series[3] == 6 && series[4] == 6, "dim [I/J]_3 = dim [I/J]_4 = 6");
    e.expect(is_unimodal(series), "Hilbert series is unimodal");
    const Element kernel{{"x^2*y", 1}, {"x^2*z", -1}, {"y^2*z", 1}, {"x*y^2", -1}, {"x*z^2", 1}, {"y*z^2", -1}};
    e.expect(all_zero(image_of(module, LinearForm::all_ones(3), 1, 3, kernel)),
             "x^2(y-z)+y^2(z-x)+z^2(x-y) is killed by x+y+z");
    const auto wlp = check_wlp(module);
    report.result["wlp"] = to_json(wlp);
    e.expect(!wlp.holds, "I/J fails the WLP");
    e.expect(!check_slp(module).holds, "I/J fails the SLP");
}

inline void reproduce_remark_tensor(Report& report) {
    Expectations e(report);
    const QuotientModule base(parse_ideal("x^2, y^2"), parse_ideal("x^4, y^4"));
    const auto series = hilbert_series(base);
    report.result["hilbert"] = to_json(series);
    e.expect(series == HilbertSeries(2, {2, 4, 3, 2, 1}), "Hilbert series is 2t^2+4t^3+3t^4+2t^5+t^6");
    e.expect(!is_almost_centered(series), "Hilbert series is not almost centered");
    e.expect(check_slp(base).holds, "(x^2,y^2)/(x^4,y^4) itself has the SLP");

    const auto tensored = tensor_truncation(base, 3);
    e.expect(tensored == QuotientModule(parse_ideal("x^2, y^2", 3), parse_ideal("x^4, y^4, z^3")),
             "M tensor k[z]/(z^3) = (x^2,y^2)/(x^4,y^4,z^3)");
    const auto slp = check_slp(tensored);
    report.result["slp"] = to_json(slp);
    e.expect(!slp.holds, "N = (x^2,y^2)/(x^4,y^4,z^3) fails the SLP");
    const Element kernel{{"x^3", 1}, {"x^2*y", -1}, {"x*y^2", 1}, {"y^3", -1}};
    json killed = json::array();
    for (int d = 1; d + 3 <= hilbert_series(tensored).end(); ++d) {
        if (all_zero(image_of(tensored, LinearForm::all_ones(3), d, 3, kernel))) killed.push_back(d);
    }
    report.result["kernel_element_killed_by_powers"] = killed;
    e.expect(killed.size() >= 1 && killed[0] == 3, "(x-y)(x^2+y^2) is killed by (x+y+z)^3 : N_3 -> N_6");
}

inline void reproduce_section4_csm(Report& report) {
    Expectations e(report);
    const Type2Params p{3, 3, 4, 1, 1, 1};
    const auto ideal = type2_ideal(p);
    report.inputs["ideal"] = to_string(ideal);
    const auto verdict = thm_type2_conditions(p);
    report.result["conditions"] = verdict.conditions;
    report.result["doubled_reflecting_degrees"] = verdict.doubled_degrees;
    for (std::size_t v : {0, 2}) {
        const auto criterion = csm_slp_criterion(ideal, v);
        json entries = json::array();
        for (const auto& entry : criterion.decomposition.entries) {
            entries.push_back({{"f", entry.f}, {"module", "(" + to_string(entry.module.numerator()) + ")/(" +
                                                              to_string(entry.module.denominator()) + ")"},
                               {"hilbert", to_string(entry.hilbert)},
                               {"tilde_hilbert", to_string(hilbert_series(entry.tilde))}});
        }
        report.result[std::string("csm_") + variable_name(v)] = {{"r", criterion.decomposition.r},
                                                                 {"entries", entries},
                                                                 {"criterion", criterion.holds()}};
    }
    e.expect(verdict.conditions.contains(1), "condition (1) holds for (3,3,4,1,1,1)");
    e.expect(csm_slp_criterion(ideal, 0).holds(), "CSM criterion w.r.t. x holds");
    e.expect(check_slp(QuotientModule::algebra(ideal)).holds, "S/I has the SLP");
    const auto forms = sweep_csm_closed_forms(4);
    report.result["closed_form_sweep"] = to_json(forms);
    for (const auto& f : forms.findings) report.failures.push_back(f.instance + ": " + f.detail);
    e.expect(forms.passed(), "CSM closed forms hold for every parameter set up to 4");
}

// ---------------------------------------------------------------------------

struct GlobalOptions {
    std::string format;
    bool no_timing = false;
    std::string output;
};

/// Parses argv, runs one verb and writes its report. Returns the exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lefschetz property toolkit for Artinian monomial modules", "lefschetz"};
    app.require_subcommand(1);
    GlobalOptions global;
    if (const char* env = std::getenv("LEFSCHETZ_FORMAT")) global.format = env;
    app.add_option("--format", global.format, "text or json (default from LEFSCHETZ_FORMAT, else text)")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--no-timing", global.no_timing, "report runtime_ms as 0 for byte-stable output");
    app.add_option("--output", global.output, "write the report to a file instead of stdout");

    Report report;
    std::function<void()> action;

    ModuleOptions hilbert_opts;
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series and shape predicates of I/J");
    add_module_options(hilbert_cmd, hilbert_opts);
    hilbert_cmd->callback([&] {
        action = [&] {
            report.command = "hilbert";
            report.inputs = hilbert_opts.to_json();
            const auto module = hilbert_opts.build();
            const auto series = hilbert_series(module);
            report.result["hilbert"] = to_json(series);
            const auto sym = is_symmetric(series);
            report.result["doubled_reflecting_degree"] = sym ? json(sym->doubled) : json(nullptr);
            report.result["unimodal"] = is_unimodal(series);
            report.result["almost_centered"] = is_almost_centered(series);
            report.result["socle_degree"] = series.empty() ? json(nullptr) : json(series.end());
        };
    });

    ModuleOptions check_opts;
    std::string property;
    std::string form_text;
    int random_forms = 0;
    std::uint64_t seed = 1;
    auto* check_cmd = app.add_subcommand("check", "decide WLP or SLP of I/J");
    check_cmd->add_option("property", property, "wlp or slp")->required()->check(CLI::IsMember({"wlp", "slp"}));
    add_module_options(check_cmd, check_opts);
    check_cmd->add_option("--linear-form", form_text, "comma-separated integer coefficients (default all ones)");
    check_cmd->add_option("--random-forms", random_forms, "extra random witnesses with coefficients in [1,100]")
        ->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--seed", seed, "seed for --random-forms");
    check_cmd->callback([&] {
        action = [&] {
            report.command = "check " + property;
            report.inputs = check_opts.to_json();
            report.inputs["linear_form"] = form_text;
            report.inputs["random_forms"] = random_forms;
            report.inputs["seed"] = seed;
            const auto module = check_opts.build();
            std::vector<LinearForm> forms;
            if (form_text.empty()) {
                forms.push_back(LinearForm::all_ones(module.num_vars()));
            } else {
                try {
                    forms.emplace_back(parse_integer_list(form_text, "--linear-form"));
                } catch (const std::invalid_argument& ex) {
                    throw UsageError(ex.what());
                }
            }
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<long> coefficient(1, 100);
            for (int k = 0; k < random_forms; ++k) {
                std::vector<long> coeffs(module.num_vars());
                for (auto& c : coeffs) c = coefficient(rng);
                forms.emplace_back(std::move(coeffs));
            }
            const auto prop = property == "wlp" ? Property::Weak : Property::Strong;
            json witnesses = json::array();
            std::optional<LinearForm> witness;
            for (const auto& form : forms) {
                const GradedSummand single{module, 0};
                const auto r = check_direct_sum({&single, 1}, form, prop);
                witnesses.push_back(to_json(r));
                if (r.holds && !witness) witness = form;
                if (&form == &forms.front()) {
                    for (const auto& f : r.failures) report.failures.push_back(to_json(f));
                }
            }
            report.result["holds"] = witness.has_value();
            report.result["witness"] = witness ? json(witness->coefficients()) : json(nullptr);
            report.result["reports"] = witnesses;
            report.result["hilbert"] = to_json(hilbert_series(module));
        };
    });

    std::string csm_ideal;
    std::string csm_var = "x";
    auto* csm_cmd = app.add_subcommand("csm", "central simple modules of S/I for a variable");
    csm_cmd->add_option("--ideal", csm_ideal, "Artinian monomial ideal I")->required();
    csm_cmd->add_option("--var", csm_var, "variable x, y, z or t")->check(CLI::IsMember({"x", "y", "z", "t"}));
    csm_cmd->callback([&] {
        action = [&] {
            report.command = "csm";
            report.inputs = {{"ideal", csm_ideal}, {"var", csm_var}};
            const auto ideal = parse_ideal(csm_ideal);
            const auto criterion = csm_slp_criterion(ideal, variable_option(csm_var));
            json entries = json::array();
            for (const auto& entry : criterion.decomposition.entries) {
                entries.push_back({{"f", entry.f},
                                   {"numerator", to_string(entry.module.numerator())},
                                   {"denominator", to_string(entry.module.denominator())},
                                   {"hilbert", to_json(entry.hilbert)},
                                   {"tilde_hilbert", to_json(hilbert_series(entry.tilde))}});
            }
            report.result = {{"r", criterion.decomposition.r},
                             {"entries", entries},
                             {"each_tilde_slp", criterion.each_tilde_slp},
                             {"all_symmetric", criterion.all_symmetric},
                             {"sum_slp", criterion.sum_slp},
                             {"criterion", criterion.holds()},
                             {"algebra_slp", check_slp(QuotientModule::algebra(ideal)).holds}};
        };
    });

    std::string lgv_a;
    std::string lgv_b;
    bool lgv_oracle = false;
    auto* lgv_cmd = app.add_subcommand("lgv", "binomial determinant positivity for ascending sequences");
    lgv_cmd->add_option("--a", lgv_a, "ascending upper sequence, e.g. 1,2")->required();
    lgv_cmd->add_option("--b", lgv_b, "ascending lower sequence, e.g. 0,1")->required();
    lgv_cmd->add_flag("--oracle", lgv_oracle, "also count non-intersecting lattice paths");
    lgv_cmd->callback([&] {
        action = [&] {
            report.command = "lgv";
            report.inputs = {{"a", lgv_a}, {"b", lgv_b}, {"oracle", lgv_oracle}};
            auto to_ints = [](const std::vector<long>& v) { return std::vector<int>(v.begin(), v.end()); };
            AscendingSequence a;
            AscendingSequence b;
            try {
                a = AscendingSequence(to_ints(parse_integer_list(lgv_a, "--a")));
                b = AscendingSequence(to_ints(parse_integer_list(lgv_b, "--b")));
                binomial_matrix(a, b);
            } catch (const std::invalid_argument& ex) {
                throw UsageError(ex.what());
            }
            const auto verdict = lgv_positivity(a, b);
            report.result = {{"matrix", to_json(binomial_matrix(a, b))},
                             {"determinant", verdict.determinant.get_str()},
                             {"positivity", to_string(verdict.positivity)}};
            if (lgv_oracle) {
                const auto count = count_nonintersecting(a, b);
                report.result["path_count"] = count.get_str();
                if (count != verdict.determinant) report.failures.push_back("determinant differs from path count");
            }
        };
    });

    int pipe_a = 0;
    int pipe_b = 0;
    int pipe_i = 0;
    int pipe_d = 1;
    std::string pipe_ideal = "1";
    auto* pipe_cmd = app.add_subcommand("pipeline", "rank certificate for (x+y)^d : [I/(x^a,y^b)]_i -> _{i+d}");
    pipe_cmd->add_option("--a", pipe_a, "exponent a of x^a")->required()->check(CLI::PositiveNumber);
    pipe_cmd->add_option("--b", pipe_b, "exponent b of y^b")->required()->check(CLI::PositiveNumber);
    pipe_cmd->add_option("--i", pipe_i, "source degree")->required();
    pipe_cmd->add_option("--d", pipe_d, "power of x+y")->required();
    pipe_cmd->add_option("--ideal", pipe_ideal, "two-variable monomial ideal I (default 1)");
    pipe_cmd->callback([&] {
        action = [&] {
            report.command = "pipeline";
            report.inputs = {{"a", pipe_a}, {"b", pipe_b}, {"i", pipe_i}, {"d", pipe_d}, {"ideal", pipe_ideal}};
            const auto ideal = parse_ideal(pipe_ideal, 2);
            LabeledBlock full;
            try {
                full = cl_matrix(pipe_a, pipe_b, pipe_i, pipe_d);
            } catch (const std::invalid_argument& ex) {
                throw UsageError(ex.what());
            }
            const auto restricted = restrict_rows(full, ideal);
            const auto transformed = pascal_column_transform(restricted.matrix);
            const auto cert = lgv_rank_certificate(restricted, transformed);
            const auto exact = rank(restricted.matrix);
            report.result = {{"cl_matrix", to_json(full.matrix)},
                             {"rows", labels(restricted.row_labels)},
                             {"columns", labels(restricted.col_labels)},
                             {"restricted", to_json(restricted.matrix)},
                             {"offsets", restricted.offsets},
                             {"transformed", to_json(transformed)},
                             {"certified", cert.certified},
                             {"certified_block", cert.size},
                             {"exact_rank", exact},
                             {"maximal_rank", std::min(restricted.matrix.rows(), restricted.matrix.cols())}};
            if (!row_offsets_valid(restricted)) report.failures.push_back("row offset invariant violated");
            if (cert.certified && exact != cert.size) report.failures.push_back("certificate disagrees with rank");
        };
    });

    std::string suite;
    int sweep_min = 0;
    int sweep_max = 0;
    unsigned jobs = 1;
    bool with_csm = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a verification corpus");
    sweep_cmd
        ->add_option("suite", suite, "main-thm, pipeline, type2, csm-forms, tensor, lemmas or lgv-oracle")
        ->required()
        ->check(CLI::IsMember({"main-thm", "pipeline", "type2", "csm-forms", "tensor", "lemmas", "lgv-oracle"}));
    sweep_cmd->add_option("--min", sweep_min, "smallest box exponent (main-thm, pipeline)");
    sweep_cmd->add_option("--max", sweep_max, "largest parameter value");
    sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--csm", with_csm, "type2: also test the central-simple-module criterion");
    sweep_cmd->callback([&] {
        action = [&] {
            report.command = "sweep " + suite;
            SweepSummary summary;
            auto max_or = [&](int fallback) { return sweep_max != 0 ? sweep_max : fallback; };
            if (suite == "main-thm" || suite == "pipeline") {
                const BoxRange range{sweep_min != 0 ? sweep_min : 2, max_or(6)};
                if (range.lo < 1 || range.hi < range.lo) throw UsageError("need 1 <= --min <= --max");
                report.inputs = {{"min", range.lo}, {"max", range.hi}};
                summary = suite == "main-thm" ? sweep_main_theorem(range, jobs) : sweep_pipeline(range, jobs);
            } else if (suite == "type2") {
                report.inputs = {{"max", max_or(5)}, {"csm", with_csm}};
                summary = sweep_type2({max_or(5), with_csm, jobs});
            } else if (suite == "csm-forms") {
                report.inputs = {{"max", max_or(4)}};
                summary = sweep_csm_closed_forms(max_or(4), jobs);
            } else if (suite == "tensor") {
                report.inputs = {{"max", max_or(5)}};
                summary = sweep_tensor(max_or(5), jobs);
            } else if (suite == "lemmas") {
                report.inputs = {{"max", max_or(4)}};
                summary = sweep_tensor_lemmas(max_or(4), jobs);
            } else {
                report.inputs = {{"max", max_or(7)}};
                summary = sweep_lgv_oracle(max_or(7), 3, jobs);
            }
            report.inputs["jobs"] = jobs;
            report.result = to_json(summary);
            for (const auto& f : summary.findings) report.failures.push_back({{"instance", f.instance}, {"detail", f.detail}});
            if (!summary.passed()) report.exit_code = kAssertionFailed;
        };
    });

    std::string target;
    auto* repro_cmd = app.add_subcommand("reproduce", "re-derive a worked example and assert its outcome");
    repro_cmd->add_option("target", target, "example-1var, example-lex, example-3var, remark-tensor, section4-csm")
        ->required()
        ->check(CLI::IsMember({"example-1var", "example-lex", "example-3var", "remark-tensor", "section4-csm"}));
    repro_cmd->callback([&] {
        action = [&] {
            report.command = "reproduce " + target;
            report.inputs = {{"target", target}};
            report.result["assertions"] = json::array();
            if (target == "example-1var") reproduce_example_1var(report);
            else if (target == "example-lex") reproduce_example_lex(report);
            else if (target == "example-3var") reproduce_example_3var(report);
            else if (target == "remark-tensor") reproduce_remark_tensor(report);
            else reproduce_section4_csm(report);
            report.result["passed"] = report.failures.empty();
            if (!report.failures.empty()) report.exit_code = kAssertionFailed;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);

    const auto doc = report_json(report, global.no_timing ? 0 : static_cast<long>(elapsed.count()));
    const bool as_json = global.format == "json";
    if (global.output.empty()) {
        write_report(doc, as_json, out);
    } else {
        std::ofstream file(global.output);
        if (!file) {
            err << "error: cannot open " << global.output << "\n";
            return kUsageError;
        }
        write_report(doc, as_json, file);
    }
    return report.exit_code;
}

}  // namespace lefschetz::cli
