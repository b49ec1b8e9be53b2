// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Everything runs on one thread so the runtime bounds are single-threaded.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

using namespace lefschetz;
using cli::Element;
using cli::all_zero;
using cli::image_of;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

class Notes {
public:
    void require(bool ok, const std::string& what) {
        if (!ok) {
            outcome_.ok = false;
            failed_.push_back(what);
        }
    }
    void note(const std::string& text) { notes_.push_back(text); }
    void sweep(const SweepSummary& s, const std::string& label) {
        note(label + ": " + std::to_string(s.instances) + " instances, " + std::to_string(s.checked) + " checks, " +
             std::to_string(s.findings.size()) + " findings");
        for (std::size_t k = 0; k < s.findings.size() && k < 5; ++k) {
            note("  " + s.findings[k].instance + " " + s.findings[k].detail);
        }
        require(s.passed(), label + " has findings");
    }
    Outcome done() {
        std::ostringstream out;
        for (const auto& f : failed_) out << "\n    failed: " << f;
        for (const auto& n : notes_) out << "\n    " << n;
        outcome_.note = out.str();
        return outcome_;
    }

private:
    Outcome outcome_;
    std::vector<std::string> failed_;
    std::vector<std::string> notes_;
};

QuotientModule module(std::string_view num, std::string_view den, std::size_t n) {
    return QuotientModule(parse_ideal(num, n), parse_ideal(den, n));
}

Outcome lex_counterexample() {
    Notes n;
    n.require(check_slp(module("x^3, y^4", "x^5, y^5", 2)).holds, "I/J has the SLP");
    const QuotientModule gin(lex_ideal(parse_ideal("x^3, y^4")), lex_ideal(parse_ideal("x^5, y^5")));
    const auto h = hilbert_series(gin);
    n.require(h[4] == 3 && h[5] == 3, "h_4 = h_5 = 3");
    const auto wlp = check_wlp(gin);
    n.require(!wlp.holds, "Lex quotient fails the WLP");
    bool at4 = false;
    for (const auto& f : wlp.failures) {
        n.note("WLP failure i=" + std::to_string(f.degree) + " rank " + std::to_string(f.rank) + " of " +
               std::to_string(f.expected));
        at4 = at4 || (f.degree == 4 && f.power == 1 && f.rank <= 2);
    }
    n.require(at4, "failure at (i=4, d=1) with rank <= 2");
    return n.done();
}

Outcome main_theorem() {
    Notes n;
    n.require(staircase_ideals(6, 6).size() == 924, "924 staircase ideals at (6,6)");
    n.sweep(sweep_main_theorem({2, 6}, 1), "main theorem");
    return n.done();
}

Outcome lgv_oracle() {
    Notes n;
    n.sweep(sweep_lgv_oracle(7, 3, 1), "LGV oracle");
    return n.done();
}

Outcome pipeline_certificate() {
    Notes n;
    n.sweep(sweep_pipeline({2, 6}, 1), "pipeline cells");
    return n.done();
}

Outcome three_variable() {
    Notes n;
    const auto m = module("x^2, y^2, z^2", "x^3, y^3, z^3", 3);
    const auto h = hilbert_series(m);
    n.require(h[3] == 6 && h[4] == 6, "h_3 = h_4 = 6");
    const Element kernel{{"x^2*y", 1}, {"x^2*z", -1}, {"y^2*z", 1}, {"x*y^2", -1}, {"x*z^2", 1}, {"y*z^2", -1}};
    n.require(all_zero(image_of(m, LinearForm::all_ones(3), 1, 3, kernel)), "kernel element maps to zero");
    n.require(!check_wlp(m).holds, "WLP fails");
    return n.done();
}

Outcome tensor_remark() {
    Notes n;
    const auto m = module("x^2, y^2", "x^4, y^4", 2);
    n.require(hilbert_series(m) == HilbertSeries(2, {2, 4, 3, 2, 1}), "series 2t^2+4t^3+3t^4+2t^5+t^6");
    n.require(!is_almost_centered(hilbert_series(m)), "not almost centered");
    const auto big = module("x^2, y^2", "x^4, y^4, z^3", 3);
    const auto slp = check_slp(big);
    n.require(!slp.holds, "N fails the SLP");
    for (const auto& f : slp.failures) {
        n.note("failing map i=" + std::to_string(f.degree) + " d=" + std::to_string(f.power) + " rank " +
               std::to_string(f.rank) + " of " + std::to_string(f.expected));
    }
    const Element element{{"x^3", 1}, {"x^2*y", -1}, {"x*y^2", 1}, {"y^3", -1}};
    n.require(all_zero(image_of(big, LinearForm::all_ones(3), 3, 3, element)), "(x-y)(x^2+y^2) killed by l^3 on N_3");
    return n.done();
}

Outcome csm_closed_forms() {
    Notes n;
    n.sweep(sweep_csm_closed_forms(4, 1), "CSM closed forms");
    return n.done();
}

Outcome type2_soundness() {
    Notes n;
    n.sweep(sweep_type2({5, false, 1}), "type-two theorem");
    return n.done();
}

Outcome tensor_soundness() {
    Notes n;
    n.sweep(sweep_tensor(5, 1), "tensor theorem");
    return n.done();
}

Outcome lemma_suites() {
    Notes n;
    n.sweep(sweep_tensor_lemmas(4, 1), "bounded tensor lemmas");
    return n.done();
}

Outcome one_variable() {
    Notes n;
    const auto base = QuotientModule::algebra(MonomialIdeal::minimalize(1, {Monomial{2}}));
    const std::vector<GradedSummand> summands{{base, 0}, {base, 2}};
    const auto wlp = check_direct_sum(summands, LinearForm::all_ones(1), Property::Weak);
    n.require(!wlp.holds, "direct sum fails the WLP");
    n.require(wlp.failures == std::vector<MapFailure>{{1, 1, 0, 1}}, "only failure is degree 1 -> 2 with rank 0 of 1");
    return n.done();
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 means no bound
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "lex counterexample", 1, lex_counterexample},
        {2, "main theorem sweep", 300, main_theorem},
        {3, "LGV oracle equivalence", 60, lgv_oracle},
        {4, "pipeline certificate", 0, pipeline_certificate},
        {5, "three-variable counterexample", 0, three_variable},
        {6, "tensor remark", 0, tensor_remark},
        {7, "CSM closed forms", 0, csm_closed_forms},
        {8, "type-two theorem soundness", 600, type2_soundness},
        {9, "tensor theorem soundness", 0, tensor_soundness},
        {10, "bounded lemma suites", 0, lemma_suites},
        {11, "one-variable direct sum", 0, one_variable},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("\n    exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
        const bool ok = outcome.ok && in_time;
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << seconds << " s";
        if (c.limit_seconds > 0) std::cout << ", limit " << c.limit_seconds << " s";
        std::cout << ")";
        if (!in_time) std::cout << "\n    failed: runtime bound exceeded";
        std::cout << outcome.note << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
