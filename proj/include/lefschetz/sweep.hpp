#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lefschetz/cl_pipeline.hpp"
#include "lefschetz/conditions.hpp"
#include "lefschetz/csm.hpp"
#include "lefschetz/lefschetz_check.hpp"
#include "lefschetz/lgv.hpp"
#include "lefschetz/monomial_ideal.hpp"
#include "lefschetz/quotient_module.hpp"
#include "lefschetz/series_shape.hpp"

namespace lefschetz {

/**
 * Runs fn(0..count-1) on up to `jobs` threads and returns the results in
 * index order, so the output does not depend on scheduling.
 */
template <typename Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    std::vector<decltype(fn(std::size_t{}))> results(count);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t k = 0; k < count; ++k) results[k] = fn(k);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++) results[k] = fn(k);
        });
    }
    workers.clear();
    return results;
}

/// Every monomial ideal of k[x,y] containing (x^a, y^b); C(a+b, a) of them.
inline std::vector<MonomialIdeal> staircase_ideals(int a, int b) {
    std::vector<MonomialIdeal> out;
    // widths[j] = least x-exponent of a generator in row y^j, nonincreasing in j.
    std::vector<int> widths(static_cast<std::size_t>(b), a);
    std::function<void(std::size_t, int)> fill = [&](std::size_t row, int cap) {
        if (row == widths.size()) {
            std::vector<Monomial> gens{Monomial{a, 0}, Monomial{0, b}};
            for (std::size_t j = 0; j < widths.size(); ++j) {
                if (widths[j] < a) gens.push_back(Monomial{widths[j], static_cast<int>(j)});
            }
            out.push_back(MonomialIdeal::minimalize(2, gens));
            return;
        }
        for (int w = cap; w >= 0; --w) {
            widths[row] = w;
            fill(row + 1, w);
        }
    };
    fill(0, a);
    return out;
}

inline MonomialIdeal box_ideal(int a, int b) { return MonomialIdeal::minimalize(2, {Monomial{a, 0}, Monomial{0, b}}); }

/// A counterexample found by a sweep, rendered for reports.
struct SweepFinding {
    std::string instance;
    std::string detail;
};

struct SweepSummary {
    std::size_t instances = 0;
    /// Units of work actually decided; per sweep these are modules, cells or predicted cases.
    std::size_t checked = 0;
    std::vector<SweepFinding> findings;
    bool passed() const { return findings.empty(); }
};

struct BoxRange {
    int lo = 2;
    int hi = 6;
};

// ---------------------------------------------------------------------------
// Staircase quotients (I + J) / J with J = (x^a, y^b).

struct StaircaseInstance {
    int a = 0;
    int b = 0;
    MonomialIdeal ideal{2};
};

inline std::vector<StaircaseInstance> staircase_corpus(BoxRange range) {
    std::vector<StaircaseInstance> out;
    for (int a = range.lo; a <= range.hi; ++a) {
        for (int b = range.lo; b <= range.hi; ++b) {
            for (auto& ideal : staircase_ideals(a, b)) out.push_back({a, b, std::move(ideal)});
        }
    }
    return out;
}

inline std::string describe(const StaircaseInstance& s) {
    return "(" + to_string(s.ideal) + ")/(" + to_string(box_ideal(s.a, s.b)) + ")";
}

/// check_slp with x + y on every staircase quotient.
inline SweepSummary sweep_main_theorem(BoxRange range, unsigned jobs = 1) {
    const auto corpus = staircase_corpus(range);
    const auto reports = parallel_map(corpus.size(), jobs, [&](std::size_t k) {
        return check_slp(QuotientModule(corpus[k].ideal, box_ideal(corpus[k].a, corpus[k].b)));
    });
    SweepSummary summary{corpus.size(), corpus.size(), {}};
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        for (const auto& f : reports[k].failures) {
            summary.findings.push_back({describe(corpus[k]), "i=" + std::to_string(f.degree) + " d=" +
                                                                 std::to_string(f.power) + " rank " +
                                                                 std::to_string(f.rank) + " < " +
                                                                 std::to_string(f.expected)});
        }
    }
    return summary;
}

/// Outcome of the certificate pipeline on one (ideal, i, d) cell.
struct PipelineCell {
    bool certified = false;
    bool matches_exact_rank = false;  // certificate verdict agrees with Bareiss rank of B
    bool matches_module_map = false;  // B on columns in I equals the transposed module map
    bool closed_form = false;         // the column transform has the binomial closed form
    bool offsets_valid = false;       // every row has a nonzero entry and offset <= d
    bool maximal_rank = false;        // the module map has maximal rank
};

inline PipelineCell run_pipeline_cell(int a, int b, const MonomialIdeal& ideal, int i, int d) {
    PipelineCell cell;
    const auto full = cl_matrix(a, b, i, d);
    const auto restricted = restrict_rows(full, ideal);
    const auto transformed = pascal_column_transform(restricted.matrix);
    const auto cert = lgv_rank_certificate(restricted, transformed);
    cell.certified = cert.certified && lgv_rank_certificate(transformed);
    cell.closed_form = transformed == pascal_closed_form(restricted);
    cell.offsets_valid = row_offsets_valid(restricted);

    const auto exact = rank(restricted.matrix);
    const auto full_rank = std::min(restricted.matrix.rows(), restricted.matrix.cols());
    cell.matches_exact_rank = cell.certified == (exact == full_rank) && rank(transformed) == exact;

    const QuotientModule module(ideal, box_ideal(a, b));
    const auto map = mult_matrix(module, LinearForm::all_ones(2), d, i);
    std::vector<std::size_t> rows(restricted.matrix.rows());
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < restricted.col_labels.size(); ++c) {
        if (ideal.contains(restricted.col_labels[c])) cols.push_back(c);
    }
    cell.matches_module_map = restricted.matrix.submatrix(rows, cols) == map.transpose();
    cell.maximal_rank = rank(map) == std::min(map.rows(), map.cols()) && rank(map) == exact;
    return cell;
}

/**
 * The certificate pipeline on every staircase quotient and every (i, d)
 * with i + d <= a + b - 2 where both the source and target are nonzero.
 */
inline SweepSummary sweep_pipeline(BoxRange range, unsigned jobs = 1) {
    const auto corpus = staircase_corpus(range);
    const auto per_ideal = parallel_map(corpus.size(), jobs, [&](std::size_t k) {
        const auto& s = corpus[k];
        const QuotientModule module(s.ideal, box_ideal(s.a, s.b));
        std::vector<SweepFinding> findings;
        std::size_t cells = 0;
        for (int d = 1; d <= s.a + s.b - 2; ++d) {
            for (int i = 0; i + d <= s.a + s.b - 2; ++i) {
                if (degree_basis(module, i).empty() || degree_basis(module, i + d).empty()) continue;
                ++cells;
                const auto cell = run_pipeline_cell(s.a, s.b, s.ideal, i, d);
                std::string bad;
                if (!cell.certified) bad += " not-certified";
                if (!cell.matches_exact_rank) bad += " rank-disagrees";
                if (!cell.matches_module_map) bad += " module-map-mismatch";
                if (!cell.closed_form) bad += " closed-form-mismatch";
                if (!cell.offsets_valid) bad += " row-offset-invariant";
                if (!cell.maximal_rank) bad += " not-maximal-rank";
                if (!bad.empty()) {
                    findings.push_back({describe(s), "i=" + std::to_string(i) + " d=" + std::to_string(d) + bad});
                }
            }
        }
        return std::make_pair(cells, findings);
    });
    SweepSummary summary{corpus.size(), 0, {}};
    for (const auto& [cells, findings] : per_ideal) {
        summary.checked += cells;
        summary.findings.insert(summary.findings.end(), findings.begin(), findings.end());
    }
    return summary;
}

// ---------------------------------------------------------------------------
// Binomial determinants against exhaustive lattice-path counts.

/// All strictly increasing sequences of length 1..max_len drawn from [0, max_value].
inline std::vector<AscendingSequence> ascending_sequences(int max_value, std::size_t max_len) {
    std::vector<AscendingSequence> out;
    std::vector<int> current;
    std::function<void(int)> grow = [&](int from) {
        if (!current.empty()) out.emplace_back(current);
        if (current.size() == max_len) return;
        for (int v = from; v <= max_value; ++v) {
            current.push_back(v);
            grow(v + 1);
            current.pop_back();
        }
    };
    grow(0);
    return out;
}

inline SweepSummary sweep_lgv_oracle(int max_value = 7, std::size_t max_len = 3, unsigned jobs = 1) {
    const auto seqs = ascending_sequences(max_value, max_len);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        for (std::size_t j = 0; j < seqs.size(); ++j) {
            if (seqs[i].size() == seqs[j].size()) pairs.emplace_back(i, j);
        }
    }
    auto render = [](const AscendingSequence& s) {
        std::string out;
        for (int v : s.values()) out += (out.empty() ? "" : ",") + std::to_string(v);
        return "(" + out + ")";
    };
    const auto results = parallel_map(pairs.size(), jobs, [&](std::size_t k) -> std::string {
        const auto& a = seqs[pairs[k].first];
        const auto& b = seqs[pairs[k].second];
        const auto det = determinant(binomial_matrix(a, b));
        const auto count = count_nonintersecting(a, b);
        bool diagonal = true;
        for (std::size_t i = 0; i < a.size(); ++i) diagonal = diagonal && binomial(a[i], b[i]) != 0;
        std::string bad;
        if (det != count) bad += " det " + det.get_str() + " != count " + count.get_str();
        if (det < 0) bad += " negative-determinant";
        if ((det > 0) != diagonal) bad += " positivity-vs-diagonal";
        if (bad.empty()) {
            try {
                lgv_positivity(a, b);
            } catch (const std::logic_error&) {
                bad += " lgv_positivity-inconsistent";
            }
        }
        return bad.empty() ? std::string{} : "a=" + render(a) + " b=" + render(b) + bad;
    });
    SweepSummary summary{pairs.size(), pairs.size(), {}};
    for (const auto& r : results) {
        if (!r.empty()) summary.findings.push_back({r, ""});
    }
    return summary;
}

// ---------------------------------------------------------------------------
// Type-two algebras S / (x^a, y^b, z^c, x^alpha z^gamma, y^beta z^gamma).

inline std::vector<Type2Params> type2_corpus(int max_value) {
    std::vector<Type2Params> out;
    for (int a = 2; a <= max_value; ++a)
        for (int b = 2; b <= max_value; ++b)
            for (int c = 2; c <= max_value; ++c)
                for (int alpha = 1; alpha < a; ++alpha)
                    for (int beta = 1; beta < b; ++beta)
                        for (int gamma = 1; gamma < c; ++gamma) out.push_back({a, b, c, alpha, beta, gamma});
    return out;
}

inline std::string describe(const Type2Params& p) {
    return "(a,b,c,alpha,beta,gamma)=(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," +
           std::to_string(p.c) + "," + std::to_string(p.alpha) + "," + std::to_string(p.beta) + "," +
           std::to_string(p.gamma) + ")";
}

struct Type2SweepOptions {
    int max_value = 5;
    /// Also test the central-simple-module criterion for x and z.
    bool csm_criterion = false;
    unsigned jobs = 1;
};

/**
 * Soundness of the sufficient conditions: whenever a condition (or, with
 * csm_criterion, the CSM criterion) predicts SLP, check_slp must agree.
 * `checked` counts algebras whose SLP was computed.
 */
inline SweepSummary sweep_type2(const Type2SweepOptions& options) {
    const auto corpus = type2_corpus(options.max_value);
    struct Outcome {
        bool checked = false;
        std::vector<std::string> problems;
    };
    const auto outcomes = parallel_map(corpus.size(), options.jobs, [&](std::size_t k) {
        const auto& p = corpus[k];
        const auto ideal = type2_ideal(p);
        const auto verdict = thm_type2_conditions(p);
        bool predicted = !verdict.conditions.empty();
        bool csm_x = false;
        bool csm_z = false;
        if (options.csm_criterion) {
            csm_x = csm_slp_criterion(ideal, 0).holds();
            csm_z = csm_slp_criterion(ideal, 2).holds();
            predicted = predicted || csm_x || csm_z;
        }
        Outcome out;
        if (!predicted) return out;
        out.checked = true;
        if (check_slp(QuotientModule::algebra(ideal)).holds) return out;
        std::string conds;
        for (int c : verdict.conditions) conds += std::to_string(c);
        if (!conds.empty()) out.problems.push_back("conditions {" + conds + "} hold but SLP fails");
        if (csm_x) out.problems.push_back("CSM criterion for x holds but SLP fails");
        if (csm_z) out.problems.push_back("CSM criterion for z holds but SLP fails");
        return out;
    });
    SweepSummary summary{corpus.size(), 0, {}};
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        summary.checked += outcomes[k].checked ? 1 : 0;
        for (const auto& problem : outcomes[k].problems) summary.findings.push_back({describe(corpus[k]), problem});
    }
    return summary;
}

/**
 * Closed forms of the central simple modules of every type-two algebra with
 * parameters up to max_value, for x and for z, and the doubled reflecting
 * degrees of the tilde modules where their series are symmetric.
 */
inline SweepSummary sweep_csm_closed_forms(int max_value = 4, unsigned jobs = 1) {
    const auto corpus = type2_corpus(max_value);
    auto algebra2 = [](int e0, int e1) {
        return hilbert_series(QuotientModule::algebra(MonomialIdeal::minimalize(2, {Monomial{e0, 0}, Monomial{0, e1}})));
    };
    const auto results = parallel_map(corpus.size(), jobs, [&](std::size_t k) {
        const auto& p = corpus[k];
        const auto ideal = type2_ideal(p);
        const auto expected_degrees = thm_type2_conditions(p).doubled_degrees;
        std::vector<std::string> problems;

        auto check = [&](const CSMReport& report, const char* var, std::array<int, 2> f,
                         std::array<HilbertSeries, 2> series, std::array<int, 2> degrees) {
            if (report.entries.size() != 2) {
                problems.push_back(std::string(var) + ": " + std::to_string(report.entries.size()) + " CSMs");
                return;
            }
            for (std::size_t e = 0; e < 2; ++e) {
                const auto& entry = report.entries[e];
                const std::string tag = std::string(var) + " V" + std::to_string(e + 1);
                if (entry.f != f[e]) problems.push_back(tag + " f=" + std::to_string(entry.f));
                if (entry.hilbert != series[e]) problems.push_back(tag + " series " + to_string(entry.hilbert));
                const auto tilde_series = hilbert_series(entry.tilde);
                if (tilde_series != entry.hilbert.times_truncated_geometric(entry.f)) {
                    problems.push_back(tag + " tilde series " + to_string(tilde_series));
                }
                if (auto r = is_symmetric(tilde_series); r && r->doubled != degrees[e]) {
                    problems.push_back(tag + " 2r=" + std::to_string(r->doubled));
                }
            }
        };
        check(csm_decompose(ideal, 0), "x", {p.a, p.alpha},
              {algebra2(p.b, p.gamma), algebra2(p.beta, p.c - p.gamma).shifted(p.gamma)},
              {expected_degrees[0], expected_degrees[1]});
        const auto v2z = hilbert_series(QuotientModule(MonomialIdeal::minimalize(2, {Monomial{p.alpha, 0}, Monomial{0, p.beta}}),
                                                       box_ideal(p.a, p.b)));
        check(csm_decompose(ideal, 2), "z", {p.c, p.gamma}, {algebra2(p.alpha, p.beta), v2z},
              {expected_degrees[2], expected_degrees[3]});
        return problems;
    });
    SweepSummary summary{corpus.size(), corpus.size(), {}};
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        for (const auto& problem : results[k]) summary.findings.push_back({describe(corpus[k]), problem});
    }
    return summary;
}

// ---------------------------------------------------------------------------
// (x^alpha, y^beta) / (x^a, y^b, z^c).

struct TensorParams {
    int alpha, beta, a, b;
};

inline std::vector<TensorParams> tensor_corpus(int max_value) {
    std::vector<TensorParams> out;
    for (int a = 1; a <= max_value; ++a)
        for (int b = 1; b <= max_value; ++b)
            for (int alpha = 0; alpha <= a; ++alpha)
                for (int beta = 0; beta <= b; ++beta) out.push_back({alpha, beta, a, b});
    return out;
}

/// Whenever thm_tensor_condition predicts SLP, check it for 1 <= c <= a + b.
inline SweepSummary sweep_tensor(int max_value = 5, unsigned jobs = 1) {
    const auto corpus = tensor_corpus(max_value);
    const auto results = parallel_map(corpus.size(), jobs, [&](std::size_t k) {
        const auto& p = corpus[k];
        std::pair<std::size_t, std::vector<std::string>> out;
        const auto which = thm_tensor_condition(p.alpha, p.beta, p.a, p.b);
        if (which == TensorCase::None) return out;
        for (int c = 1; c <= p.a + p.b; ++c) {
            ++out.first;
            if (!check_slp(tensor_family_module(p.alpha, p.beta, p.a, p.b, c)).holds) {
                out.second.push_back(std::string(to_string(which)) + " but SLP fails at c=" + std::to_string(c));
            }
        }
        return out;
    });
    SweepSummary summary{corpus.size(), 0, {}};
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& p = corpus[k];
        summary.checked += results[k].first;
        for (const auto& problem : results[k].second) {
            summary.findings.push_back({"(alpha,beta,a,b)=(" + std::to_string(p.alpha) + "," + std::to_string(p.beta) +
                                            "," + std::to_string(p.a) + "," + std::to_string(p.b) + ")",
                                        problem});
        }
    }
    return summary;
}

// ---------------------------------------------------------------------------
// Bounded forms of the two tensor lemmas, with c up to socle degree + 2.

/// Modules of the lemma corpus: (x^alpha)/(x^a) and staircase quotients over (x^a, y^b).
inline std::vector<QuotientModule> small_module_corpus(int max_value) {
    std::vector<QuotientModule> out;
    for (int a = 1; a <= max_value; ++a) {
        for (int alpha = 0; alpha <= a; ++alpha) {
            out.emplace_back(MonomialIdeal::minimalize(1, {Monomial{alpha}}), MonomialIdeal::minimalize(1, {Monomial{a}}));
        }
    }
    for (const auto& s : staircase_corpus({1, max_value})) out.emplace_back(s.ideal, box_ideal(s.a, s.b));
    return out;
}

/// Algebras of the lemma corpus: k[x]/(x^a) and S/I for every staircase I inside the box.
inline std::vector<QuotientModule> small_algebra_corpus(int max_value) {
    std::vector<QuotientModule> out;
    for (int a = 1; a <= max_value; ++a) out.push_back(QuotientModule::algebra(MonomialIdeal::minimalize(1, {Monomial{a}})));
    for (auto& ideal : staircase_ideals(max_value, max_value)) out.push_back(QuotientModule::algebra(std::move(ideal)));
    return out;
}

/**
 * For each SLP module: almost centered iff tensoring with k[t]/(t^c)
 * keeps SLP for every c up to socle + 2. For each algebra: SLP iff
 * every such tensor has the WLP.
 */
inline SweepSummary sweep_tensor_lemmas(int max_value = 4, unsigned jobs = 1) {
    const auto modules = small_module_corpus(max_value);
    const auto algebras = small_algebra_corpus(max_value);
    const auto total = modules.size() + algebras.size();
    struct Outcome {
        bool checked = false;
        std::optional<SweepFinding> finding;
    };
    const auto results = parallel_map(total, jobs, [&](std::size_t k) -> Outcome {
        const bool is_module = k < modules.size();
        const auto& m = is_module ? modules[k] : algebras[k - modules.size()];
        const auto series = hilbert_series(m);
        if (series.empty()) return {};
        const auto slp = check_slp(m).holds;
        if (is_module && !slp) return {};
        const int top = series.end() + 2;
        int failing_c = 0;
        for (int c = 1; c <= top && failing_c == 0; ++c) {
            const auto t = tensor_truncation(m, c);
            if (!(is_module ? check_slp(t).holds : check_wlp(t).holds)) failing_c = c;
        }
        const bool all_c = failing_c == 0;
        const bool lhs = is_module ? is_almost_centered(series) : slp;
        if (lhs == all_c) return {true, std::nullopt};
        std::string detail = (is_module ? "almost-centered=" : "SLP=") + std::string(lhs ? "true" : "false") + " H=" +
                             to_string(series) + " but ";
        detail += all_c ? "tensor " + std::string(is_module ? "SLP" : "WLP") + " holds for all c<=" +
                              std::to_string(top)
                        : "tensor " + std::string(is_module ? "SLP" : "WLP") + " fails at c=" + std::to_string(failing_c);
        return {true, SweepFinding{"(" + to_string(m.numerator()) + ")/(" + to_string(m.denominator()) + ")", detail}};
    });
    SweepSummary summary{total, 0, {}};
    for (const auto& r : results) {
        summary.checked += r.checked ? 1 : 0;
        if (r.finding) summary.findings.push_back(*r.finding);
    }
    return summary;
}

}  // namespace lefschetz
