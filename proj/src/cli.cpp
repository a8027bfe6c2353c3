/*
   Copyright 2026 The bentforge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "bentforge/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bentforge/fixtures.hpp"

namespace bentforge {

namespace {

std::string multiset_text(const std::vector<std::pair<std::string, int>>& ms) {
    std::string s = "{";
    bool first = true;
    for (const auto& [v, c] : ms) {
        if (!first) s += ", ";
        first = false;
        bool plain = v.find('*') == std::string::npos && v.find('^') == std::string::npos;
        s += (plain ? v : "(" + v + ")") + "^" + std::to_string(c);
    }
    return s + "}";
}

json pipeline_report(const PipelineResult& res, const UnivariatePoly* poly) {
    json rep;
    rep["field"] = field_to_json(*res.recipe.ctx);
    rep["classification"] = classification_to_json(res.classification);
    WalshSpectrum sp = walsh_fast(res.merged, InnerProduct{res.recipe.delta});
    rep["spectrum"] = spectrum_to_json(sp);
    rep["checks"] = json{{"near_bent", res.near_bent_ok},
                         {"supports_disjoint", res.supports_disjoint},
                         {"support_sizes", res.support_sizes_ok},
                         {"parseval", sp.parseval_ok()}};
    if (poly) {
        rep["polynomial"] = poly_to_json(*poly);
        rep["algebraic_degree"] = algebraic_degree(*poly);
    }
    rep["recipe"] = recipe_to_json(res.recipe);
    return rep;
}

} // namespace

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::GoldenMismatch: return 1;
        case Errc::MergedNotBent:
        case Errc::CoeffOverflow: return 3;
        default: return 2;
    }
}

int cmd_reproduce(const std::string& name, const std::string& format, std::ostream& out) {
    const ExampleFixture& fx = fixture(name);
    FixtureInputs in = instantiate(fx);
    PipelineResult res = run_pipeline(*in.field, in.fks, in.beta1, in.beta2, in.mode, in.overrides);

    WalshSpectrum sp = walsh_fast(res.merged, InnerProduct{res.recipe.delta});
    auto ms = spectrum_multiset(sp);
    UnivariatePoly poly = interpolate(res.merged);
    int degree = algebraic_degree(poly);

    std::vector<std::string> diffs;
    if (ms != fx.want_multiset)
        diffs.push_back("spectrum multiset: got " + multiset_text(ms) + ", want " +
                        multiset_text(fx.want_multiset));
    if (res.classification.kind != fx.want_kind)
        diffs.push_back(std::string("classification: got ") +
                        bent_kind_name(res.classification.kind) + ", want " +
                        bent_kind_name(fx.want_kind));
    if (fx.want_unit && (!res.classification.unit || *res.classification.unit != *fx.want_unit))
        diffs.push_back(std::string("unit: got ") +
                        (res.classification.unit ? unit_str(*res.classification.unit) : "none") +
                        ", want " + unit_str(*fx.want_unit));
    if (fx.want_degree && degree != *fx.want_degree)
        diffs.push_back("algebraic degree: got " + std::to_string(degree) + ", want " +
                        std::to_string(*fx.want_degree));
    if (fx.want_poly) {
        std::vector<std::pair<uint64_t, uint64_t>> got;
        for (auto it = poly.terms.rbegin(); it != poly.terms.rend(); ++it)
            got.emplace_back(it->first, *in.field->log(it->second));
        if (got != *fx.want_poly) {
            diffs.push_back("polynomial: " + std::to_string(got.size()) + " terms, want " +
                            std::to_string(fx.want_poly->size()) + " (term-for-term diff)");
            for (size_t i = 0; i < std::max(got.size(), fx.want_poly->size()); ++i) {
                std::string g = i < got.size() ? "g^" + std::to_string(got[i].second) + "*x^" +
                                                     std::to_string(got[i].first)
                                               : "(none)";
                std::string w = i < fx.want_poly->size()
                                    ? "g^" + std::to_string((*fx.want_poly)[i].second) + "*x^" +
                                          std::to_string((*fx.want_poly)[i].first)
                                    : "(none)";
                if (g != w) diffs.push_back("  term " + std::to_string(i) + ": got " + g + ", want " + w);
            }
        }
    }

    if (format == "json") {
        json rep = pipeline_report(res, &poly);
        rep["example"] = std::string(fx.name);
        rep["golden_match"] = diffs.empty();
        rep["diffs"] = diffs;
        out << rep.dump(2) << "\n";
    } else {
        out << "example " << fx.name << " on " << fx.field_name << "\n";
        out << "  spectrum:  " << multiset_text(ms) << "\n";
        out << "  class:     " << bent_kind_name(res.classification.kind);
        if (res.classification.unit) out << " (zeta = " << unit_str(*res.classification.unit) << ")";
        out << "\n";
        out << "  degree:    " << degree << "\n";
        out << "  poly:      " << render(poly) << "\n";
        out << "  checks:    near-bent=" << (res.near_bent_ok ? "ok" : "FAIL")
            << " disjoint-supports=" << (res.supports_disjoint ? "ok" : "FAIL")
            << " support-sizes=" << (res.support_sizes_ok ? "ok" : "FAIL") << "\n";
        if (diffs.empty()) {
            out << "  golden:    match\n";
        } else {
            out << "  golden:    MISMATCH\n";
            for (const std::string& d : diffs) out << "    " << d << "\n";
        }
    }
    return diffs.empty() ? 0 : 1;
}

int cmd_analyze(const json& spec, const std::optional<std::string>& delta_arg,
                const std::string& format, std::ostream& out) {
    if (!spec.contains("field")) fail(Errc::ParseError, "analyze spec needs a field");
    FieldCtx F = field_from_json(spec["field"]);
    FpFunction f = function_from_json(F, spec);

    InnerProduct ip{F.one()};
    if (delta_arg) {
        const std::string& s = *delta_arg;
        if (s.rfind("log:", 0) == 0)
            ip.delta = F.from_log(std::stoull(s.substr(4)));
        else
            fail(Errc::ParseError, "--delta expects log:<k>");
        if (ip.delta.code == 0) fail(Errc::ParseError, "delta must be nonzero");
    }

    WalshSpectrum sp = walsh_fast(f, ip);
    auto ms = spectrum_multiset(sp);
    BentClassification cls = classify_spectrum(f, sp);
    LinearSpaceReport lin = linear_space(f);
    bool pb = is_partially_bent(f);
    std::optional<int> s = plateau_order_of(sp);
    std::optional<UnivariatePoly> poly;
    if (F.size() <= (1u << 16)) poly = interpolate(f);

    if (format == "json") {
        json j;
        j["field"] = field_to_json(F);
        j["plateau_s"] = s ? json(*s) : json(nullptr);
        j["linear_space"] = subspace_to_json(F, lin.space);
        j["partially_bent"] = pb;
        j["classification"] = classification_to_json(cls);
        j["spectrum"] = spectrum_to_json(sp);
        if (poly) {
            j["polynomial"] = poly_to_json(*poly);
            j["algebraic_degree"] = algebraic_degree(*poly);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "field:           F_" << F.p() << "^" << F.n() << "\n";
        out << "plateau order:   " << (s ? std::to_string(*s) : std::string("none (not plateaued)")) << "\n";
        out << "linear space:    dim " << lin.space.dim() << "\n";
        out << "partially bent:  " << (pb ? "yes" : "no") << "\n";
        out << "classification:  " << bent_kind_name(cls.kind);
        if (cls.unit) out << " (zeta = " << unit_str(*cls.unit) << ")";
        out << "\n";
        out << "spectrum:        " << multiset_text(ms) << "\n";
        if (poly) {
            out << "degree:          " << algebraic_degree(*poly) << "\n";
            out << "polynomial:      " << render(*poly) << "\n";
        }
    }
    return 0;
}

int cmd_construct(const json& recipe, const std::string& outdir, const std::string& format,
                  std::ostream& out) {
    if (!recipe.contains("field")) fail(Errc::ParseError, "recipe needs a field");
    FieldCtx F = field_from_json(recipe["field"]);
    PipelineMode mode = PipelineMode::Strict;
    if (recipe.contains("mode")) {
        std::string m = recipe["mode"].get<std::string>();
        if (m == "strict") mode = PipelineMode::Strict;
        else if (m == "relaxed") mode = PipelineMode::Relaxed;
        else fail(Errc::ParseError, "mode must be strict or relaxed");
    }
    if (!recipe.contains("f") || !recipe["f"].is_array())
        fail(Errc::ParseError, "recipe needs an array f of p ingredient functions");
    std::vector<FpFunction> fks;
    for (const json& jf : recipe["f"]) fks.push_back(function_from_json(F, jf));
    if (!recipe.contains("beta1") || !recipe.contains("beta2"))
        fail(Errc::ParseError, "recipe needs beta1 and beta2");
    FElem b1 = elem_from_json(F, recipe["beta1"]);
    FElem b2 = elem_from_json(F, recipe["beta2"]);

    PipelineOverrides ov;
    if (recipe.contains("delta") && !recipe["delta"].is_null())
        ov.delta = elem_from_json(F, recipe["delta"]);
    if (recipe.contains("gammas") && !recipe["gammas"].is_null()) {
        std::vector<FElem> gs;
        for (const json& jg : recipe["gammas"]) gs.push_back(elem_from_json(F, jg));
        ov.gammas = std::move(gs);
    }
    if (recipe.contains("Gamma") && !recipe["Gamma"].is_null())
        ov.Gamma = elem_from_json(F, recipe["Gamma"]);

    PipelineResult res = run_pipeline(F, std::move(fks), b1, b2, mode, ov);
    UnivariatePoly poly = interpolate(res.merged);
    json rep = pipeline_report(res, &poly);

    if (!outdir.empty()) {
        std::filesystem::create_directories(outdir);
        std::ofstream(outdir + "/report.json") << rep.dump(2) << "\n";
        std::ofstream(outdir + "/recipe.json") << recipe_to_json(res.recipe).dump(2) << "\n";
    }
    if (format == "json") {
        out << rep.dump(2) << "\n";
    } else {
        WalshSpectrum sp = walsh_fast(res.merged, InnerProduct{res.recipe.delta});
        out << "construction on F_" << F.p() << "^" << F.n() << " ("
            << (mode == PipelineMode::Strict ? "strict" : "relaxed") << ")\n";
        out << "  delta:    g^" << *F.log(res.recipe.delta) << "\n";
        out << "  spectrum: " << multiset_text(spectrum_multiset(sp)) << "\n";
        out << "  class:    " << bent_kind_name(res.classification.kind) << "\n";
        out << "  degree:   " << algebraic_degree(poly) << "\n";
        if (!outdir.empty()) out << "  wrote " << outdir << "/report.json, recipe.json\n";
    }
    return 0;
}

int cmd_search(const std::string& family, const SearchRanges& ranges, const std::string& out_path,
               std::ostream& out) {
    std::ofstream catalog;
    if (!out_path.empty()) {
        catalog.open(out_path);
        if (!catalog) fail(Errc::ParseError, "cannot open catalog path " + out_path);
    }
    auto emit = [&](const json& row) {
        if (catalog.is_open()) catalog << row.dump() << "\n";
    };

    size_t cells = 0, agree = 0;
    if (family == "monomial") {
        for (int n : ranges.ns) {
            double qd = std::pow(static_cast<double>(ranges.p), n);
            if (qd > 4096) fail(Errc::RangeTooLarge, "monomial sweep guarded to p^n <= 4096");
            std::optional<FieldCtx> Fo = FieldCtx::bundled(ranges.p, n);
            if (!Fo) fail(Errc::RangeTooLarge, "no bundled primitive polynomial for this (p,n)");
            const FieldCtx& F = *Fo;
            InnerProduct ip{F.one()};
            int rlo = ranges.r_min.value_or(1), rhi = ranges.r_max.value_or(n - 1);
            for (int r = rlo; r <= rhi; ++r) {
                uint64_t pr = 1;
                for (int i = 0; i < r; ++i) pr *= static_cast<uint64_t>(ranges.p);
                for (uint64_t c = 0; c + 1 < F.size(); ++c) {
                    bool predicted = monomial_is_2plateaued(ranges.p, n, r, c);
                    FpFunction f = from_trace_terms(F, {{F.from_log(c), pr + 1}});
                    std::optional<int> s = plateau_order(f, ip);
                    bool measured = s && *s == 2;
                    ++cells;
                    if (predicted == measured) ++agree;
                    emit(json{{"family", "monomial"}, {"p", ranges.p}, {"n", n}, {"r", r},
                              {"c", c}, {"predicted", predicted},
                              {"measured_s", s ? json(*s) : json(nullptr)}, {"agree", predicted == measured}});
                }
            }
        }
    } else if (family == "binomial") {
        for (int n : ranges.ns) {
            std::optional<FieldCtx> Fo = FieldCtx::bundled(ranges.p, n);
            if (!Fo) fail(Errc::RangeTooLarge, "no bundled primitive polynomial for this (p,n)");
            for (int kappa : ranges.kappas) {
                BinomialResult b = binomial_build(*Fo, kappa);
                int dim = linear_space(b.f).space.dim();
                bool ok = b.predicted_dim2 == (dim == 2);
                ++cells;
                if (ok) ++agree;
                emit(json{{"family", "binomial"}, {"p", ranges.p}, {"n", n}, {"kappa", kappa},
                          {"predicted_dim2", b.predicted_dim2}, {"measured_dim", dim}, {"agree", ok}});
            }
        }
    } else if (family == "nwr") {
        const int p = ranges.p;
        if (ranges.ns.size() != 1) fail(Errc::ParseError, "nwr sweep expects a single n");
        const int n = ranges.ns[0];
        std::optional<FieldCtx> Fo = FieldCtx::bundled(p, n);
        if (!Fo) fail(Errc::RangeTooLarge, "no bundled primitive polynomial for this (p,n)");
        const FieldCtx& F = *Fo;
        Subspace kern = kernel_of_linearized(F, {{F.one(), 1}, {F.one(), 2}, {F.one(), 0}});
        if (kern.dim() != 2) fail(Errc::PreconditionViolated, "kernel of x^{p^2}+x^p+x is not 2-dimensional");
        FElem b1 = kern.basis()[0], b2 = kern.basis()[1];
        InnerProduct ip = find_delta(F, b1, b2, PipelineMode::Relaxed);
        FElem Gamma = F.zero();
        for (uint64_t k = 0; k + 1 < F.size(); ++k) {
            FElem cand = F.from_log(k);
            if (inner(F, ip, b1, cand) == 0 && inner(F, ip, cand, b2) != 0) { Gamma = cand; break; }
        }
        uint64_t combos = 1;
        for (int i = 1; i < p; ++i) combos *= static_cast<uint64_t>(p - 1);
        if (combos > 1024) fail(Errc::RangeTooLarge, "too many a-vectors for a full sweep");
        for (int kappa : ranges.kappas) {
            for (uint64_t t = 0; t < combos; ++t) {
                NwrParams params;
                params.kappa = kappa;
                params.a.assign(static_cast<size_t>(p), 1);
                uint64_t rem = t;
                for (int k = 1; k < p; ++k) {
                    params.a[static_cast<size_t>(k)] = static_cast<fp_t>(1 + rem % static_cast<uint64_t>(p - 1));
                    rem /= static_cast<uint64_t>(p - 1);
                }
                NwrResult res = nwr_build(F, params, b1, b2, ip.delta, Gamma);
                BentClassification cls = classify(res.f, ip);
                bool bent = cls.kind != BentKind::NotBent;
                bool nwr = cls.kind == BentKind::NotWeaklyRegular;
                bool ok = bent && (nwr == res.has_nonsquare);
                ++cells;
                if (ok) ++agree;
                emit(json{{"family", "nwr"}, {"p", p}, {"n", n}, {"kappa", kappa}, {"a", params.a},
                          {"kind", bent_kind_name(cls.kind)}, {"has_nonsquare", res.has_nonsquare},
                          {"agree", ok}});
            }
        }
    } else {
        fail(Errc::ParseError, "family must be monomial, binomial or nwr");
    }

    out << "family " << family << ": " << cells << " cells, " << agree << " agree, "
        << (cells - agree) << " disagree\n";
    return cells == agree ? 0 : 1;
}

} // namespace bentforge
