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

#include "bentforge/json_io.hpp"

namespace bentforge {

json elem_to_json(const FieldCtx& F, FElem e) {
    if (e.code == 0) {
        json j;
        j["coords"] = F.coords(e);
        return j;
    }
    if (F.has_tables()) {
        json j;
        j["log"] = *F.log(e);
        return j;
    }
    json j;
    j["coords"] = F.coords(e);
    return j;
}

FElem elem_from_json(const FieldCtx& F, const json& j) {
    if (j.is_number_integer()) return F.scalar(j.get<fp_t>());
    if (j.contains("log")) return F.from_log(j["log"].get<uint64_t>());
    if (j.contains("coords")) return F.from_coords(j["coords"].get<std::vector<fp_t>>());
    fail(Errc::ParseError, "element must be {\"log\":k} or {\"coords\":[...]}");
}

json field_to_json(const FieldCtx& F) {
    json j;
    j["p"] = F.p();
    j["n"] = F.n();
    j["prim_poly"] = F.prim_poly();
    return j;
}

FieldCtx field_from_json(const json& j) {
    if (j.is_string()) {
        const FieldCtx& F = FieldCtx::named(j.get<std::string>());
        return FieldCtx::make(F.p(), F.n(), F.prim_poly());
    }
    if (!j.contains("p") || !j.contains("n") || !j.contains("prim_poly"))
        fail(Errc::ParseError, "field descriptor needs p, n, prim_poly");
    return FieldCtx::make(j["p"].get<int>(), j["n"].get<int>(),
                          j["prim_poly"].get<std::vector<fp_t>>());
}

json cyc_to_json(const CycInt& w) {
    json j;
    j["p"] = w.p();
    j["coeffs"] = w.coeffs();
    return j;
}

json subspace_to_json(const FieldCtx& F, const Subspace& s) {
    json basis = json::array();
    for (FElem b : s.basis()) basis.push_back(elem_to_json(F, b));
    json j;
    j["dim"] = s.dim();
    j["basis"] = basis;
    return j;
}

json spectrum_to_json(const WalshSpectrum& s) {
    const FieldCtx& F = *s.ctx;
    json entries = json::array();
    for (size_t i = 0; i < s.domain.size(); ++i) {
        json e;
        e["b"] = elem_to_json(F, s.domain[i]);
        e["value"] = cyc_to_json(s.entries[i]);
        e["render"] = render_value(s.entries[i], F.p(), F.n());
        entries.push_back(std::move(e));
    }
    json ms = json::array();
    for (const auto& [str, count] : spectrum_multiset(s)) ms.push_back(json::array({str, count}));
    json j;
    j["delta"] = elem_to_json(F, s.ip.delta);
    j["entries"] = std::move(entries);
    j["multiset"] = std::move(ms);
    return j;
}

json classification_to_json(const BentClassification& c) {
    json j;
    j["kind"] = bent_kind_name(c.kind);
    j["unit"] = c.unit ? json(unit_str(*c.unit)) : json(nullptr);
    json sc;
    for (const auto& [sign, count] : c.sign_counts) sc[sign > 0 ? "+1" : "-1"] = count;
    j["sign_counts"] = std::move(sc);
    j["plateau_s"] = c.plateau_s ? json(*c.plateau_s) : json(nullptr);
    return j;
}

json poly_to_json(const UnivariatePoly& poly) {
    const FieldCtx& F = *poly.ctx;
    json terms = json::array();
    for (auto it = poly.terms.rbegin(); it != poly.terms.rend(); ++it) {
        json t;
        t["coef_log"] = *F.log(it->second);
        t["exp"] = it->first;
        terms.push_back(std::move(t));
    }
    json j;
    j["terms"] = std::move(terms);
    j["render"] = render(poly);
    return j;
}

json recipe_to_json(const ConstructionRecipe& r) {
    const FieldCtx& F = *r.ctx;
    json j;
    j["field"] = field_to_json(F);
    j["mode"] = r.mode == PipelineMode::Strict ? "strict" : "relaxed";
    json fks = json::array();
    for (const FpFunction& f : r.fks) fks.push_back(function_to_json(f));
    j["f"] = std::move(fks);
    j["beta1"] = elem_to_json(F, r.beta1);
    j["beta2"] = elem_to_json(F, r.beta2);
    j["delta"] = elem_to_json(F, r.delta);
    j["ell"] = r.ell;
    j["t"] = r.t;
    j["Gamma"] = elem_to_json(F, r.Gamma);
    json gs = json::array();
    for (FElem g : r.gammas) gs.push_back(elem_to_json(F, g));
    j["gammas"] = std::move(gs);
    j["gamma_merge"] = elem_to_json(F, r.gamma_merge);
    j["gamma_in_perp"] = r.gamma_in_perp;
    return j;
}

FpFunction function_from_json(const FieldCtx& F, const json& j) {
    if (j.contains("values")) {
        return make_function(F, j["values"].get<std::vector<fp_t>>());
    }
    if (!j.contains("terms")) fail(Errc::ParseError, "function spec needs terms or values");
    std::vector<std::pair<FElem, uint64_t>> terms;
    for (const json& t : j["terms"]) {
        if (!t.contains("coef") || !t.contains("exp"))
            fail(Errc::ParseError, "trace term needs coef and exp");
        uint64_t e = t["exp"].get<uint64_t>();
        if (e > F.size() - 1) fail(Errc::ParseError, "term exponent out of range");
        terms.emplace_back(elem_from_json(F, t["coef"]), e);
    }
    if (j.contains("linear") && !j["linear"].is_null())
        terms.emplace_back(elem_from_json(F, j["linear"]), 1);
    return from_trace_terms(F, terms);
}

json function_to_json(const FpFunction& f) {
    json j;
    j["values"] = f.values;
    return j;
}

} // namespace bentforge
