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

#include "bentforge/construction.hpp"

#include <cmath>
#include <numeric>
#include <set>

namespace bentforge {

namespace {

fp_t inv_mod_p(int p, fp_t v) {
    v = ((v % p) + p) % p;
    for (fp_t i = 1; i < p; ++i)
        if (i * v % p == 1) return i;
    fail(Errc::PreconditionViolated, "inverse of zero scalar");
}

} // namespace

InnerProduct find_delta(const FieldCtx& F, FElem beta1, FElem beta2, PipelineMode mode) {
    if (Subspace::span(F, {beta1, beta2}).dim() != 2)
        fail(Errc::PreconditionViolated, "beta1, beta2 must be linearly independent");
    FElem b11 = F.mul(beta1, beta1);
    FElem b12 = F.mul(beta1, beta2);
    FElem b22 = F.mul(beta2, beta2);
    for (uint64_t k = 0; k + 1 < F.size(); ++k) {
        FElem d = F.from_log(k);
        if (F.trace(F.mul(d, b12)) != 0) continue;
        if (F.trace(F.mul(d, b11)) == 0) continue;
        if (mode == PipelineMode::Strict && F.trace(F.mul(d, b22)) == 0) continue;
        return InnerProduct{d};
    }
    fail(Errc::DeltaNotFound, "no delta satisfies the trace conditions");
}

GammaSelection select_gammas(const FieldCtx& F, const InnerProduct& ip,
                             const std::vector<FpFunction>& fks, FElem beta1, FElem beta2,
                             PipelineMode mode) {
    const int p = F.p();
    GammaSelection out;
    if (mode == PipelineMode::Strict) {
        out.Gamma = beta2;
        out.t = inner(F, ip, beta2, beta2);
        if (out.t == 0) fail(Errc::NoGammaCandidate, "strict mode requires Tr(delta*beta2^2) != 0");
    } else {
        bool found = false;
        for (uint64_t k = 0; k + 1 < F.size(); ++k) {
            FElem cand = F.from_log(k);
            if (inner(F, ip, beta1, cand) != 0) continue;
            fp_t t = inner(F, ip, cand, beta2);
            if (t == 0) continue;
            out.Gamma = cand;
            out.t = t;
            found = true;
            break;
        }
        if (!found) fail(Errc::NoGammaCandidate, "<beta1>-perp pairs trivially with beta2");
    }
    fp_t tinv = inv_mod_p(p, out.t);
    fp_t f0b2 = fks[0].at_elem(beta2);
    for (int k = 0; k < p; ++k) {
        fp_t fkb2 = fks[static_cast<size_t>(k)].at_elem(beta2);
        fp_t m = static_cast<fp_t>(static_cast<int64_t>(tinv) * (((k - fkb2 + f0b2) % p + p) % p) % p);
        out.gammas.push_back(F.scalar_mul(m, out.Gamma));
    }
    // contract: f_k(b2) + <gamma_k, b2> = f_0(b2) + k
    for (int k = 0; k < p; ++k) {
        fp_t lhs = static_cast<fp_t>((fks[static_cast<size_t>(k)].at_elem(beta2) +
                                      inner(F, ip, out.gammas[static_cast<size_t>(k)], beta2)) % p);
        fp_t rhs = static_cast<fp_t>((f0b2 + k) % p);
        if (lhs != rhs) fail(Errc::NoGammaCandidate, "gamma separation equation failed");
    }
    return out;
}

FpFunction build_gk(const FpFunction& fk, FElem gamma_k, const InnerProduct& ip) {
    const FieldCtx& F = *fk.ctx;
    const int p = F.p();
    FElem dgk = F.mul(ip.delta, gamma_k);
    std::vector<fp_t> vals(fk.values.size());
    for (uint32_t i = 0; i < vals.size(); ++i) {
        FElem x = F.element_at(i);
        vals[i] = static_cast<fp_t>((fk.values[i] + F.trace(F.mul(dgk, x))) % p);
    }
    return FpFunction{&F, std::move(vals)};
}

FpFunction merge_indicator(const std::vector<FpFunction>& gs, FElem gamma, const InnerProduct& ip) {
    const FieldCtx& F = *gs[0].ctx;
    const int p = F.p();
    if (static_cast<int>(gs.size()) != p) fail(Errc::PreconditionViolated, "need p branch functions");
    FElem dg = F.mul(ip.delta, gamma);
    std::vector<fp_t> vals(F.size());
    for (uint32_t i = 0; i < vals.size(); ++i) {
        FElem x = F.element_at(i);
        fp_t c = F.trace(F.mul(dg, x));
        int64_t acc = 0;
        for (int k = 0; k < p; ++k) {
            int64_t prod = 1;
            for (int j = 0; j < p; ++j) {
                if (j == k) continue;
                prod = prod * (((c - j) % p + p) % p) % p;
            }
            acc = (acc + prod * gs[static_cast<size_t>(k)].values[i]) % p;
        }
        vals[i] = static_cast<fp_t>(((-acc) % p + p) % p);
    }
    return FpFunction{&F, std::move(vals)};
}

FpFunction merge_branch(const std::vector<FpFunction>& gs, FElem gamma, const InnerProduct& ip) {
    const FieldCtx& F = *gs[0].ctx;
    const int p = F.p();
    if (static_cast<int>(gs.size()) != p) fail(Errc::PreconditionViolated, "need p branch functions");
    FElem dg = F.mul(ip.delta, gamma);
    std::vector<fp_t> vals(F.size());
    for (uint32_t i = 0; i < vals.size(); ++i) {
        FElem x = F.element_at(i);
        fp_t c = F.trace(F.mul(dg, x));
        vals[i] = gs[static_cast<size_t>(c)].values[i];
    }
    return FpFunction{&F, std::move(vals)};
}

bool monomial_is_2plateaued(int p, int n, int r, uint64_t c) {
    if (r < 1 || r >= n) fail(Errc::PreconditionViolated, "need 1 <= r < n");
    if (p == 2) {
        if (std::gcd(2 * r, n) != 2) return false;
        uint64_t m = ((1ull << r) - 1) % 3;
        return (c % 3) * m % 3 == 0;
    }
    if (n % 2 != 0 || r % 2 == 0) return false;
    // exponent arithmetic lives modulo p^n - 1
    long double qd = std::pow(static_cast<long double>(p), n);
    if (qd > static_cast<long double>(1ull << 62)) fail(Errc::RangeTooLarge, "p^n too large");
    uint64_t pn1 = 1;
    for (int i = 0; i < n; ++i) pn1 *= static_cast<uint64_t>(p);
    pn1 -= 1;
    uint64_t pr1 = 1;
    for (int i = 0; i < r; ++i) pr1 *= static_cast<uint64_t>(p);
    pr1 -= 1;
    uint64_t g = std::gcd(static_cast<uint64_t>(p) * static_cast<uint64_t>(p) - 1, pn1);
    // (p^n-1)/2 - c*(p^r-1) mod g
    uint64_t lhs = (pn1 / 2) % g;
    uint64_t rhs = (c % g) * (pr1 % g) % g;
    return lhs == rhs;
}

BinomialResult binomial_build(const FieldCtx& F, int kappa) {
    const int p = F.p(), n = F.n();
    if (p == 2) fail(Errc::PreconditionViolated, "binomial family requires odd p");
    if (n % 3 != 0) fail(Errc::BadN, "binomial family requires 3 | n");
    if (kappa < 0) fail(Errc::PreconditionViolated, "kappa must be >= 0");
    uint64_t r = 1ull << kappa;
    uint64_t pr = 1;
    for (uint64_t i = 0; i < r; ++i) pr *= static_cast<uint64_t>(p);
    fp_t half = static_cast<fp_t>((p + 1) / 2);
    BinomialResult out{
        from_trace_terms(F, {{F.scalar(half), 2}, {F.one(), pr + 1}}),
        kappa == 0 || (n % 2 == 1),
    };
    return out;
}

NwrResult nwr_build(const FieldCtx& F, const NwrParams& params, FElem beta1, FElem beta2,
                    FElem delta, FElem Gamma) {
    const int p = F.p(), n = F.n();
    if (p == 2) fail(Errc::PreconditionViolated, "nwr family requires odd p");
    if (n % 2 == 0 || n % 3 != 0) fail(Errc::PreconditionViolated, "nwr family requires odd n with 3 | n");
    if (params.kappa < 1) fail(Errc::PreconditionViolated, "nwr family requires kappa >= 1");
    if (static_cast<int>(params.a.size()) != p) fail(Errc::PreconditionViolated, "need p coefficients a_k");
    if (params.a[0] != 1) fail(Errc::PreconditionViolated, "a_0 must be 1");
    for (fp_t ak : params.a)
        if (((ak % p) + p) % p == 0) fail(Errc::PreconditionViolated, "every a_k must be nonzero");

    Subspace kern = kernel_of_linearized(F, {{F.one(), 1}, {F.one(), 2}, {F.one(), 0}});
    if (kern != Subspace::span(F, {beta1, beta2}))
        fail(Errc::PreconditionViolated, "beta1, beta2 must span ker(x^{p^2}+x^p+x)");

    InnerProduct ip{delta};
    fp_t ell = inner(F, ip, beta1, beta1);
    if (ell == 0) fail(Errc::PreconditionViolated, "Tr(delta*beta1^2) = 0");
    if (inner(F, ip, beta1, beta2) != 0) fail(Errc::PreconditionViolated, "Tr(delta*beta1*beta2) != 0");
    if (inner(F, ip, beta1, Gamma) != 0) fail(Errc::PreconditionViolated, "Tr(delta*Gamma*beta1) != 0");
    fp_t t = inner(F, ip, Gamma, beta2);
    if (t == 0) fail(Errc::PreconditionViolated, "Tr(delta*Gamma*beta2) = 0");

    BinomialResult base = binomial_build(F, params.kappa);
    NwrResult out;
    out.params = params;
    out.params.Delta = base.f.at_elem(beta2);
    out.params.c.assign(static_cast<size_t>(p), 0);
    fp_t tinv = inv_mod_p(p, t);
    for (int k = 1; k < p; ++k) {
        int64_t v = static_cast<int64_t>(1 - out.params.a[static_cast<size_t>(k)]) * out.params.Delta + k;
        out.params.c[static_cast<size_t>(k)] = static_cast<fp_t>(static_cast<int64_t>(tinv) * (((v % p) + p) % p) % p);
    }
    out.has_nonsquare = false;
    for (int k = 1; k < p; ++k)
        if (!is_square_mod_p(p, out.params.a[static_cast<size_t>(k)])) out.has_nonsquare = true;

    FElem gamma_merge = F.scalar_mul(inv_mod_p(p, ell), beta1);
    FElem dgm = F.mul(delta, gamma_merge);
    FElem dG = F.mul(delta, Gamma);
    std::vector<fp_t> vals(F.size());
    for (uint32_t i = 0; i < vals.size(); ++i) {
        FElem x = F.element_at(i);
        fp_t sel = F.trace(F.mul(dgm, x));
        fp_t lin = F.trace(F.mul(dG, x));
        int64_t v = static_cast<int64_t>(out.params.a[static_cast<size_t>(sel)]) * base.f.values[i] +
                    static_cast<int64_t>(out.params.c[static_cast<size_t>(sel)]) * lin;
        vals[i] = static_cast<fp_t>(((v % p) + p) % p);
    }
    out.f = FpFunction{&F, std::move(vals)};
    return out;
}

PipelineResult run_pipeline(const FieldCtx& F, std::vector<FpFunction> fks, FElem beta1,
                            FElem beta2, PipelineMode mode, const PipelineOverrides& ov) {
    const int p = F.p();
    if (static_cast<int>(fks.size()) != p)
        fail(Errc::PreconditionViolated, "need exactly p ingredient functions");
    Subspace lambda = Subspace::span(F, {beta1, beta2});
    if (lambda.dim() != 2) fail(Errc::PreconditionViolated, "beta1, beta2 must be independent");

    for (int k = 0; k < p; ++k) {
        const FpFunction& fk = fks[static_cast<size_t>(k)];
        if (fk.values[0] != 0)
            fail(Errc::PreconditionViolated, "ingredient f_" + std::to_string(k) + " has f(0) != 0");
        LinearSpaceReport rep = linear_space(fk);
        if (rep.space != lambda)
            fail(Errc::WrongLinearSpace, "ingredient f_" + std::to_string(k) + " has a different linear space");
        if (!is_partially_bent(fk))
            fail(Errc::IngredientNotPartiallyBent, "ingredient f_" + std::to_string(k) + " is not partially bent");
    }

    ConstructionRecipe rec;
    rec.ctx = &F;
    rec.mode = mode;
    rec.beta1 = beta1;
    rec.beta2 = beta2;

    InnerProduct ip = ov.delta ? InnerProduct{*ov.delta} : find_delta(F, beta1, beta2, mode);
    if (ov.delta) {
        if (inner(F, ip, beta1, beta2) != 0 || inner(F, ip, beta1, beta1) == 0)
            fail(Errc::PreconditionViolated, "delta override violates the trace conditions");
        if (mode == PipelineMode::Strict && inner(F, ip, beta2, beta2) == 0)
            fail(Errc::PreconditionViolated, "delta override fails the strict-mode condition");
    }
    rec.delta = ip.delta;
    rec.ell = inner(F, ip, beta1, beta1);

    if (ov.gammas) {
        if (static_cast<int>(ov.gammas->size()) != p)
            fail(Errc::PreconditionViolated, "gamma override must have p entries");
        rec.gammas = *ov.gammas;
        rec.Gamma = F.zero();
        rec.t = (mode == PipelineMode::Strict) ? inner(F, ip, beta2, beta2) : 0;
        fp_t f0b2 = fks[0].at_elem(beta2);
        for (int k = 0; k < p; ++k) {
            fp_t lhs = static_cast<fp_t>((fks[static_cast<size_t>(k)].at_elem(beta2) +
                                          inner(F, ip, rec.gammas[static_cast<size_t>(k)], beta2)) % p);
            if (lhs != static_cast<fp_t>((f0b2 + k) % p))
                fail(Errc::PreconditionViolated,
                     "gamma override " + std::to_string(k) + " violates the separation equation");
        }
    } else if (ov.Gamma) {
        FElem G = *ov.Gamma;
        if (inner(F, ip, beta1, G) != 0)
            fail(Errc::PreconditionViolated, "Gamma override must lie in <beta1>-perp");
        fp_t t = inner(F, ip, G, beta2);
        if (t == 0) fail(Errc::PreconditionViolated, "Gamma override pairs trivially with beta2");
        rec.Gamma = G;
        rec.t = t;
        fp_t tinv = 1;
        for (fp_t i = 1; i < p; ++i)
            if (i * t % p == 1) { tinv = i; break; }
        fp_t f0b2 = fks[0].at_elem(beta2);
        for (int k = 0; k < p; ++k) {
            fp_t fkb2 = fks[static_cast<size_t>(k)].at_elem(beta2);
            fp_t m = static_cast<fp_t>(static_cast<int64_t>(tinv) * (((k - fkb2 + f0b2) % p + p) % p) % p);
            rec.gammas.push_back(F.scalar_mul(m, G));
        }
    } else {
        GammaSelection sel = select_gammas(F, ip, fks, beta1, beta2, mode);
        rec.Gamma = sel.Gamma;
        rec.t = sel.t;
        rec.gammas = sel.gammas;
    }
    for (FElem gk : rec.gammas) rec.gamma_in_perp.push_back(inner(F, ip, beta1, gk) == 0);

    rec.gamma_merge = F.scalar_mul(inv_mod_p(p, rec.ell), beta1);
    rec.fks = fks;

    std::vector<FpFunction> gs;
    for (int k = 0; k < p; ++k)
        gs.push_back(build_gk(fks[static_cast<size_t>(k)], rec.gammas[static_cast<size_t>(k)], ip));

    PipelineResult out;
    out.recipe = std::move(rec);

    // Restriction checks on V_{n-1} = <beta1>-perp (contains beta2 by construction).
    Subspace vn1 = orthogonal_complement(F, ip, Subspace::span(F, {beta1}));
    out.near_bent_ok = true;
    out.supports_disjoint = true;
    out.support_sizes_ok = true;
    std::vector<std::set<uint32_t>> supports;
    uint64_t want_supp = F.size() / static_cast<uint64_t>(p) / static_cast<uint64_t>(p);
    for (const FpFunction& gk : gs) {
        std::optional<int> s = restriction_plateau(gk, vn1);
        if (!s || *s != 1) out.near_bent_ok = false;
        WalshSpectrum sp = walsh_on_subspace(gk, vn1, ip);
        std::set<uint32_t> supp;
        for (size_t i = 0; i < sp.entries.size(); ++i)
            if (!sp.entries[i].is_zero()) supp.insert(sp.domain[i].code);
        if (supp.size() != want_supp) out.support_sizes_ok = false;
        supports.push_back(std::move(supp));
    }
    for (size_t i = 0; i < supports.size(); ++i)
        for (size_t j = i + 1; j < supports.size(); ++j)
            for (uint32_t b : supports[i])
                if (supports[j].count(b)) { out.supports_disjoint = false; break; }

    out.merged = merge_branch(gs, out.recipe.gamma_merge, ip);
    out.classification = classify(out.merged, ip);
    if (out.classification.kind == BentKind::NotBent)
        fail(Errc::MergedNotBent, "merged function failed the bentness verification");
    return out;
}

} // namespace bentforge
