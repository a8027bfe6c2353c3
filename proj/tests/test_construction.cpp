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

#include <doctest.h>

#include <random>

#include "bentforge/construction.hpp"
#include "bentforge/fixtures.hpp"

using namespace bentforge;

TEST_CASE("find_delta") {
    SUBCASE("example 1: delta = 1 passes strict mode") {
        const FieldCtx& F = FieldCtx::named("gf64");
        InnerProduct ip = find_delta(F, F.from_log(25), F.from_log(46), PipelineMode::Strict);
        CHECK(ip.delta == F.one());
    }
    SUBCASE("example ex3: delta = 1 fails strict but passes relaxed") {
        const FieldCtx& F = FieldCtx::named("gf27");
        FElem b1 = F.gen(), b2 = F.one();
        InnerProduct relaxed = find_delta(F, b1, b2, PipelineMode::Relaxed);
        CHECK(relaxed.delta == F.one());
        InnerProduct strict = find_delta(F, b1, b2, PipelineMode::Strict);
        CHECK(strict.delta != F.one());
        CHECK(inner(F, strict, b1, b2) == 0);
        CHECK(inner(F, strict, b1, b1) != 0);
        CHECK(inner(F, strict, b2, b2) != 0);
        // scan order: the returned delta is the first strict hit in log order
        uint64_t dlog = *F.log(strict.delta);
        for (uint64_t k = 0; k < dlog; ++k) {
            InnerProduct cand{F.from_log(k)};
            bool ok = inner(F, cand, b1, b2) == 0 && inner(F, cand, b1, b1) != 0 &&
                      inner(F, cand, b2, b2) != 0;
            CHECK_FALSE(ok);
        }
    }
    SUBCASE("dependent betas are rejected") {
        const FieldCtx& F = FieldCtx::named("gf27");
        CHECK_THROWS_AS(find_delta(F, F.gen(), F.scalar_mul(2, F.gen()), PipelineMode::Strict), Error);
    }
}

TEST_CASE("select_gammas satisfies the separation equation") {
    const FieldCtx& F = FieldCtx::named("gf27");
    FElem b1 = F.gen(), b2 = F.one();
    std::vector<FpFunction> fks = {
        from_trace_terms(F, {{F.scalar(2), 2}, {F.one(), 10}}),
        from_trace_terms(F, {{F.scalar(2), 2}, {F.one(), 4}}),
        from_trace_terms(F, {{F.scalar(2), 2}, {F.one(), 4}}),
    };
    InnerProduct ip = find_delta(F, b1, b2, PipelineMode::Relaxed);
    GammaSelection sel = select_gammas(F, ip, fks, b1, b2, PipelineMode::Relaxed);
    CHECK(sel.t != 0);
    CHECK(sel.gammas.size() == 3);
    CHECK(sel.gammas[0] == F.zero());  // k = 0 with gamma_0 = 0 always satisfies the equation
    fp_t f0b2 = fks[0].at_elem(b2);
    for (int k = 0; k < 3; ++k) {
        fp_t lhs = static_cast<fp_t>((fks[static_cast<size_t>(k)].at_elem(b2) +
                                      inner(F, ip, sel.gammas[static_cast<size_t>(k)], b2)) % 3);
        CHECK(lhs == (f0b2 + k) % 3);
        CHECK(inner(F, ip, b1, sel.gammas[static_cast<size_t>(k)]) == 0);
    }
}

TEST_CASE("build_gk") {
    const FieldCtx& F = FieldCtx::named("gf64");
    InnerProduct ip{F.one()};
    FpFunction f1 = from_trace_terms(F, {{F.from_log(22), 5}});
    SUBCASE("zero gamma leaves the function unchanged") {
        CHECK(build_gk(f1, F.zero(), ip).values == f1.values);
    }
    SUBCASE("example 1 g_1 = f_1 + Tr(g^3 x)") {
        FpFunction g1 = build_gk(f1, F.from_log(3), ip);
        FpFunction direct = from_trace_terms(F, {{F.from_log(22), 5}, {F.from_log(3), 1}});
        CHECK(g1.values == direct.values);
    }
}

TEST_CASE("merge_indicator equals merge_branch") {
    SUBCASE("on the example fixtures") {
        for (const char* name : {"ex1", "ex2", "ex3a", "ex3b"}) {
            FixtureInputs in = instantiate(fixture(name));
            const FieldCtx& F = *in.field;
            InnerProduct ip = find_delta(F, in.beta1, in.beta2, in.mode);
            std::vector<FpFunction> gs;
            for (size_t k = 0; k < in.fks.size(); ++k)
                gs.push_back(build_gk(in.fks[k], (*in.overrides.gammas)[k], ip));
            fp_t ell = inner(F, ip, in.beta1, in.beta1);
            fp_t ell_inv = 1;
            for (fp_t i = 1; i < F.p(); ++i)
                if (i * ell % F.p() == 1) { ell_inv = i; break; }
            FElem gamma = F.scalar_mul(ell_inv, in.beta1);
            CHECK(merge_indicator(gs, gamma, ip).values == merge_branch(gs, gamma, ip).values);
        }
    }
    SUBCASE("on random branch functions") {
        const FieldCtx& F = FieldCtx::named("gf27");
        InnerProduct ip{F.one()};
        std::mt19937 rng(9);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<FpFunction> gs;
            for (int k = 0; k < 3; ++k) {
                std::vector<fp_t> vals(F.size());
                for (fp_t& v : vals) v = static_cast<fp_t>(rng() % 3);
                gs.push_back(make_function(F, std::move(vals)));
            }
            FElem gamma = F.from_log(rng() % (F.size() - 1));
            CHECK(merge_indicator(gs, gamma, ip).values == merge_branch(gs, gamma, ip).values);
        }
    }
    SUBCASE("merging p copies of one function returns it") {
        const FieldCtx& F = FieldCtx::named("gf27");
        InnerProduct ip{F.one()};
        FpFunction g = from_trace_terms(F, {{F.scalar(2), 2}, {F.one(), 4}});
        std::vector<FpFunction> gs = {g, g, g};
        CHECK(merge_indicator(gs, F.gen(), ip).values == g.values);
    }
}

TEST_CASE("merged tables match the displayed branch definitions") {
    SUBCASE("example 2: f_0 / f_1 + Tr(x) / f_0 + Tr(2x) selected by Tr(gamma x)") {
        FixtureInputs in = instantiate(fixture("ex2"));
        PipelineResult res = run_pipeline(*in.field, in.fks, in.beta1, in.beta2, in.mode, in.overrides);
        const FieldCtx& F = *in.field;
        std::vector<FpFunction> branch = {
            from_trace_terms(F, {{F.from_log(4), 28}}),
            from_trace_terms(F, {{F.from_log(44), 28}, {F.one(), 1}}),
            from_trace_terms(F, {{F.from_log(4), 28}, {F.scalar(2), 1}}),
        };
        FElem gm = res.recipe.gamma_merge;
        for (uint32_t i = 0; i < F.size(); ++i) {
            FElem x = F.element_at(i);
            fp_t sel = F.trace(F.mul(F.mul(res.recipe.delta, gm), x));
            CHECK(res.merged.values[i] == branch[static_cast<size_t>(sel)].values[i]);
        }
    }
    SUBCASE("example 3B: branch display with selector Tr(gx)") {
        FixtureInputs in = instantiate(fixture("ex3b"));
        PipelineResult res = run_pipeline(*in.field, in.fks, in.beta1, in.beta2, in.mode, in.overrides);
        const FieldCtx& F = *in.field;
        FpFunction b0 = from_trace_terms(F, {{F.scalar(2), 2}, {F.one(), 10}});
        FpFunction b2sel = from_trace_terms(F, {{F.scalar(2), 2}, {F.one(), 4}, {F.scalar_mul(2, F.from_log(2)), 1}});
        FpFunction b1sel = from_trace_terms(F, {{F.one(), 2}, {F.scalar(2), 4}, {F.from_log(2), 1}});
        for (uint32_t i = 0; i < F.size(); ++i) {
            FElem x = F.element_at(i);
            fp_t tgx = F.trace(F.mul(F.gen(), x));
            fp_t want = tgx == 0 ? b0.values[i] : (tgx == 2 ? b2sel.values[i] : b1sel.values[i]);
            CHECK(res.merged.values[i] == want);
        }
    }
}

TEST_CASE("monomial predicate on the paper's cells") {
    CHECK(monomial_is_2plateaued(2, 6, 2, 1));    // example 1: Tr(g x^5), x^5 = x^{2^2+1}
    CHECK(monomial_is_2plateaued(2, 6, 2, 22));   // example 1 second ingredient
    CHECK(monomial_is_2plateaued(3, 4, 3, 4));    // example 2: Tr(g^4 x^28), x^28 = x^{3^3+1}
    CHECK_FALSE(monomial_is_2plateaued(3, 3, 1, 0));  // p odd needs n even
    CHECK_FALSE(monomial_is_2plateaued(3, 4, 2, 0));  // p odd needs r odd
}

TEST_CASE("monomial predicate cross-validated by the measured plateau order") {
    struct Grid { int p, n; std::string_view field; };
    for (const Grid& g : std::vector<Grid>{{2, 6, "gf64"}, {3, 4, "gf81"}}) {
        const FieldCtx& F = FieldCtx::named(g.field);
        InnerProduct ip{F.one()};
        for (int r = 1; r < g.n; ++r) {
            uint64_t pr = 1;
            for (int i = 0; i < r; ++i) pr *= static_cast<uint64_t>(g.p);
            for (uint64_t c = 0; c + 1 < F.size(); c += 3) {  // stride keeps the unit test quick
                FpFunction f = from_trace_terms(F, {{F.from_log(c), pr + 1}});
                std::optional<int> s = plateau_order(f, ip);
                bool measured = s.has_value() && *s == 2;
                CAPTURE(g.p); CAPTURE(g.n); CAPTURE(r); CAPTURE(c);
                CHECK(monomial_is_2plateaued(g.p, g.n, r, c) == measured);
            }
        }
    }
}

TEST_CASE("binomial family") {
    SUBCASE("paper ingredients on F_27") {
        const FieldCtx& F = FieldCtx::named("gf27");
        BinomialResult b1 = binomial_build(F, 1);
        CHECK(b1.predicted_dim2);
        CHECK(b1.f.values == from_trace_terms(F, {{F.scalar(2), 2}, {F.one(), 10}}).values);
        CHECK(linear_space(b1.f).space.dim() == 2);

        BinomialResult b0 = binomial_build(F, 0);
        CHECK(b0.predicted_dim2);
        CHECK(b0.f.values == from_trace_terms(F, {{F.scalar(2), 2}, {F.one(), 4}}).values);
        CHECK(linear_space(b0.f).space.dim() == 2);
    }
    SUBCASE("n even with kappa >= 1 exceeds dimension 2") {
        FieldCtx F = FieldCtx::make(3, 6, {2, 0, 0, 0, 0, 1, 1});
        BinomialResult b = binomial_build(F, 1);
        CHECK_FALSE(b.predicted_dim2);
        CHECK(linear_space(b.f).space.dim() > 2);
    }
    SUBCASE("3 must divide n") {
        const FieldCtx& F = FieldCtx::named("gf81");
        CHECK_THROWS_AS(binomial_build(F, 1), Error);
    }
    SUBCASE("prediction matches the linearized-polynomial kernel") {
        for (int kappa : {0, 1, 2}) {
            const FieldCtx& F = FieldCtx::named("gf27");
            BinomialResult b = binomial_build(F, kappa);
            int r = 1 << kappa;
            Subspace k = kernel_of_linearized(F, {{F.one(), r}, {F.one(), 2 * r}, {F.one(), 0}});
            CHECK(linear_space(b.f).space == k);
        }
    }
}

TEST_CASE("nonsquare multiples flip every nonzero coefficient sign (n odd)") {
    const FieldCtx& F = FieldCtx::named("gf27");
    InnerProduct ip{F.one()};
    FpFunction f = binomial_build(F, 1).f;
    WalshSpectrum sp1 = walsh_fast(f, ip);
    WalshSpectrum sp2 = walsh_fast(scalar_mul_fn(2, f), ip);  // 2 is the nonsquare mod 3
    std::optional<int> s = plateau_order_of(sp1);
    REQUIRE(s.has_value());
    CoeffNormalizer norm(F.p(), F.n() + *s);
    for (size_t i = 0; i < sp1.entries.size(); ++i) {
        bool z1 = sp1.entries[i].is_zero(), z2 = sp2.entries[i].is_zero();
        CHECK(z1 == z2);
        if (z1) continue;
        NormalizedCoeff a = norm(sp1.entries[i]);
        NormalizedCoeff b = norm(sp2.entries[i]);
        REQUIRE(a.magnitude_ok);
        REQUIRE(b.magnitude_ok);
        CHECK(b.sign == -a.sign);
    }
}

TEST_CASE("nwr_build") {
    const FieldCtx& F = FieldCtx::named("gf27");
    Subspace kern = kernel_of_linearized(F, {{F.one(), 1}, {F.one(), 2}, {F.one(), 0}});
    REQUIRE(kern.dim() == 2);
    FElem b1 = kern.basis()[0], b2 = kern.basis()[1];
    InnerProduct ip = find_delta(F, b1, b2, PipelineMode::Relaxed);
    FElem Gamma = F.zero();
    for (uint64_t k = 0; k + 1 < F.size(); ++k) {
        FElem cand = F.from_log(k);
        if (inner(F, ip, b1, cand) == 0 && inner(F, ip, cand, b2) != 0) { Gamma = cand; break; }
    }
    REQUIRE(Gamma != F.zero());

    SUBCASE("all-square coefficients give a weakly regular bent function") {
        NwrParams params;
        params.kappa = 1;
        params.a = {1, 1, 1};
        NwrResult res = nwr_build(F, params, b1, b2, ip.delta, Gamma);
        CHECK_FALSE(res.has_nonsquare);
        BentClassification cls = classify(res.f, ip);
        CHECK(cls.kind == BentKind::WeaklyRegular);
        // c_k = t^{-1} * k when all a_k = 1
        fp_t t = inner(F, ip, Gamma, b2);
        fp_t tinv = 1;
        for (fp_t i = 1; i < 3; ++i)
            if (i * t % 3 == 1) tinv = i;
        for (int k = 1; k < 3; ++k) CHECK(res.params.c[static_cast<size_t>(k)] == tinv * k % 3);
    }
    SUBCASE("a nonsquare coefficient makes it not weakly regular") {
        NwrParams params;
        params.kappa = 1;
        params.a = {1, 2, 2};
        NwrResult res = nwr_build(F, params, b1, b2, ip.delta, Gamma);
        CHECK(res.has_nonsquare);
        CHECK(classify(res.f, ip).kind == BentKind::NotWeaklyRegular);
    }
    SUBCASE("zero coefficients are rejected") {
        NwrParams params;
        params.kappa = 1;
        params.a = {1, 0, 1};
        CHECK_THROWS_AS(nwr_build(F, params, b1, b2, ip.delta, Gamma), Error);
    }
    SUBCASE("violated trace preconditions are named") {
        NwrParams params;
        params.kappa = 1;
        params.a = {1, 1, 1};
        try {
            nwr_build(F, params, b1, b2, ip.delta, b1);  // Gamma = b1 pairs wrongly
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::PreconditionViolated);
            CHECK(std::string(e.what()).find("Tr(") != std::string::npos);
        }
    }
}

TEST_CASE("run_pipeline end-to-end") {
    SUBCASE("every fixture merge is bent (theorem re-verified)") {
        for (const char* name : {"ex1", "ex2", "ex3a", "ex3b"}) {
            FixtureInputs in = instantiate(fixture(name));
            PipelineResult res = run_pipeline(*in.field, in.fks, in.beta1, in.beta2, in.mode, in.overrides);
            CHECK(res.classification.kind != BentKind::NotBent);
            CHECK(res.near_bent_ok);
            CHECK(res.supports_disjoint);
            CHECK(res.support_sizes_ok);
        }
    }
    SUBCASE("auto-selected gammas also produce bent merges") {
        FixtureInputs in = instantiate(fixture("ex3a"));
        PipelineResult res = run_pipeline(*in.field, in.fks, in.beta1, in.beta2, in.mode, {});
        CHECK(res.classification.kind != BentKind::NotBent);
    }
    SUBCASE("mismatched linear spaces are rejected") {
        const FieldCtx& F = FieldCtx::named("gf27");
        std::vector<FpFunction> fks = {
            from_trace_terms(F, {{F.scalar(2), 2}, {F.one(), 10}}),
            from_trace_terms(F, {{F.scalar(2), 2}, {F.one(), 4}}),
            from_trace_terms(F, {{F.from_log(5), 1}}),  // linear: whole field as linear space
        };
        try {
            run_pipeline(F, fks, F.gen(), F.one(), PipelineMode::Relaxed, {});
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::WrongLinearSpace);
        }
    }
    SUBCASE("dependent betas are rejected") {
        FixtureInputs in = instantiate(fixture("ex3a"));
        CHECK_THROWS_AS(
            run_pipeline(*in.field, in.fks, in.beta1, in.beta1, in.mode, in.overrides), Error);
    }
    SUBCASE("gamma override violating the separation equation is rejected") {
        FixtureInputs in = instantiate(fixture("ex3a"));
        const FieldCtx& F = *in.field;
        PipelineOverrides bad;
        bad.gammas = std::vector<FElem>{F.zero(), F.zero(), F.zero()};
        CHECK_THROWS_AS(run_pipeline(F, in.fks, in.beta1, in.beta2, in.mode, bad), Error);
    }
}
