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

#include "bentforge/fixtures.hpp"

namespace bentforge {

namespace {

// Fixture ex1: F_{2^6}, f_0 = Tr(g x^5), f_1 = Tr(g^22 x^5), merged along
// beta1 = g^25 with gamma = (0, g^3).  Spectrum {-8 x28, 8 x36}, degree 3,
// and the full 38-term polynomial.
ExampleFixture make_ex1() {
    ExampleFixture fx;
    fx.name = "ex1";
    fx.field_name = "gf64";
    fx.fk_terms = {{{1, 5}}, {{22, 5}}};
    fx.beta1_log = 25;
    fx.beta2_log = 46;
    fx.mode = PipelineMode::Strict;
    fx.gamma_logs = {std::nullopt, 3};
    fx.want_multiset = {{"-8", 28}, {"8", 36}};
    fx.want_kind = BentKind::Regular;
    fx.want_unit = Unit::PlusOne;
    fx.want_degree = 3;
    fx.want_poly = std::vector<std::pair<uint64_t, uint64_t>>{
        {56, 51}, {52, 27}, {50, 12}, {49, 39}, {48, 2},  {44, 3},  {42, 0},  {41, 54},
        {40, 24}, {38, 27}, {37, 24}, {35, 15}, {34, 33}, {33, 4},  {32, 7},  {28, 57},
        {26, 45}, {25, 6},  {24, 1},  {22, 33}, {21, 0},  {20, 12}, {19, 45}, {17, 48},
        {16, 35}, {14, 60}, {13, 54}, {12, 32}, {11, 48}, {10, 6},  {8, 49},  {7, 30},
        {6, 16},  {5, 3},   {4, 56},  {3, 8},   {2, 28},  {1, 14},
    };
    return fx;
}

// Fixture ex2: F_{3^4}, f_0 = f_2 = Tr(g^4 x^28), f_1 = Tr(2 g^4 x^28),
// beta1 = g^2, beta2 = g^72, gamma = (0, 1, 2).  2 = g^40, so 2g^4 = g^44.
ExampleFixture make_ex2() {
    ExampleFixture fx;
    fx.name = "ex2";
    fx.field_name = "gf81";
    fx.fk_terms = {{{4, 28}}, {{44, 28}}, {{4, 28}}};
    fx.beta1_log = 2;
    fx.beta2_log = 72;
    fx.mode = PipelineMode::Strict;
    fx.gamma_logs = {std::nullopt, 0, 40};
    fx.want_multiset = {{"-9", 21}, {"-9*eps^1", 30}, {"-9*eps^2", 30}};
    fx.want_kind = BentKind::WeaklyRegular;
    fx.want_unit = Unit::MinusOne;
    fx.want_degree = 4;
    return fx;
}

// Fixtures ex3a/ex3b: F_{3^3}, f_0 = Tr(2x^2 + x^10), f_1 = Tr(2x^2 + x^4).
// 2 = g^13; gamma = (0, 2g^2 = g^15, g^2).  Variant A repeats f_1; variant
// B uses f_2 = 2 f_1 = Tr(x^2 + 2x^4), flipping the sign of its nonzero
// coefficients and producing the mixed-sign spectrum.
ExampleFixture make_ex3a() {
    ExampleFixture fx;
    fx.name = "ex3a";
    fx.field_name = "gf27";
    fx.fk_terms = {{{13, 2}, {0, 10}}, {{13, 2}, {0, 4}}, {{13, 2}, {0, 4}}};
    fx.beta1_log = 1;
    fx.beta2_log = 0;
    fx.mode = PipelineMode::Relaxed;
    fx.gamma_logs = {std::nullopt, 15, 2};
    fx.want_multiset = {{"-3^{3/2}*i", 9}, {"-3^{3/2}*i*eps^1", 12}, {"-3^{3/2}*i*eps^2", 6}};
    fx.want_kind = BentKind::WeaklyRegular;
    fx.want_unit = Unit::MinusI;
    fx.want_degree = 2;
    return fx;
}

ExampleFixture make_ex3b() {
    ExampleFixture fx;
    fx.name = "ex3b";
    fx.field_name = "gf27";
    fx.fk_terms = {{{13, 2}, {0, 10}}, {{13, 2}, {0, 4}}, {{0, 2}, {13, 4}}};
    fx.beta1_log = 1;
    fx.beta2_log = 0;
    fx.mode = PipelineMode::Relaxed;
    fx.gamma_logs = {std::nullopt, 15, 2};
    fx.want_multiset = {{"-3^{3/2}*i", 6}, {"-3^{3/2}*i*eps^1", 9}, {"-3^{3/2}*i*eps^2", 3},
                        {"3^{3/2}*i", 3},  {"3^{3/2}*i*eps^1", 3},  {"3^{3/2}*i*eps^2", 3}};
    fx.want_kind = BentKind::NotWeaklyRegular;
    fx.want_unit = std::nullopt;
    fx.want_degree = 4;
    fx.want_poly = std::vector<std::pair<uint64_t, uint64_t>>{
        {24, 0}, {22, 0}, {21, 0},  {20, 0}, {19, 13}, {18, 12}, {16, 0},
        {15, 13}, {14, 0}, {12, 15}, {11, 0}, {10, 19}, {9, 3},  {8, 0},
        {7, 0},  {6, 4},  {5, 13},  {4, 5},  {3, 1},   {2, 10}, {1, 9},
    };
    return fx;
}

} // namespace

const std::vector<ExampleFixture>& all_fixtures() {
    static const std::vector<ExampleFixture> fixtures = {make_ex1(), make_ex2(), make_ex3a(),
                                                         make_ex3b()};
    return fixtures;
}

const ExampleFixture& fixture(std::string_view name) {
    for (const ExampleFixture& fx : all_fixtures())
        if (fx.name == name) return fx;
    fail(Errc::ParseError, "unknown example name: " + std::string(name) +
                               " (expected ex1, ex2, ex3a or ex3b)");
}

FixtureInputs instantiate(const ExampleFixture& fx) {
    const FieldCtx& F = FieldCtx::named(fx.field_name);
    FixtureInputs in;
    in.field = &F;
    for (const auto& terms : fx.fk_terms) {
        std::vector<std::pair<FElem, uint64_t>> ts;
        for (const auto& [clog, e] : terms) ts.emplace_back(F.from_log(clog), e);
        in.fks.push_back(from_trace_terms(F, ts));
    }
    in.beta1 = F.from_log(fx.beta1_log);
    in.beta2 = F.from_log(fx.beta2_log);
    in.mode = fx.mode;
    std::vector<FElem> gammas;
    for (const auto& gl : fx.gamma_logs) gammas.push_back(gl ? F.from_log(*gl) : F.zero());
    in.overrides.gammas = std::move(gammas);
    return in;
}

} // namespace bentforge
