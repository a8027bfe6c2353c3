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

#ifndef BENTFORGE_FIXTURES_HPP
#define BENTFORGE_FIXTURES_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "bentforge/construction.hpp"
#include "bentforge/poly_repr.hpp"

namespace bentforge {

/// One bundled reference construction with its expected outputs: the
/// ingredient functions in trace form (coefficient logs), the merge data,
/// and the golden spectrum/classification/polynomial to compare against.
struct ExampleFixture {
    std::string_view name;
    std::string_view field_name;
    // per ingredient: list of (coef_log, exp)
    std::vector<std::vector<std::pair<uint64_t, uint64_t>>> fk_terms;
    uint64_t beta1_log;
    uint64_t beta2_log;
    PipelineMode mode;
    // gamma overrides; nullopt entry = the zero element
    std::vector<std::optional<uint64_t>> gamma_logs;

    std::vector<std::pair<std::string, int>> want_multiset;
    BentKind want_kind;
    std::optional<Unit> want_unit;
    std::optional<int> want_degree;
    // (exp, coef_log), descending exponent
    std::optional<std::vector<std::pair<uint64_t, uint64_t>>> want_poly;
};

const std::vector<ExampleFixture>& all_fixtures();
const ExampleFixture& fixture(std::string_view name);

/// Instantiated pipeline inputs for a fixture.
struct FixtureInputs {
    const FieldCtx* field;
    std::vector<FpFunction> fks;
    FElem beta1, beta2;
    PipelineMode mode;
    PipelineOverrides overrides;
};
FixtureInputs instantiate(const ExampleFixture& fx);

} // namespace bentforge

#endif
