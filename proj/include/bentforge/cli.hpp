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

#ifndef BENTFORGE_CLI_HPP
#define BENTFORGE_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "bentforge/json_io.hpp"

namespace bentforge {

/// Exit codes: 0 success / golden match, 1 golden mismatch, 2 validation
/// error, 3 internal invariant breach.
int exit_code_for(const Error& e);

/// Runs a bundled example end to end and diffs every golden field.
int cmd_reproduce(const std::string& name, const std::string& format, std::ostream& out);

/// Analyzes a user-supplied function: plateau order, linear space,
/// partial bentness, spectrum multiset, classification, algebraic degree.
int cmd_analyze(const json& spec, const std::optional<std::string>& delta_arg,
                const std::string& format, std::ostream& out);

/// Runs the merge pipeline from a recipe file; writes report.json and
/// recipe.json under outdir when given.
int cmd_construct(const json& recipe, const std::string& outdir, const std::string& format,
                  std::ostream& out);

struct SearchRanges {
    int p = 3;
    std::vector<int> ns;
    std::vector<int> kappas;
    std::optional<int> r_min, r_max;
};

/// Parameter sweeps for the monomial / binomial / nwr families; writes a
/// JSON-lines catalog (one row per cell) and prints summary counts.
int cmd_search(const std::string& family, const SearchRanges& ranges, const std::string& out_path,
               std::ostream& out);

} // namespace bentforge

#endif
