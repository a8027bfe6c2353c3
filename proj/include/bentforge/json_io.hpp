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

#ifndef BENTFORGE_JSON_IO_HPP
#define BENTFORGE_JSON_IO_HPP

#include <json.hpp>

#include "bentforge/construction.hpp"
#include "bentforge/poly_repr.hpp"

namespace bentforge {

using json = nlohmann::ordered_json;

/// Elements serialize as {"log":k}, except zero which has no log and
/// uses {"coords":[...]}.
json elem_to_json(const FieldCtx& F, FElem e);
FElem elem_from_json(const FieldCtx& F, const json& j);

json field_to_json(const FieldCtx& F);
/// Accepts either a registry name ("gf64", "gf81", "gf27") or a full
/// descriptor {"p":..,"n":..,"prim_poly":[...]}.
FieldCtx field_from_json(const json& j);

json cyc_to_json(const CycInt& w);
json subspace_to_json(const FieldCtx& F, const Subspace& s);
json spectrum_to_json(const WalshSpectrum& s);
json classification_to_json(const BentClassification& c);
json poly_to_json(const UnivariatePoly& poly);
json recipe_to_json(const ConstructionRecipe& r);

/// Function spec: {"terms":[{"coef":ELEM,"exp":E},...], "linear":ELEM?}
/// or {"values":[...]}.  The field is supplied separately.
FpFunction function_from_json(const FieldCtx& F, const json& j);
json function_to_json(const FpFunction& f);

} // namespace bentforge

#endif
