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

#ifndef BENTFORGE_ANALYSIS_HPP
#define BENTFORGE_ANALYSIS_HPP

#include <map>
#include <optional>
#include <vector>

#include "bentforge/walsh.hpp"

namespace bentforge {

/// D_a f(x) = f(x+a) - f(x), as a value table.
FpFunction derivative(const FpFunction& f, FElem a);

/// Every value of F_p attained exactly p^{n-1} times.
bool is_balanced(const FpFunction& f);

struct LinearSpaceReport {
    Subspace space;              // the linear space: all a with D_a f constant
    bool restricted_linear;      // f - f(0) is linear on the space (sampled check)
};

/// Exhaustive a-scan with early abort; inputs with f(0) != 0 are handled
/// by subtracting f(0) for the linearity check.
LinearSpaceReport linear_space(const FpFunction& f);

/// Every derivative balanced or constant.
bool is_partially_bent(const FpFunction& f);

/// s such that |f^(b)|^2 lies in {0, p^{n+s}} for all b, when unique.
std::optional<int> plateau_order(const FpFunction& f, const InnerProduct& ip);
std::optional<int> plateau_order_of(const WalshSpectrum& s);

enum class BentKind { NotBent, Regular, WeaklyRegular, NotWeaklyRegular };
const char* bent_kind_name(BentKind k);

struct BentClassification {
    BentKind kind = BentKind::NotBent;
    std::optional<Unit> unit;           // the fixed unit zeta when (weakly) regular
    std::optional<FpFunction> dual;     // f* when bent
    std::vector<int> sign_profile;      // per-b sign in index order (bent only)
    std::map<int, int> sign_counts;
    std::optional<int> plateau_s;
};

/// Full regularity classification from the exact spectrum.  For p = 2 a
/// bent function is always Regular with the sign folded into the dual.
BentClassification classify(const FpFunction& f, const InnerProduct& ip);
BentClassification classify_spectrum(const FpFunction& f, const WalshSpectrum& s);

/// Value table of f on W in the enumeration order of W's basis tuples.
std::vector<fp_t> restrict_to(const FpFunction& f, const Subspace& W);

/// Plateau order of f|W, computed representation-free: coordinate cube of
/// W with the dot-product pairing (valid for plateau/bent questions since
/// the spectrum's absolute values do not depend on the pairing).
std::optional<int> restriction_plateau(const FpFunction& f, const Subspace& W);
bool restriction_is_bent(const FpFunction& f, const Subspace& W);

/// a must lie in W; true iff D_a(f|W) is constant on W.
bool is_linear_structure_of_restriction(const FpFunction& f, const Subspace& W, FElem a);

} // namespace bentforge

#endif
