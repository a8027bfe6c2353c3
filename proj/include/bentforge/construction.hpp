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

#ifndef BENTFORGE_CONSTRUCTION_HPP
#define BENTFORGE_CONSTRUCTION_HPP

#include <optional>
#include <vector>

#include "bentforge/analysis.hpp"

namespace bentforge {

/// Strict mode demands Tr(d*b1*b2)=0, Tr(d*b1^2)!=0 and Tr(d*b2^2)!=0, so
/// the orthogonal complement of <b1,b2> is a direct complement.  Relaxed
/// mode (enough for the merge itself) drops the b2 condition.
enum class PipelineMode { Strict, Relaxed };

/// Full witness of one merge run: the p ingredient functions, the basis
/// of their common linear space, the chosen inner product and the
/// support-separating gamma data.
struct ConstructionRecipe {
    const FieldCtx* ctx = nullptr;
    PipelineMode mode = PipelineMode::Strict;
    std::vector<FpFunction> fks;
    FElem beta1, beta2;
    FElem delta;
    fp_t ell = 0;               // <b1,b1>
    fp_t t = 0;                 // pairing value Tr(delta*Gamma*b2)
    FElem Gamma;                // scaling direction for the gammas
    std::vector<FElem> gammas;  // p entries
    FElem gamma_merge;          // ell^{-1} * b1
    std::vector<bool> gamma_in_perp;  // diagnostics: gamma_k in <b1>-perp
};

/// First delta (scanning 1 = g^0, g, g^2, ... in log order) meeting the
/// mode's trace conditions.
InnerProduct find_delta(const FieldCtx& F, FElem beta1, FElem beta2, PipelineMode mode);

struct GammaSelection {
    FElem Gamma;
    fp_t t;
    std::vector<FElem> gammas;
};

/// Selects Gamma (beta2 itself in strict mode; smallest-log scan over
/// <b1>-perp with nonzero pairing in relaxed mode) and builds
/// gamma_k = t^{-1}(k - f_k(b2) + f_0(b2)) * Gamma.
GammaSelection select_gammas(const FieldCtx& F, const InnerProduct& ip,
                             const std::vector<FpFunction>& fks, FElem beta1, FElem beta2,
                             PipelineMode mode);

/// g_k(x) = f_k(x) + Tr(delta * gamma_k * x).
FpFunction build_gk(const FpFunction& fk, FElem gamma_k, const InnerProduct& ip);

/// F(x) = -sum_k prod_{j!=k} (<gamma,x> - j) * g_k(x).
FpFunction merge_indicator(const std::vector<FpFunction>& gs, FElem gamma, const InnerProduct& ip);

/// F(x) = g_{<gamma,x>}(x); pointwise equal to merge_indicator.
FpFunction merge_branch(const std::vector<FpFunction>& gs, FElem gamma, const InnerProduct& ip);

/// Whether Tr(g^c x^{p^r+1}) is 2-plateaued.  p odd: n even, r odd, and
/// gcd(p^2-1, p^n-1) divides (p^n-1)/2 - c(p^r-1) (the congruence reading
/// of the existence of y).  p = 2: exactly gcd(2r,n) = 2 together with
/// 3 | c(2^r-1); this coincides with the familiar case split
/// (n=0 mod 4, r odd, 3|c) / (n=2 mod 4, r even or 3|c) except at the
/// degenerate r = n/2, where the kernel jumps to dimension gcd(2r,n).
bool monomial_is_2plateaued(int p, int n, int r, uint64_t c);

struct BinomialResult {
    FpFunction f;             // Tr((p+1)/2 x^2 + x^{p^r+1}), r = 2^kappa
    bool predicted_dim2;      // kappa = 0, or kappa >= 1 and n odd
};

/// Requires p odd and 3 | n.
BinomialResult binomial_build(const FieldCtx& F, int kappa);

struct NwrParams {
    int kappa = 1;
    std::vector<fp_t> a;      // p entries, a[0] = 1, all nonzero
    std::vector<fp_t> c;      // filled by nwr_build via c_k = t^{-1}[(1-a_k)Delta + k]
    fp_t Delta = 0;           // filled by nwr_build: f(beta2)
};

struct NwrResult {
    FpFunction f;
    bool has_nonsquare;       // some a_k, k >= 1, is a nonsquare mod p
    NwrParams params;         // with c and Delta filled in
};

/// The explicit family built on the binomial: with gamma = ell^{-1}*beta1,
/// F(x) = a_{<gamma,x>} * Tr((p+1)/2 x^2 + x^{p^r+1}) + c_{<gamma,x>} * Tr(delta*Gamma*x).
/// Preconditions (each failure names the violated condition): n odd and
/// divisible by 3; kappa >= 1; beta1,beta2 span ker(x^{p^2}+x^p+x);
/// Tr(d b1^2) != 0, Tr(d b1 b2) = 0, Tr(d Gamma b1) = 0, Tr(d Gamma b2) != 0;
/// a_0 = 1 and all a_k nonzero.
NwrResult nwr_build(const FieldCtx& F, const NwrParams& params, FElem beta1, FElem beta2,
                    FElem delta, FElem Gamma);

struct PipelineOverrides {
    std::optional<FElem> delta;
    std::optional<std::vector<FElem>> gammas;   // explicit gamma_k choices
    std::optional<FElem> Gamma;                 // scaling direction, when gammas not given
};

struct PipelineResult {
    ConstructionRecipe recipe;
    FpFunction merged;
    BentClassification classification;
    bool near_bent_ok = false;         // every g_k | <b1>-perp is near-bent
    bool supports_disjoint = false;    // pairwise over the restricted transforms
    bool support_sizes_ok = false;     // each of size p^{n-2}
};

/// Validates the ingredients (p functions, partially bent, common linear
/// space exactly <b1,b2>, f_k(0)=0), picks delta and the gammas (or uses
/// the overrides), merges, re-verifies bentness and attaches the full
/// classification.  Throws on any validation failure; a merged function
/// that fails bentness raises MergedNotBent.
PipelineResult run_pipeline(const FieldCtx& F, std::vector<FpFunction> fks, FElem beta1,
                            FElem beta2, PipelineMode mode, const PipelineOverrides& ov = {});

} // namespace bentforge

#endif
