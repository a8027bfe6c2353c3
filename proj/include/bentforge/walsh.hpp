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

#ifndef BENTFORGE_WALSH_HPP
#define BENTFORGE_WALSH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bentforge/cyclotomic.hpp"
#include "bentforge/field.hpp"

namespace bentforge {

/// Total map F_{p^n} -> F_p as a value table in element-index order
/// (index 0 = zero element, 1+k = g^k).
struct FpFunction {
    const FieldCtx* ctx = nullptr;
    std::vector<fp_t> values;

    fp_t operator()(uint32_t idx) const { return values[idx]; }
    fp_t at_elem(FElem x) const { return values[ctx->index_of(x)]; }
};

FpFunction make_function(const FieldCtx& F, std::vector<fp_t> values);
FpFunction constant_function(const FieldCtx& F, fp_t c);
/// f(x) = Tr(sum coef_t * x^{exp_t}).
FpFunction from_trace_terms(const FieldCtx& F,
                            const std::vector<std::pair<FElem, uint64_t>>& terms);
/// f + c * Tr(delta * lambda * x) pointwise helpers.
FpFunction add_pointwise(const FpFunction& f, const FpFunction& g);
FpFunction scalar_mul_fn(fp_t s, const FpFunction& f);

/// Fourier transform values over a domain group, exact in Z[eps_p].
struct WalshSpectrum {
    const FieldCtx* ctx = nullptr;
    InnerProduct ip;
    std::vector<FElem> domain;    // enumerated transform group
    std::vector<CycInt> entries;  // parallel to domain
    bool restricted_form_nondegenerate = true;

    size_t support_size() const;
    /// Exact Parseval check: sum |entry|^2 == |domain|^2.
    bool parseval_ok() const;
};

/// O(p^{2n}) reference transform; guarded to p^n <= 4096 (override with
/// the BENTFORGE_MAX_DOMAIN environment variable).
WalshSpectrum walsh_naive(const FpFunction& f, const InnerProduct& ip);

/// Same output as walsh_naive, entry-by-entry, via the n-dimensional
/// size-p butterfly on the coordinate cube with the dual basis of
/// (u,v) -> Tr(delta*u*v) indexing the output.  O(n * p^{n+1}) ring ops.
WalshSpectrum walsh_fast(const FpFunction& f, const InnerProduct& ip);

/// Transform of f restricted to W, with b ranging over W itself; naive
/// enumeration through the basis.  Flags (but tolerates) a degenerate
/// restriction of the form to W.  Guarded to p^n <= 2^15.
WalshSpectrum walsh_on_subspace(const FpFunction& f, const Subspace& W, const InnerProduct& ip);

/// Canonical (render string, multiplicity) list: normalizable entries
/// first ordered by (sign, eps exponent), then raw entries by descending
/// coefficient vector.
std::vector<std::pair<std::string, int>> spectrum_multiset(const WalshSpectrum& s);

/// Multidimensional DFT over F_p^axes with kernel eps^{-<w,u>} (dot
/// product of digit vectors); table is indexed by base-p digit packing.
/// This is the butterfly core of walsh_fast, exposed for restriction
/// analysis where a representation-free transform is needed.
std::vector<CycInt> cube_dft(int p, int axes, const std::vector<CycInt>& table);

/// Effective guard for the naive transform domains.
uint64_t naive_domain_guard(uint64_t default_guard);

} // namespace bentforge

#endif
