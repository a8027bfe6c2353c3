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

#ifndef BENTFORGE_FIELD_HPP
#define BENTFORGE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bentforge/errors.hpp"

namespace bentforge {

/// Scalar of the prime field F_p, always kept in [0, p).
using fp_t = int32_t;

/// Element of F_{p^n}, stored as the base-p packing of its coordinate
/// vector with respect to the polynomial basis 1, g, ..., g^{n-1}
/// (g = residue class of x modulo the primitive polynomial).
/// Digit i of `code` is the coefficient of g^i.
struct FElem {
    uint32_t code = 0;
    friend bool operator==(FElem a, FElem b) { return a.code == b.code; }
    friend bool operator!=(FElem a, FElem b) { return a.code != b.code; }
    friend bool operator<(FElem a, FElem b) { return a.code < b.code; }
};

/// Arithmetic context for F_{p^n} = F_p[x]/(prim_poly).
///
/// Construction validates that p is prime and that prim_poly is monic,
/// irreducible and primitive (each failure is a distinct error).  For
/// p^n <= 2^20 discrete-log/antilog tables are built, and elements get a
/// dense index: 0 -> zero element, 1+k -> g^k.  Larger fields (up to
/// 2^32) fall back to schoolbook reduction with lexicographic indexing.
///
/// FieldCtx is immutable after construction and safe to share across
/// threads; all operations are pure.
class FieldCtx {
  public:
    static constexpr uint64_t kTableLimit = 1u << 20;
    static constexpr uint64_t kSizeLimit = 1ull << 32;

    static FieldCtx make(int p, int n, std::vector<fp_t> prim_poly);

    /// Bundled fields used by the reference examples: "gf64" = F_{2^6}
    /// over x^6+x^4+x^3+x+1, "gf81" = F_{3^4} over x^4+2x^3+2,
    /// "gf27" = F_{3^3} over x^3+2x+1.
    static const FieldCtx& named(std::string_view name);

    /// A bundled primitive polynomial for common small (p, n), including
    /// the three reference fields.  Empty when none is on file.
    static std::optional<FieldCtx> bundled(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    uint64_t size() const { return q_; }
    const std::vector<fp_t>& prim_poly() const { return prim_; }
    bool has_tables() const { return has_tables_; }

    FElem zero() const { return {0}; }
    FElem one() const { return {1}; }
    FElem gen() const;

    FElem from_coords(const std::vector<fp_t>& coords) const;
    std::vector<fp_t> coords(FElem a) const;
    FElem from_log(uint64_t k) const;
    std::optional<uint64_t> log(FElem a) const;
    /// Embeds s in F_p as a constant of F_{p^n}.
    FElem scalar(fp_t s) const { return {static_cast<uint32_t>(((s % p_) + p_) % p_)}; }

    FElem add(FElem a, FElem b) const;
    FElem sub(FElem a, FElem b) const;
    FElem neg(FElem a) const;
    FElem mul(FElem a, FElem b) const;
    FElem inv(FElem a) const;
    FElem pow(FElem a, uint64_t e) const;
    FElem scalar_mul(fp_t s, FElem a) const;

    /// Absolute trace to F_p: a + a^p + ... + a^{p^{n-1}}.
    fp_t trace(FElem a) const;

    /// Dense element index: 0 is the zero element; 1+k is g^k when log
    /// tables exist, otherwise the index is the coordinate packing.
    uint32_t index_of(FElem a) const;
    FElem element_at(uint32_t idx) const;

  private:
    FieldCtx() = default;
    void build_tables();
    std::vector<fp_t> poly_mulmod(const std::vector<fp_t>& a, const std::vector<fp_t>& b) const;
    FElem mul_schoolbook(FElem a, FElem b) const;

    int p_ = 2;
    int n_ = 1;
    uint64_t q_ = 2;
    std::vector<fp_t> prim_;
    bool has_tables_ = false;
    std::vector<uint32_t> exp_;       // exp_[k] = code of g^k, size q-1
    std::vector<uint32_t> log_;       // log_[code], log_[0] = sentinel
    std::vector<uint8_t> trace_;      // trace by code (tables only)
};

/// The inner product <u,v> = Tr(delta * u * v); non-degenerate iff delta != 0.
struct InnerProduct {
    FElem delta;
};

fp_t inner(const FieldCtx& F, const InnerProduct& ip, FElem u, FElem v);

/// F_p-subspace of F_{p^n} in canonical form: the basis is the reduced
/// row echelon form of any spanning set, rows ordered by pivot column.
/// Two Subspace values are equal iff they are the same subspace.
class Subspace {
  public:
    Subspace() = default;
    static Subspace span(const FieldCtx& F, const std::vector<FElem>& gens);
    static Subspace zero_space(const FieldCtx& F);
    static Subspace whole(const FieldCtx& F);

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<FElem>& basis() const { return basis_; }
    bool contains(const FieldCtx& F, FElem a) const;
    /// All p^dim elements, ordered by the little-endian coefficient tuple
    /// over the canonical basis.
    std::vector<FElem> enumerate(const FieldCtx& F) const;
    Subspace sum(const FieldCtx& F, const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    std::vector<FElem> basis_;
};

/// Kernel of the F_p-linear map x -> sum a_i x^{p^{e_i}}, as a canonical
/// subspace. `terms` lists (a_i, e_i).
Subspace kernel_of_linearized(const FieldCtx& F,
                              const std::vector<std::pair<FElem, int>>& terms);

/// {x : Tr(delta*s*x) = 0 for every s in span}.
Subspace orthogonal_complement(const FieldCtx& F, const InnerProduct& ip, const Subspace& span);

/// Any direct complement of `space`, built by greedily extending the
/// canonical basis with standard basis vectors.  Deterministic.
Subspace complement_of(const FieldCtx& F, const Subspace& space);

/// Monic gcd over F_p, coefficient vectors in ascending degree order.
std::vector<fp_t> poly_gcd_mod_p(int p, std::vector<fp_t> A, std::vector<fp_t> B);

/// Euler criterion; p must be an odd prime and a nonzero mod p.
bool is_square_mod_p(int p, fp_t a);

bool is_prime_u64(uint64_t v);

} // namespace bentforge

#endif
