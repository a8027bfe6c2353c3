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

#ifndef BENTFORGE_CYCLOTOMIC_HPP
#define BENTFORGE_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "bentforge/errors.hpp"

namespace bentforge {

/// Exact element of Z[eps_p], eps_p = exp(2*pi*i/p), p prime.
///
/// Stored as integer coefficients c_0..c_{p-2} of sum c_j eps^j, fully
/// reduced via eps^{p-1} = -(1 + eps + ... + eps^{p-2}) so that equality
/// is coefficient-wise.  For p = 2 this degenerates to a single integer
/// (eps_2 = -1).  Coefficients use checked int64 arithmetic; overflow
/// throws (|coefficients| stays below p^n * p^{n/2} at supported sizes,
/// far inside the range).
class CycInt {
  public:
    CycInt() : p_(2), c_(1, 0) {}
    explicit CycInt(int p);
    static CycInt integer(int p, int64_t v);
    static CycInt eps_pow(int p, int64_t k);
    /// Builds sum counts[j] * eps^j from a length-p tally.
    static CycInt from_counts(int p, const std::vector<int64_t>& counts);

    int p() const { return p_; }
    const std::vector<int64_t>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_integer() const;  // all eps coefficients above degree 0 vanish

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt& operator+=(const CycInt& o);
    CycInt conj() const;
    CycInt pow(unsigned e) const;

    friend bool operator==(const CycInt& a, const CycInt& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }
    friend bool operator<(const CycInt& a, const CycInt& b) { return a.c_ < b.c_; }

    std::complex<double> embed() const;

  private:
    void check_same(const CycInt& o) const;
    int p_;
    std::vector<int64_t> c_;  // length p-1
};

/// G = sum_{c in F_p} eps_p^{c^2}; requires odd p.  Satisfies
/// G*conj(G) = p and G^2 = (-1)^{(p-1)/2} * p exactly.
CycInt gauss_sum(int p);

/// Fourth roots of unity, used to report units symbolically.
enum class Unit { PlusOne, PlusI, MinusOne, MinusI };
Unit unit_mul(Unit a, Unit b);
const char* unit_str(Unit u);

/// The fixed unit u(p,n) with G^n = u * p^{n/2}: +1 for p = 1 mod 4,
/// i^n for p = 3 mod 4 (classical sign of the quadratic Gauss sum).
Unit gauss_unit(int p, int n);

/// Exact sign/exponent decomposition of a coefficient of modulus p^{m/2}:
/// w = sign * J * p^{m/2} * eps^{eps_exp} with J = i when (p = 3 mod 4 and
/// m odd), else J = 1.  magnitude_ok is false when w has no such form.
struct NormalizedCoeff {
    bool magnitude_ok = false;
    int sign = 0;      // +1 / -1, the case-split sign of the unit decomposition
    int32_t eps_exp = 0;
};

/// Reusable normalizer for a fixed (p, m); multiplies by conj(G)^m and
/// pattern-matches against the 2p candidates sigma * p^m * eps^t, all in
/// exact arithmetic (p^{m/2} itself is never materialized).  m is the
/// modulus exponent: n for bent coefficients, n+s for s-plateaued ones.
/// For p = 2 the integer path tests w = +-2^{m/2} (sign carries the unit,
/// eps_exp is 0).
class CoeffNormalizer {
  public:
    CoeffNormalizer(int p, int m);
    NormalizedCoeff operator()(const CycInt& w) const;
    int p() const { return p_; }
    int m() const { return m_; }

  private:
    int p_, m_;
    int sign_flip_;   // converts the Gauss-normalized sign to the case-split sign
    CycInt conj_g_m_; // conj(G)^m, p odd
    int64_t p_m_ = 0; // p^m when it fits
};

NormalizedCoeff normalize_coeff(const CycInt& w, int p, int n);

/// Canonical display: "-8", "8", "-9*eps^1", "3^{3/2}*i*eps^2", ...;
/// falls back to the raw coefficient polynomial when w does not have
/// modulus p^{n/2}.
std::string render_value(const CycInt& w, int p, int n);

} // namespace bentforge

#endif
