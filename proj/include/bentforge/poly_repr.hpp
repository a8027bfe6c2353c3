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

#ifndef BENTFORGE_POLY_REPR_HPP
#define BENTFORGE_POLY_REPR_HPP

#include <map>
#include <string>

#include "bentforge/walsh.hpp"

namespace bentforge {

/// The unique polynomial of degree <= p^n - 1 matching a value table,
/// with zero coefficients omitted.
struct UnivariatePoly {
    const FieldCtx* ctx = nullptr;
    std::map<uint64_t, FElem> terms;  // exponent -> nonzero coefficient
};

/// Power-sum interpolation: c_0 = f(0), c_j = -sum_{x!=0} f(x) x^{-j} for
/// 1 <= j <= p^n-2, c_{p^n-1} = -sum_x f(x); verified by re-evaluation at
/// every point.  Guarded to p^n <= 2^16.
UnivariatePoly interpolate(const FpFunction& f);

FElem evaluate(const UnivariatePoly& poly, FElem x);

/// Max base-p digit sum over exponents with nonzero coefficient.
int algebraic_degree(const UnivariatePoly& poly);

/// Terms by descending exponent; scalar coefficients print as integers,
/// all others as powers of g ("g^51*x^56 + ... + 2*x^15 + ... + g^14*x").
std::string render(const UnivariatePoly& poly);

} // namespace bentforge

#endif
