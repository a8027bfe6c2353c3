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

#include "bentforge/poly_repr.hpp"

#include <algorithm>

namespace bentforge {

UnivariatePoly interpolate(const FpFunction& f) {
    const FieldCtx& F = *f.ctx;
    const uint64_t q = F.size();
    if (q > naive_domain_guard(1u << 16)) fail(Errc::DomainTooLarge, "interpolation guarded to p^n <= 2^16");
    if (!F.has_tables()) fail(Errc::DomainTooLarge, "interpolation requires log tables");

    UnivariatePoly out;
    out.ctx = &F;
    if (f.values[0] != 0) out.terms[0] = F.scalar(f.values[0]);
    for (uint64_t j = 1; j <= q - 2; ++j) {
        FElem s = F.zero();
        for (uint64_t k = 0; k <= q - 2; ++k) {
            fp_t fv = f.values[1 + k];  // f(g^k)
            if (fv == 0) continue;
            uint64_t e = (q - 1 - (j * k) % (q - 1)) % (q - 1);  // -jk mod q-1
            s = F.add(s, F.scalar_mul(fv, F.from_log(e)));
        }
        s = F.neg(s);
        if (s.code != 0) out.terms[j] = s;
    }
    int64_t total = 0;
    for (fp_t v : f.values) total += v;
    fp_t topc = static_cast<fp_t>(((-(total % F.p())) % F.p() + F.p()) % F.p());
    if (topc != 0) out.terms[q - 1] = F.scalar(topc);

    for (uint32_t i = 0; i < q; ++i) {
        FElem x = F.element_at(i);
        if (evaluate(out, x) != F.scalar(f.values[i]))
            fail(Errc::PreconditionViolated, "interpolation verification failed");
    }
    return out;
}

FElem evaluate(const UnivariatePoly& poly, FElem x) {
    const FieldCtx& F = *poly.ctx;
    FElem s = F.zero();
    for (const auto& [e, c] : poly.terms) s = F.add(s, F.mul(c, F.pow(x, e)));
    return s;
}

int algebraic_degree(const UnivariatePoly& poly) {
    const int p = poly.ctx->p();
    int best = 0;
    for (const auto& [e, c] : poly.terms) {
        int s = 0;
        uint64_t rem = e;
        while (rem) {
            s += static_cast<int>(rem % static_cast<uint64_t>(p));
            rem /= static_cast<uint64_t>(p);
        }
        best = std::max(best, s);
    }
    return best;
}

std::string render(const UnivariatePoly& poly) {
    const FieldCtx& F = *poly.ctx;
    if (poly.terms.empty()) return "0";
    std::string out;
    for (auto it = poly.terms.rbegin(); it != poly.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        std::vector<fp_t> co = F.coords(c);
        bool scalar = std::all_of(co.begin() + 1, co.end(), [](fp_t v) { return v == 0; });
        std::string cs;
        if (scalar) {
            if (co[0] != 1 || e == 0) cs = std::to_string(co[0]);
        } else {
            uint64_t lg = *F.log(c);
            cs = lg == 1 ? "g" : "g^" + std::to_string(lg);
        }
        if (e == 0) {
            out += cs;
        } else {
            if (!cs.empty()) out += cs + "*";
            out += (e == 1) ? "x" : "x^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace bentforge
