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

#include "bentforge/analysis.hpp"

#include <algorithm>

namespace bentforge {

const char* bent_kind_name(BentKind k) {
    switch (k) {
        case BentKind::NotBent: return "NotBent";
        case BentKind::Regular: return "Regular";
        case BentKind::WeaklyRegular: return "WeaklyRegular";
        case BentKind::NotWeaklyRegular: return "NotWeaklyRegular";
    }
    return "?";
}

FpFunction derivative(const FpFunction& f, FElem a) {
    const FieldCtx& F = *f.ctx;
    const int p = F.p();
    std::vector<fp_t> vals(f.values.size());
    for (uint32_t i = 0; i < f.values.size(); ++i) {
        FElem x = F.element_at(i);
        fp_t v = static_cast<fp_t>((f.at_elem(F.add(x, a)) - f.values[i] + p) % p);
        vals[i] = v;
    }
    return FpFunction{&F, std::move(vals)};
}

bool is_balanced(const FpFunction& f) {
    const int p = f.ctx->p();
    std::vector<uint64_t> counts(static_cast<size_t>(p), 0);
    for (fp_t v : f.values) counts[static_cast<size_t>(v)] += 1;
    uint64_t want = f.ctx->size() / static_cast<uint64_t>(p);
    return std::all_of(counts.begin(), counts.end(), [&](uint64_t c) { return c == want; });
}

namespace {

// D_a f constant, checked against the forced value f(a) - f(0) with early abort.
bool derivative_is_constant(const FpFunction& f, FElem a) {
    const FieldCtx& F = *f.ctx;
    const int p = F.p();
    const fp_t want = static_cast<fp_t>((f.at_elem(a) - f.values[0] + p) % p);
    for (uint32_t i = 0; i < f.values.size(); ++i) {
        FElem x = F.element_at(i);
        if (static_cast<fp_t>((f.at_elem(F.add(x, a)) - f.values[i] + p) % p) != want) return false;
    }
    return true;
}

} // namespace

LinearSpaceReport linear_space(const FpFunction& f) {
    const FieldCtx& F = *f.ctx;
    const int p = F.p();
    std::vector<FElem> members;
    for (uint32_t i = 0; i < F.size(); ++i) {
        FElem a = F.element_at(i);
        if (derivative_is_constant(f, a)) members.push_back(a);
    }
    LinearSpaceReport out;
    out.space = Subspace::span(F, members);
    // f(x+a) = f(x) + f(a) - f(0) sampled on the basis against a few x
    out.restricted_linear = true;
    const fp_t f0 = f.values[0];
    for (FElem a : out.space.basis()) {
        for (uint32_t xi = 0; xi < std::min<uint64_t>(F.size(), 64); ++xi) {
            FElem x = F.element_at(xi);
            fp_t lhs = f.at_elem(F.add(x, a));
            fp_t rhs = static_cast<fp_t>(((f.at_elem(x) + f.at_elem(a) - f0) % p + p) % p);
            if (lhs != rhs) { out.restricted_linear = false; break; }
        }
    }
    return out;
}

bool is_partially_bent(const FpFunction& f) {
    const FieldCtx& F = *f.ctx;
    for (uint32_t i = 0; i < F.size(); ++i) {
        FElem a = F.element_at(i);
        if (derivative_is_constant(f, a)) continue;
        if (!is_balanced(derivative(f, a))) return false;
    }
    return true;
}

std::optional<int> plateau_order_of(const WalshSpectrum& s) {
    const int p = s.ctx->p();
    const int n = s.ctx->n();
    int64_t level = -1;
    for (const CycInt& w : s.entries) {
        CycInt m = w * w.conj();
        if (!m.is_integer()) return std::nullopt;
        int64_t v = m.coeffs()[0];
        if (v == 0) continue;
        if (level < 0) level = v;
        else if (level != v) return std::nullopt;
    }
    if (level < 0) return std::nullopt;  // all-zero spectrum cannot happen
    int e = 0;
    while (level % p == 0) {
        level /= p;
        ++e;
    }
    if (level != 1 || e < n) return std::nullopt;
    return e - n;
}

std::optional<int> plateau_order(const FpFunction& f, const InnerProduct& ip) {
    return plateau_order_of(walsh_fast(f, ip));
}

BentClassification classify_spectrum(const FpFunction& f, const WalshSpectrum& s) {
    const FieldCtx& F = *f.ctx;
    const int p = F.p(), n = F.n();
    BentClassification out;
    out.plateau_s = plateau_order_of(s);

    CoeffNormalizer norm(p, n);
    std::vector<fp_t> dual_vals(F.size(), 0);
    std::vector<int> signs(F.size(), 0);
    for (uint32_t i = 0; i < F.size(); ++i) {
        NormalizedCoeff nc = norm(s.entries[i]);
        if (!nc.magnitude_ok) {
            out.kind = BentKind::NotBent;
            return out;
        }
        signs[i] = nc.sign;
        if (p == 2) {
            dual_vals[i] = nc.sign < 0 ? 1 : 0;  // sign folded into the dual exponent
        } else {
            dual_vals[i] = nc.eps_exp;
        }
    }
    out.sign_profile = signs;
    for (int sg : signs) out.sign_counts[sg] += 1;
    out.dual = FpFunction{&F, std::move(dual_vals)};

    if (p == 2) {
        out.kind = BentKind::Regular;
        out.unit = Unit::PlusOne;
        return out;
    }
    bool constant_sign = std::all_of(signs.begin(), signs.end(), [&](int sg) { return sg == signs[0]; });
    if (!constant_sign) {
        out.kind = BentKind::NotWeaklyRegular;
        return out;
    }
    // zeta = sign * J with J = i exactly when p = 3 mod 4 and n odd
    bool imag = (p % 4 == 3 && n % 2 == 1);
    Unit zeta = imag ? Unit::PlusI : Unit::PlusOne;
    if (signs[0] < 0) zeta = unit_mul(zeta, Unit::MinusOne);
    out.unit = zeta;
    out.kind = (zeta == Unit::PlusOne) ? BentKind::Regular : BentKind::WeaklyRegular;
    return out;
}

BentClassification classify(const FpFunction& f, const InnerProduct& ip) {
    return classify_spectrum(f, walsh_fast(f, ip));
}

std::vector<fp_t> restrict_to(const FpFunction& f, const Subspace& W) {
    std::vector<fp_t> out;
    for (FElem x : W.enumerate(*f.ctx)) out.push_back(f.at_elem(x));
    return out;
}

std::optional<int> restriction_plateau(const FpFunction& f, const Subspace& W) {
    const FieldCtx& F = *f.ctx;
    const int p = F.p();
    const int m = W.dim();
    std::vector<fp_t> vals = restrict_to(f, W);
    std::vector<CycInt> table;
    table.reserve(vals.size());
    for (fp_t v : vals) table.push_back(CycInt::eps_pow(p, v));
    std::vector<CycInt> sp = cube_dft(p, m, table);
    int64_t level = -1;
    for (const CycInt& w : sp) {
        CycInt mm = w * w.conj();
        if (!mm.is_integer()) return std::nullopt;
        int64_t v = mm.coeffs()[0];
        if (v == 0) continue;
        if (level < 0) level = v;
        else if (level != v) return std::nullopt;
    }
    if (level < 0) return std::nullopt;
    int e = 0;
    while (level % p == 0) {
        level /= p;
        ++e;
    }
    if (level != 1 || e < m) return std::nullopt;
    return e - m;
}

bool restriction_is_bent(const FpFunction& f, const Subspace& W) {
    std::optional<int> s = restriction_plateau(f, W);
    return s.has_value() && *s == 0;
}

bool is_linear_structure_of_restriction(const FpFunction& f, const Subspace& W, FElem a) {
    const FieldCtx& F = *f.ctx;
    if (!W.contains(F, a)) return false;
    const int p = F.p();
    std::vector<FElem> els = W.enumerate(F);
    fp_t want = static_cast<fp_t>((f.at_elem(a) - f.at_elem(F.zero()) + p) % p);
    for (FElem x : els) {
        fp_t d = static_cast<fp_t>((f.at_elem(F.add(x, a)) - f.at_elem(x) + p) % p);
        if (d != want) return false;
    }
    return true;
}

} // namespace bentforge
