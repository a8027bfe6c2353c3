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

#include "bentforge/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace bentforge {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::MixedP: return "MixedP";
        case Errc::CoeffOverflow: return "CoeffOverflow";
        case Errc::DomainTooLarge: return "DomainTooLarge";
        case Errc::BadN: return "BadN";
        case Errc::DeltaNotFound: return "DeltaNotFound";
        case Errc::NoGammaCandidate: return "NoGammaCandidate";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::IngredientNotPartiallyBent: return "IngredientNotPartiallyBent";
        case Errc::WrongLinearSpace: return "WrongLinearSpace";
        case Errc::MergedNotBent: return "MergedNotBent";
        case Errc::ParseError: return "ParseError";
        case Errc::GoldenMismatch: return "GoldenMismatch";
        case Errc::RangeTooLarge: return "RangeTooLarge";
    }
    return "Unknown";
}

bool is_prime_u64(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

namespace {

int poly_deg(const std::vector<fp_t>& a, int p) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] % p != 0) return i;
    return -1;
}

std::vector<fp_t> poly_trim(std::vector<fp_t> a, int p) {
    a.resize(static_cast<size_t>(poly_deg(a, p) + 1));
    return a;
}

// a mod m over F_p, schoolbook
std::vector<fp_t> poly_mod(std::vector<fp_t> a, const std::vector<fp_t>& m, int p) {
    int dm = poly_deg(m, p);
    fp_t lead_inv = 1;
    {
        fp_t lead = ((m[static_cast<size_t>(dm)] % p) + p) % p;
        for (fp_t i = 1; i < p; ++i)
            if (i * lead % p == 1) { lead_inv = i; break; }
    }
    for (int d = poly_deg(a, p); d >= dm; d = poly_deg(a, p)) {
        fp_t c = static_cast<fp_t>(static_cast<int64_t>(a[static_cast<size_t>(d)]) * lead_inv % p);
        for (int i = 0; i <= dm; ++i) {
            int64_t v = a[static_cast<size_t>(d - dm + i)] - static_cast<int64_t>(c) * m[static_cast<size_t>(i)];
            a[static_cast<size_t>(d - dm + i)] = static_cast<fp_t>(((v % p) + p) % p);
        }
    }
    return poly_trim(std::move(a), p);
}

std::vector<fp_t> poly_mulmod(const std::vector<fp_t>& a, const std::vector<fp_t>& b,
                              const std::vector<fp_t>& m, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<fp_t> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<fp_t>((out[i + j] + static_cast<int64_t>(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(out), m, p);
}

std::vector<fp_t> poly_powmod(std::vector<fp_t> base, uint64_t e, const std::vector<fp_t>& m, int p) {
    std::vector<fp_t> acc{1};
    while (e) {
        if (e & 1) acc = poly_mulmod(acc, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

uint64_t upow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<uint64_t> prime_factors(uint64_t v) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

// Dense matrix over F_p, row major.  Only what the subspace machinery needs.
struct FpMat {
    int rows = 0, cols = 0, p = 2;
    std::vector<fp_t> a;

    FpMat(int r, int c, int prime) : rows(r), cols(c), p(prime), a(static_cast<size_t>(r) * c, 0) {}
    fp_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    fp_t get(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    fp_t inv_scalar(fp_t v) const {
        v = ((v % p) + p) % p;
        for (fp_t i = 1; i < p; ++i)
            if (i * v % p == 1) return i;
        fail(Errc::PreconditionViolated, "inverse of zero scalar");
    }

    // Reduced row echelon form in place; returns pivot column per pivot row.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int sel = -1;
            for (int i = r; i < rows; ++i)
                if (get(i, c) != 0) { sel = i; break; }
            if (sel < 0) continue;
            for (int j = 0; j < cols; ++j) std::swap(at(sel, j), at(r, j));
            fp_t iv = inv_scalar(get(r, c));
            for (int j = 0; j < cols; ++j)
                at(r, j) = static_cast<fp_t>(static_cast<int64_t>(at(r, j)) * iv % p);
            for (int i = 0; i < rows; ++i) {
                if (i == r || get(i, c) == 0) continue;
                fp_t f = get(i, c);
                for (int j = 0; j < cols; ++j) {
                    int64_t v = at(i, j) - static_cast<int64_t>(f) * get(r, j);
                    at(i, j) = static_cast<fp_t>(((v % p) + p) % p);
                }
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    // Basis of {x : M x = 0}, canonical order (free columns ascending).
    std::vector<std::vector<fp_t>> nullspace() {
        FpMat m = *this;
        std::vector<int> piv = m.rref();
        std::vector<bool> is_piv(static_cast<size_t>(cols), false);
        for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
        std::vector<std::vector<fp_t>> out;
        for (int fc = 0; fc < cols; ++fc) {
            if (is_piv[static_cast<size_t>(fc)]) continue;
            std::vector<fp_t> v(static_cast<size_t>(cols), 0);
            v[static_cast<size_t>(fc)] = 1;
            for (size_t r = 0; r < piv.size(); ++r) {
                fp_t coef = m.get(static_cast<int>(r), fc);
                v[static_cast<size_t>(piv[r])] = static_cast<fp_t>(((p - coef) % p));
            }
            out.push_back(std::move(v));
        }
        return out;
    }
};

} // namespace

FieldCtx FieldCtx::make(int p, int n, std::vector<fp_t> prim_poly) {
    if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p))) fail(Errc::NotPrime, "p is not prime");
    if (n < 1) fail(Errc::ParseError, "extension degree must be positive");
    if (static_cast<int>(prim_poly.size()) != n + 1)
        fail(Errc::ParseError, "prim_poly must have length n+1 (ascending coefficients)");
    for (fp_t& c : prim_poly) c = ((c % p) + p) % p;
    if (prim_poly[static_cast<size_t>(n)] != 1) fail(Errc::ParseError, "prim_poly must be monic");

    double qd = std::pow(static_cast<double>(p), n);
    if (qd > static_cast<double>(kSizeLimit)) fail(Errc::DomainTooLarge, "p^n exceeds 2^32");
    uint64_t q = upow(static_cast<uint64_t>(p), n);

    // Irreducibility: x^{p^n} = x mod f, and gcd(x^{p^{n/r}} - x, f) = 1 for prime r | n.
    std::vector<fp_t> x{0, 1};
    if (n == 1) {
        // linear polynomials are always irreducible
    } else {
        std::vector<fp_t> xq = x;
        for (int i = 0; i < n; ++i) xq = poly_powmod(xq, static_cast<uint64_t>(p), prim_poly, p);
        if (poly_trim(xq, p) != poly_trim(x, p)) fail(Errc::NotIrreducible, "prim_poly is reducible");
        for (uint64_t r : prime_factors(static_cast<uint64_t>(n))) {
            std::vector<fp_t> xm = x;
            for (uint64_t i = 0; i < static_cast<uint64_t>(n) / r; ++i)
                xm = poly_powmod(xm, static_cast<uint64_t>(p), prim_poly, p);
            // gcd(x^{p^{n/r}} - x, f) != 1 would expose a factor of degree dividing n/r
            std::vector<fp_t> diff = xm;
            diff.resize(std::max<size_t>(diff.size(), 2), 0);
            diff[1] = static_cast<fp_t>(((diff[1] - 1) % p + p) % p);
            std::vector<fp_t> gg = poly_gcd_mod_p(p, diff, prim_poly);
            if (poly_deg(gg, p) != 0) fail(Errc::NotIrreducible, "prim_poly has a small-degree factor");
        }
    }

    // Primitivity of g = x: g^{q-1} = 1 and g^{(q-1)/l} != 1 for every prime l | q-1.
    if (poly_trim(poly_powmod(x, q - 1, prim_poly, p), p) != std::vector<fp_t>{1})
        fail(Errc::NotPrimitive, "x is not a unit of full order modulo prim_poly");
    for (uint64_t l : prime_factors(q - 1)) {
        std::vector<fp_t> gp = poly_powmod(x, (q - 1) / l, prim_poly, p);
        if (poly_trim(gp, p) == std::vector<fp_t>{1})
            fail(Errc::NotPrimitive, "x is not a primitive element modulo prim_poly");
    }

    FieldCtx F;
    F.p_ = p;
    F.n_ = n;
    F.q_ = q;
    F.prim_ = std::move(prim_poly);
    F.has_tables_ = q <= kTableLimit;
    if (F.has_tables_) F.build_tables();
    return F;
}

void FieldCtx::build_tables() {
    const int p = p_;
    const int n = n_;
    exp_.resize(q_ - 1);
    log_.assign(q_, UINT32_MAX);
    std::vector<fp_t> cur(static_cast<size_t>(n), 0);
    cur[0] = 1;
    for (uint64_t k = 0; k < q_ - 1; ++k) {
        uint32_t code = 0;
        for (int i = n - 1; i >= 0; --i) code = code * static_cast<uint32_t>(p) + static_cast<uint32_t>(cur[static_cast<size_t>(i)]);
        exp_[k] = code;
        log_[code] = static_cast<uint32_t>(k);
        // multiply by x with reduction
        fp_t top = cur[static_cast<size_t>(n - 1)];
        for (int i = n - 1; i > 0; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        cur[0] = 0;
        if (top) {
            for (int i = 0; i < n; ++i) {
                int64_t v = cur[static_cast<size_t>(i)] - static_cast<int64_t>(top) * prim_[static_cast<size_t>(i)];
                cur[static_cast<size_t>(i)] = static_cast<fp_t>(((v % p) + p) % p);
            }
        }
    }
    trace_.resize(q_);
    // Tr is F_p-linear: tabulate on the basis, extend by coordinates.
    std::vector<fp_t> basis_tr(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        FElem bj = (j == 0) ? one() : FElem{exp_[static_cast<size_t>(j)]};
        FElem s = zero(), cur_e = bj;
        for (int i = 0; i < n; ++i) {
            s = add(s, cur_e);
            cur_e = pow(cur_e, static_cast<uint64_t>(p));
        }
        std::vector<fp_t> co = coords(s);
        for (size_t i = 1; i < co.size(); ++i)
            if (co[i] != 0) fail(Errc::PreconditionViolated, "trace not scalar");
        basis_tr[static_cast<size_t>(j)] = co[0];
    }
    for (uint64_t c = 0; c < q_; ++c) {
        uint64_t rem = c;
        int64_t t = 0;
        for (int i = 0; i < n; ++i) {
            t += static_cast<int64_t>(rem % static_cast<uint64_t>(p)) * basis_tr[static_cast<size_t>(i)];
            rem /= static_cast<uint64_t>(p);
        }
        trace_[c] = static_cast<uint8_t>(t % p);
    }
}

FElem FieldCtx::gen() const {
    if (n_ == 1) {
        // residue class of x reduces to the constant -prim[0]
        return scalar(static_cast<fp_t>(p_ - prim_[0] % p_));
    }
    return {static_cast<uint32_t>(p_)};
}

FElem FieldCtx::from_coords(const std::vector<fp_t>& coords_in) const {
    if (static_cast<int>(coords_in.size()) != n_) fail(Errc::ParseError, "coords length must equal n");
    uint32_t code = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        fp_t c = ((coords_in[static_cast<size_t>(i)] % p_) + p_) % p_;
        code = code * static_cast<uint32_t>(p_) + static_cast<uint32_t>(c);
    }
    return {code};
}

std::vector<fp_t> FieldCtx::coords(FElem a) const {
    std::vector<fp_t> out(static_cast<size_t>(n_));
    uint64_t rem = a.code;
    for (int i = 0; i < n_; ++i) {
        out[static_cast<size_t>(i)] = static_cast<fp_t>(rem % static_cast<uint64_t>(p_));
        rem /= static_cast<uint64_t>(p_);
    }
    return out;
}

FElem FieldCtx::from_log(uint64_t k) const {
    if (!has_tables_) fail(Errc::DomainTooLarge, "log form requires tables (p^n <= 2^20)");
    return {exp_[k % (q_ - 1)]};
}

std::optional<uint64_t> FieldCtx::log(FElem a) const {
    if (a.code == 0) return std::nullopt;
    if (!has_tables_) fail(Errc::DomainTooLarge, "log requires tables (p^n <= 2^20)");
    return log_[a.code];
}

FElem FieldCtx::add(FElem a, FElem b) const {
    if (p_ == 2) return {a.code ^ b.code};
    uint32_t out = 0, mul = 1;
    uint32_t ca = a.code, cb = b.code;
    for (int i = 0; i < n_; ++i) {
        uint32_t da = ca % static_cast<uint32_t>(p_), db = cb % static_cast<uint32_t>(p_);
        uint32_t s = da + db;
        if (s >= static_cast<uint32_t>(p_)) s -= static_cast<uint32_t>(p_);
        out += s * mul;
        mul *= static_cast<uint32_t>(p_);
        ca /= static_cast<uint32_t>(p_);
        cb /= static_cast<uint32_t>(p_);
    }
    return {out};
}

FElem FieldCtx::neg(FElem a) const {
    if (p_ == 2) return a;
    uint32_t out = 0, mul = 1, ca = a.code;
    for (int i = 0; i < n_; ++i) {
        uint32_t d = ca % static_cast<uint32_t>(p_);
        out += (d ? static_cast<uint32_t>(p_) - d : 0) * mul;
        mul *= static_cast<uint32_t>(p_);
        ca /= static_cast<uint32_t>(p_);
    }
    return {out};
}

FElem FieldCtx::sub(FElem a, FElem b) const { return add(a, neg(b)); }

std::vector<fp_t> FieldCtx::poly_mulmod(const std::vector<fp_t>& a, const std::vector<fp_t>& b) const {
    return bentforge::poly_mulmod(a, b, prim_, p_);
}

FElem FieldCtx::mul_schoolbook(FElem a, FElem b) const {
    std::vector<fp_t> pa = coords(a), pb = coords(b);
    std::vector<fp_t> pc = poly_mulmod(pa, pb);
    pc.resize(static_cast<size_t>(n_), 0);
    return from_coords(pc);
}

FElem FieldCtx::mul(FElem a, FElem b) const {
    if (a.code == 0 || b.code == 0) return zero();
    if (has_tables_) {
        uint64_t k = log_[a.code] + static_cast<uint64_t>(log_[b.code]);
        if (k >= q_ - 1) k -= q_ - 1;
        return {exp_[k]};
    }
    return mul_schoolbook(a, b);
}

FElem FieldCtx::inv(FElem a) const {
    if (a.code == 0) fail(Errc::PreconditionViolated, "inverse of zero");
    if (has_tables_) {
        uint64_t k = (q_ - 1 - log_[a.code]) % (q_ - 1);
        return {exp_[k]};
    }
    return pow(a, q_ - 2);
}

FElem FieldCtx::pow(FElem a, uint64_t e) const {
    if (a.code == 0) return e == 0 ? one() : zero();
    if (has_tables_) {
        unsigned __int128 k = static_cast<unsigned __int128>(log_[a.code]) * e;
        return {exp_[static_cast<uint64_t>(k % (q_ - 1))]};
    }
    FElem acc = one(), base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FElem FieldCtx::scalar_mul(fp_t s, FElem a) const {
    s = ((s % p_) + p_) % p_;
    if (s == 0) return zero();
    if (p_ == 2) return a;
    uint32_t out = 0, mul_ = 1, ca = a.code;
    for (int i = 0; i < n_; ++i) {
        uint32_t d = ca % static_cast<uint32_t>(p_);
        out += static_cast<uint32_t>((static_cast<uint64_t>(d) * static_cast<uint64_t>(s)) % static_cast<uint64_t>(p_)) * mul_;
        mul_ *= static_cast<uint32_t>(p_);
        ca /= static_cast<uint32_t>(p_);
    }
    return {out};
}

fp_t FieldCtx::trace(FElem a) const {
    if (has_tables_) return trace_[a.code];
    FElem s = zero(), cur = a;
    for (int i = 0; i < n_; ++i) {
        s = add(s, cur);
        cur = pow(cur, static_cast<uint64_t>(p_));
    }
    std::vector<fp_t> co = coords(s);
    return co[0];
}

uint32_t FieldCtx::index_of(FElem a) const {
    if (!has_tables_) return a.code;
    return a.code == 0 ? 0 : 1 + log_[a.code];
}

FElem FieldCtx::element_at(uint32_t idx) const {
    if (!has_tables_) return {idx};
    return idx == 0 ? zero() : FElem{exp_[idx - 1]};
}

std::optional<FieldCtx> FieldCtx::bundled(int p, int n) {
    struct Entry { int p, n; std::vector<fp_t> prim; };
    static const std::vector<Entry> table = {
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 1, 1, 0, 1}},
        {2, 8, {1, 0, 0, 0, 1, 1, 1, 0, 1}},
        {3, 2, {2, 1, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 0, 0, 2, 1}},
        {3, 6, {2, 0, 0, 0, 0, 1, 1}},
        {3, 8, {2, 0, 0, 0, 0, 1, 0, 0, 1}},
        {3, 9, {1, 0, 0, 0, 0, 0, 2, 1, 0, 1}},
        {5, 2, {2, 1, 1}},
        {5, 3, {2, 0, 1, 1}},
        {5, 4, {2, 0, 2, 1, 1}},
        {5, 6, {2, 0, 0, 0, 0, 1, 1}},
        {7, 3, {2, 1, 1, 1}},
    };
    for (const Entry& e : table)
        if (e.p == p && e.n == n) return FieldCtx::make(e.p, e.n, e.prim);
    return std::nullopt;
}

const FieldCtx& FieldCtx::named(std::string_view name) {
    static const std::map<std::string, FieldCtx, std::less<>> registry = [] {
        std::map<std::string, FieldCtx, std::less<>> m;
        m.emplace("gf64", FieldCtx::make(2, 6, {1, 1, 0, 1, 1, 0, 1}));
        m.emplace("gf81", FieldCtx::make(3, 4, {2, 0, 0, 2, 1}));
        m.emplace("gf27", FieldCtx::make(3, 3, {1, 2, 0, 1}));
        return m;
    }();
    auto it = registry.find(name);
    if (it == registry.end()) fail(Errc::ParseError, "unknown field name: " + std::string(name));
    return it->second;
}

fp_t inner(const FieldCtx& F, const InnerProduct& ip, FElem u, FElem v) {
    return F.trace(F.mul(ip.delta, F.mul(u, v)));
}

Subspace Subspace::span(const FieldCtx& F, const std::vector<FElem>& gens) {
    const int n = F.n(), p = F.p();
    std::vector<FElem> nz;
    for (FElem g : gens)
        if (g.code != 0) nz.push_back(g);
    Subspace out;
    if (nz.empty()) return out;
    FpMat m(static_cast<int>(nz.size()), n, p);
    for (size_t r = 0; r < nz.size(); ++r) {
        std::vector<fp_t> co = F.coords(nz[r]);
        for (int c = 0; c < n; ++c) m.at(static_cast<int>(r), c) = co[static_cast<size_t>(c)];
    }
    std::vector<int> piv = m.rref();
    for (size_t r = 0; r < piv.size(); ++r) {
        std::vector<fp_t> co(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c) co[static_cast<size_t>(c)] = m.get(static_cast<int>(r), c);
        out.basis_.push_back(F.from_coords(co));
    }
    return out;
}

Subspace Subspace::zero_space(const FieldCtx&) { return Subspace(); }

Subspace Subspace::whole(const FieldCtx& F) {
    std::vector<FElem> gens;
    for (int j = 0; j < F.n(); ++j) {
        std::vector<fp_t> co(static_cast<size_t>(F.n()), 0);
        co[static_cast<size_t>(j)] = 1;
        gens.push_back(F.from_coords(co));
    }
    return span(F, gens);
}

bool Subspace::contains(const FieldCtx& F, FElem a) const {
    // Reduce against the RREF basis.
    std::vector<fp_t> co = F.coords(a);
    const int p = F.p();
    for (const FElem& b : basis_) {
        std::vector<fp_t> bc = F.coords(b);
        int piv = -1;
        for (size_t i = 0; i < bc.size(); ++i)
            if (bc[i] != 0) { piv = static_cast<int>(i); break; }
        if (piv < 0) continue;
        fp_t f = co[static_cast<size_t>(piv)];
        if (f == 0) continue;
        for (size_t i = 0; i < co.size(); ++i)
            co[i] = static_cast<fp_t>((((co[i] - static_cast<int64_t>(f) * bc[i]) % p) + p) % p);
    }
    return std::all_of(co.begin(), co.end(), [](fp_t v) { return v == 0; });
}

std::vector<FElem> Subspace::enumerate(const FieldCtx& F) const {
    const int p = F.p();
    const int m = dim();
    uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= static_cast<uint64_t>(p);
    std::vector<FElem> out;
    out.reserve(count);
    for (uint64_t t = 0; t < count; ++t) {
        uint64_t rem = t;
        FElem e = F.zero();
        for (int i = 0; i < m; ++i) {
            fp_t c = static_cast<fp_t>(rem % static_cast<uint64_t>(p));
            rem /= static_cast<uint64_t>(p);
            if (c) e = F.add(e, F.scalar_mul(c, basis_[static_cast<size_t>(i)]));
        }
        out.push_back(e);
    }
    return out;
}

Subspace Subspace::sum(const FieldCtx& F, const Subspace& other) const {
    std::vector<FElem> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return span(F, gens);
}

Subspace kernel_of_linearized(const FieldCtx& F,
                              const std::vector<std::pair<FElem, int>>& terms) {
    const int n = F.n(), p = F.p();
    FpMat m(n, n, p);
    for (int j = 0; j < n; ++j) {
        std::vector<fp_t> co(static_cast<size_t>(n), 0);
        co[static_cast<size_t>(j)] = 1;
        FElem bj = F.from_coords(co);
        FElem img = F.zero();
        for (const auto& [ai, ei] : terms) {
            uint64_t pe = 1;
            for (int k = 0; k < ei; ++k) pe *= static_cast<uint64_t>(p);
            img = F.add(img, F.mul(ai, F.pow(bj, pe)));
        }
        std::vector<fp_t> ic = F.coords(img);
        for (int i = 0; i < n; ++i) m.at(i, j) = ic[static_cast<size_t>(i)];
    }
    std::vector<FElem> gens;
    for (const auto& v : m.nullspace()) gens.push_back(F.from_coords(v));
    return Subspace::span(F, gens);
}

Subspace orthogonal_complement(const FieldCtx& F, const InnerProduct& ip, const Subspace& sp) {
    const int n = F.n(), p = F.p();
    if (sp.dim() == 0) return Subspace::whole(F);
    FpMat m(sp.dim(), n, p);
    for (int r = 0; r < sp.dim(); ++r) {
        FElem s = sp.basis()[static_cast<size_t>(r)];
        for (int j = 0; j < n; ++j) {
            std::vector<fp_t> co(static_cast<size_t>(n), 0);
            co[static_cast<size_t>(j)] = 1;
            m.at(r, j) = inner(F, ip, s, F.from_coords(co));
        }
    }
    std::vector<FElem> gens;
    for (const auto& v : m.nullspace()) gens.push_back(F.from_coords(v));
    return Subspace::span(F, gens);
}

Subspace complement_of(const FieldCtx& F, const Subspace& space) {
    const int n = F.n();
    std::vector<FElem> cur = space.basis();
    std::vector<FElem> comp;
    Subspace acc = space;
    for (int j = 0; j < n && acc.dim() < n; ++j) {
        std::vector<fp_t> co(static_cast<size_t>(n), 0);
        co[static_cast<size_t>(j)] = 1;
        FElem cand = F.from_coords(co);
        if (!acc.contains(F, cand)) {
            comp.push_back(cand);
            cur.push_back(cand);
            acc = Subspace::span(F, cur);
        }
    }
    return Subspace::span(F, comp);
}

std::vector<fp_t> poly_gcd_mod_p(int p, std::vector<fp_t> A, std::vector<fp_t> B) {
    auto norm = [p](std::vector<fp_t>& v) {
        for (fp_t& c : v) c = ((c % p) + p) % p;
    };
    norm(A);
    norm(B);
    if (poly_deg(A, p) < 0 && poly_deg(B, p) < 0)
        fail(Errc::PreconditionViolated, "gcd(0,0) undefined");
    while (poly_deg(B, p) >= 0) {
        A = poly_mod(std::move(A), B, p);
        std::swap(A, B);
    }
    A = poly_trim(std::move(A), p);
    // make monic
    fp_t lead = A.back();
    fp_t inv = 1;
    for (fp_t i = 1; i < p; ++i)
        if (i * lead % p == 1) { inv = i; break; }
    for (fp_t& c : A) c = static_cast<fp_t>(static_cast<int64_t>(c) * inv % p);
    return A;
}

bool is_square_mod_p(int p, fp_t a) {
    if (p == 2) fail(Errc::PreconditionViolated, "is_square_mod_p requires odd p");
    a = ((a % p) + p) % p;
    if (a == 0) fail(Errc::PreconditionViolated, "is_square_mod_p requires nonzero a");
    int64_t r = 1, base = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1;
}

} // namespace bentforge
