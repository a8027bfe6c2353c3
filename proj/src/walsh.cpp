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

#include "bentforge/walsh.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace bentforge {

FpFunction make_function(const FieldCtx& F, std::vector<fp_t> values) {
    if (values.size() != F.size()) fail(Errc::ParseError, "value table must have p^n entries");
    for (fp_t& v : values) v = ((v % F.p()) + F.p()) % F.p();
    return FpFunction{&F, std::move(values)};
}

FpFunction constant_function(const FieldCtx& F, fp_t c) {
    c = ((c % F.p()) + F.p()) % F.p();
    return FpFunction{&F, std::vector<fp_t>(F.size(), c)};
}

FpFunction from_trace_terms(const FieldCtx& F,
                            const std::vector<std::pair<FElem, uint64_t>>& terms) {
    std::vector<fp_t> vals(F.size());
    for (uint64_t i = 0; i < F.size(); ++i) {
        FElem x = F.element_at(static_cast<uint32_t>(i));
        FElem s = F.zero();
        for (const auto& [coef, e] : terms) s = F.add(s, F.mul(coef, F.pow(x, e)));
        vals[i] = F.trace(s);
    }
    return FpFunction{&F, std::move(vals)};
}

FpFunction add_pointwise(const FpFunction& f, const FpFunction& g) {
    if (f.ctx != g.ctx) fail(Errc::PreconditionViolated, "functions over different fields");
    std::vector<fp_t> vals(f.values.size());
    const int p = f.ctx->p();
    for (size_t i = 0; i < vals.size(); ++i) vals[i] = static_cast<fp_t>((f.values[i] + g.values[i]) % p);
    return FpFunction{f.ctx, std::move(vals)};
}

FpFunction scalar_mul_fn(fp_t s, const FpFunction& f) {
    const int p = f.ctx->p();
    s = ((s % p) + p) % p;
    std::vector<fp_t> vals(f.values.size());
    for (size_t i = 0; i < vals.size(); ++i) vals[i] = static_cast<fp_t>(f.values[i] * s % p);
    return FpFunction{f.ctx, std::move(vals)};
}

size_t WalshSpectrum::support_size() const {
    size_t n = 0;
    for (const CycInt& w : entries)
        if (!w.is_zero()) ++n;
    return n;
}

bool WalshSpectrum::parseval_ok() const {
    CycInt acc(ctx->p());
    for (const CycInt& w : entries) acc += w * w.conj();
    int64_t m = static_cast<int64_t>(domain.size());
    return acc == CycInt::integer(ctx->p(), m * m);
}

uint64_t naive_domain_guard(uint64_t default_guard) {
    if (const char* env = std::getenv("BENTFORGE_MAX_DOMAIN")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return default_guard;
}

WalshSpectrum walsh_naive(const FpFunction& f, const InnerProduct& ip) {
    const FieldCtx& F = *f.ctx;
    const int p = F.p();
    const uint64_t q = F.size();
    if (q > naive_domain_guard(4096)) fail(Errc::DomainTooLarge, "walsh_naive guarded to p^n <= 4096");

    WalshSpectrum out;
    out.ctx = &F;
    out.ip = ip;
    out.domain.reserve(q);
    out.entries.reserve(q);
    std::vector<int64_t> counts(static_cast<size_t>(p));
    for (uint32_t bi = 0; bi < q; ++bi) {
        FElem b = F.element_at(bi);
        FElem db = F.mul(ip.delta, b);
        std::fill(counts.begin(), counts.end(), 0);
        for (uint32_t xi = 0; xi < q; ++xi) {
            FElem x = F.element_at(xi);
            int e = f.values[xi] - F.trace(F.mul(db, x));
            counts[static_cast<size_t>(((e % p) + p) % p)] += 1;
        }
        out.domain.push_back(b);
        out.entries.push_back(CycInt::from_counts(p, counts));
    }
    return out;
}

std::vector<CycInt> cube_dft(int p, int axes, const std::vector<CycInt>& table) {
    // Flat layout on int64 buffers: cell i occupies [i*(p-1), (i+1)*(p-1)).
    const int w = p - 1;
    uint64_t q = 1;
    for (int i = 0; i < axes; ++i) q *= static_cast<uint64_t>(p);
    if (table.size() != q) fail(Errc::ParseError, "cube table size mismatch");

    std::vector<int64_t> buf(q * static_cast<uint64_t>(w));
    for (uint64_t i = 0; i < q; ++i) {
        const auto& c = table[i].coeffs();
        for (int j = 0; j < w; ++j) buf[i * w + j] = c[static_cast<size_t>(j)];
    }

    std::vector<int64_t> group(static_cast<size_t>(p) * w);
    std::vector<int64_t> folded(static_cast<size_t>(p));
    uint64_t stride = 1;
    for (int axis = 0; axis < axes; ++axis) {
        const uint64_t block = stride * static_cast<uint64_t>(p);
        for (uint64_t base = 0; base < q; base += block) {
            for (uint64_t off = 0; off < stride; ++off) {
                // gather the p cells along this axis
                for (int u = 0; u < p; ++u) {
                    uint64_t idx = base + off + static_cast<uint64_t>(u) * stride;
                    std::copy_n(&buf[idx * w], w, &group[static_cast<size_t>(u) * w]);
                }
                // out[wi] = sum_u in[u] * eps^{-wi*u}
                for (int wi = 0; wi < p; ++wi) {
                    std::fill(folded.begin(), folded.end(), 0);
                    for (int u = 0; u < p; ++u) {
                        int shift = ((-(wi * u)) % p + p) % p;
                        const int64_t* src = &group[static_cast<size_t>(u) * w];
                        for (int j = 0; j < w; ++j) {
                            size_t k = static_cast<size_t>((j + shift) % p);
                            int64_t r;
                            if (__builtin_add_overflow(folded[k], src[j], &r))
                                fail(Errc::CoeffOverflow, "cube_dft overflow");
                            folded[k] = r;
                        }
                    }
                    uint64_t idx = base + off + static_cast<uint64_t>(wi) * stride;
                    int64_t top = folded[static_cast<size_t>(p - 1)];
                    for (int j = 0; j < w; ++j) {
                        int64_t r;
                        if (__builtin_add_overflow(folded[static_cast<size_t>(j)], -top, &r))
                            fail(Errc::CoeffOverflow, "cube_dft overflow");
                        buf[idx * w + j] = r;
                    }
                }
            }
        }
        stride = block;
    }

    std::vector<CycInt> out;
    out.reserve(q);
    std::vector<int64_t> counts(static_cast<size_t>(p), 0);
    for (uint64_t i = 0; i < q; ++i) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int j = 0; j < w; ++j) counts[static_cast<size_t>(j)] = buf[i * w + j];
        out.push_back(CycInt::from_counts(p, counts));
    }
    return out;
}

namespace {

// Rows of the inverse Gram matrix give the dual basis coordinates.
std::vector<FElem> dual_basis(const FieldCtx& F, const InnerProduct& ip) {
    const int n = F.n(), p = F.p();
    // Gram M[i][j] = <g^i, g^j>
    std::vector<std::vector<fp_t>> M(static_cast<size_t>(n), std::vector<fp_t>(static_cast<size_t>(n)));
    std::vector<FElem> basis(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<fp_t> co(static_cast<size_t>(n), 0);
        co[static_cast<size_t>(i)] = 1;
        basis[static_cast<size_t>(i)] = F.from_coords(co);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M[static_cast<size_t>(i)][static_cast<size_t>(j)] = inner(F, ip, basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
    // invert M over F_p with Gauss-Jordan on [M | I]
    std::vector<std::vector<fp_t>> A(static_cast<size_t>(n), std::vector<fp_t>(static_cast<size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) A[static_cast<size_t>(i)][static_cast<size_t>(j)] = M[static_cast<size_t>(i)][static_cast<size_t>(j)];
        A[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
    }
    auto inv_scalar = [p](fp_t v) -> fp_t {
        v = ((v % p) + p) % p;
        for (fp_t i = 1; i < p; ++i)
            if (i * v % p == 1) return i;
        fail(Errc::PreconditionViolated, "degenerate inner product");
    };
    int r = 0;
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int i = r; i < n; ++i)
            if (A[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) { sel = i; break; }
        if (sel < 0) fail(Errc::PreconditionViolated, "degenerate inner product");
        std::swap(A[static_cast<size_t>(sel)], A[static_cast<size_t>(r)]);
        fp_t iv = inv_scalar(A[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        for (int j = 0; j < 2 * n; ++j)
            A[static_cast<size_t>(r)][static_cast<size_t>(j)] = static_cast<fp_t>(static_cast<int64_t>(A[static_cast<size_t>(r)][static_cast<size_t>(j)]) * iv % p);
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            fp_t f_ = A[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (!f_) continue;
            for (int j = 0; j < 2 * n; ++j) {
                int64_t v = A[static_cast<size_t>(i)][static_cast<size_t>(j)] - static_cast<int64_t>(f_) * A[static_cast<size_t>(r)][static_cast<size_t>(j)];
                A[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<fp_t>(((v % p) + p) % p);
            }
        }
        ++r;
    }
    // d_i = sum_j Minv[i][j] * g^j  satisfies <d_i, g^k> = delta_{ik}
    std::vector<FElem> dual(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        FElem d = F.zero();
        for (int j = 0; j < n; ++j)
            d = F.add(d, F.scalar_mul(A[static_cast<size_t>(i)][static_cast<size_t>(n + j)], basis[static_cast<size_t>(j)]));
        dual[static_cast<size_t>(i)] = d;
    }
    return dual;
}

} // namespace

WalshSpectrum walsh_fast(const FpFunction& f, const InnerProduct& ip) {
    const FieldCtx& F = *f.ctx;
    const int p = F.p(), n = F.n();
    const uint64_t q = F.size();

    // Table over the coordinate cube; the flat cube index is the element code.
    std::vector<CycInt> table(q, CycInt(p));
    for (uint64_t i = 0; i < q; ++i) {
        FElem x = F.element_at(static_cast<uint32_t>(i));
        table[x.code] = CycInt::eps_pow(p, f.values[i]);
    }
    std::vector<CycInt> cube = cube_dft(p, n, table);

    std::vector<FElem> dual = dual_basis(F, ip);
    WalshSpectrum out;
    out.ctx = &F;
    out.ip = ip;
    out.domain.resize(q);
    out.entries.resize(q, CycInt(p));
    for (uint64_t wcode = 0; wcode < q; ++wcode) {
        uint64_t rem = wcode;
        FElem b = F.zero();
        for (int i = 0; i < n; ++i) {
            fp_t wi = static_cast<fp_t>(rem % static_cast<uint64_t>(p));
            rem /= static_cast<uint64_t>(p);
            if (wi) b = F.add(b, F.scalar_mul(wi, dual[static_cast<size_t>(i)]));
        }
        uint32_t idx = F.index_of(b);
        out.domain[idx] = b;
        out.entries[idx] = cube[wcode];
    }
    return out;
}

WalshSpectrum walsh_on_subspace(const FpFunction& f, const Subspace& W, const InnerProduct& ip) {
    const FieldCtx& F = *f.ctx;
    const int p = F.p();
    if (F.size() > naive_domain_guard(1u << 15))
        fail(Errc::DomainTooLarge, "walsh_on_subspace guarded to p^n <= 2^15");

    WalshSpectrum out;
    out.ctx = &F;
    out.ip = ip;
    out.domain = W.enumerate(F);

    // Non-degeneracy of the restricted form: Gram matrix of the basis invertible.
    {
        const int m = W.dim();
        std::vector<std::vector<fp_t>> gram(static_cast<size_t>(m), std::vector<fp_t>(static_cast<size_t>(m)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                gram[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    inner(F, ip, W.basis()[static_cast<size_t>(i)], W.basis()[static_cast<size_t>(j)]);
        // rank via elimination
        int rank = 0;
        for (int c = 0; c < m; ++c) {
            int sel = -1;
            for (int i = rank; i < m; ++i)
                if (gram[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) { sel = i; break; }
            if (sel < 0) continue;
            std::swap(gram[static_cast<size_t>(sel)], gram[static_cast<size_t>(rank)]);
            for (int i = 0; i < m; ++i) {
                if (i == rank || gram[static_cast<size_t>(i)][static_cast<size_t>(c)] == 0) continue;
                fp_t num = gram[static_cast<size_t>(i)][static_cast<size_t>(c)];
                fp_t den = gram[static_cast<size_t>(rank)][static_cast<size_t>(c)];
                fp_t inv = 1;
                for (fp_t k = 1; k < p; ++k)
                    if (k * den % p == 1) { inv = k; break; }
                fp_t fct = static_cast<fp_t>(static_cast<int64_t>(num) * inv % p);
                for (int j = 0; j < m; ++j) {
                    int64_t v = gram[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                static_cast<int64_t>(fct) * gram[static_cast<size_t>(rank)][static_cast<size_t>(j)];
                    gram[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<fp_t>(((v % p) + p) % p);
                }
            }
            ++rank;
        }
        out.restricted_form_nondegenerate = (rank == m);
    }

    std::vector<int64_t> counts(static_cast<size_t>(p));
    out.entries.reserve(out.domain.size());
    for (FElem b : out.domain) {
        FElem db = F.mul(ip.delta, b);
        std::fill(counts.begin(), counts.end(), 0);
        for (FElem x : out.domain) {
            int e = f.at_elem(x) - F.trace(F.mul(db, x));
            counts[static_cast<size_t>(((e % p) + p) % p)] += 1;
        }
        out.entries.push_back(CycInt::from_counts(p, counts));
    }
    return out;
}

std::vector<std::pair<std::string, int>> spectrum_multiset(const WalshSpectrum& s) {
    const FieldCtx& F = *s.ctx;
    const int p = F.p(), n = F.n();
    CoeffNormalizer norm(p, n);
    struct Key {
        int normalized;  // 0 = yes (sorts first)
        int sign;
        int32_t eps_exp;
        std::vector<int64_t> raw_desc;
        bool operator<(const Key& o) const {
            if (normalized != o.normalized) return normalized < o.normalized;
            if (normalized == 0) {
                if (sign != o.sign) return sign < o.sign;
                return eps_exp < o.eps_exp;
            }
            return raw_desc < o.raw_desc;
        }
    };
    std::map<Key, std::pair<std::string, int>> tally;
    for (const CycInt& w : s.entries) {
        NormalizedCoeff nc = norm(w);
        Key k;
        if (nc.magnitude_ok) {
            k.normalized = 0;
            k.sign = nc.sign;
            k.eps_exp = nc.eps_exp;
        } else {
            k.normalized = 1;
            k.sign = 0;
            k.eps_exp = 0;
            for (int64_t c : w.coeffs()) k.raw_desc.push_back(-c);  // descending
        }
        auto it = tally.find(k);
        if (it == tally.end())
            tally.emplace(std::move(k), std::make_pair(render_value(w, p, n), 1));
        else
            it->second.second += 1;
    }
    std::vector<std::pair<std::string, int>> out;
    out.reserve(tally.size());
    for (auto& [k, v] : tally) out.push_back(std::move(v));
    return out;
}

} // namespace bentforge
