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

#include "bentforge/cyclotomic.hpp"

#include <algorithm>
#include <cmath>

namespace bentforge {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(Errc::CoeffOverflow, "cyclotomic coefficient overflow");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Errc::CoeffOverflow, "cyclotomic coefficient overflow");
    return r;
}

} // namespace

CycInt::CycInt(int p) : p_(p), c_(static_cast<size_t>(p - 1), 0) {
    if (p < 2) fail(Errc::ParseError, "p must be a prime >= 2");
}

CycInt CycInt::integer(int p, int64_t v) {
    CycInt out(p);
    out.c_[0] = v;
    return out;
}

CycInt CycInt::eps_pow(int p, int64_t k) {
    CycInt out(p);
    int64_t r = ((k % p) + p) % p;
    if (r == p - 1) {
        for (auto& c : out.c_) c = -1;
    } else {
        out.c_[static_cast<size_t>(r)] = 1;
    }
    return out;
}

CycInt CycInt::from_counts(int p, const std::vector<int64_t>& counts) {
    CycInt out(p);
    int64_t top = counts[static_cast<size_t>(p - 1)];
    for (int j = 0; j < p - 1; ++j)
        out.c_[static_cast<size_t>(j)] = checked_add(counts[static_cast<size_t>(j)], -top);
    return out;
}

bool CycInt::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int64_t v) { return v == 0; });
}

bool CycInt::is_integer() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

void CycInt::check_same(const CycInt& o) const {
    if (p_ != o.p_) fail(Errc::MixedP, "cyclotomic operands over different primes");
}

CycInt CycInt::operator+(const CycInt& o) const {
    check_same(o);
    CycInt out(p_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = checked_add(c_[i], o.c_[i]);
    return out;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
    check_same(o);
    CycInt out(p_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = checked_add(c_[i], -o.c_[i]);
    return out;
}

CycInt CycInt::operator-() const {
    CycInt out(p_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

CycInt CycInt::operator*(const CycInt& o) const {
    check_same(o);
    std::vector<int64_t> counts(static_cast<size_t>(p_), 0);
    for (int i = 0; i < p_ - 1; ++i) {
        if (c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < p_ - 1; ++j) {
            if (o.c_[static_cast<size_t>(j)] == 0) continue;
            size_t k = static_cast<size_t>((i + j) % p_);
            counts[k] = checked_add(counts[k], checked_mul(c_[static_cast<size_t>(i)], o.c_[static_cast<size_t>(j)]));
        }
    }
    return from_counts(p_, counts);
}

CycInt CycInt::conj() const {
    std::vector<int64_t> counts(static_cast<size_t>(p_), 0);
    for (int j = 0; j < p_ - 1; ++j) {
        size_t k = static_cast<size_t>(((p_ - j) % p_));
        counts[k] = checked_add(counts[k], c_[static_cast<size_t>(j)]);
    }
    return from_counts(p_, counts);
}

CycInt CycInt::pow(unsigned e) const {
    CycInt acc = CycInt::integer(p_, 1), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::complex<double> CycInt::embed() const {
    std::complex<double> out = 0.0;
    const double twopi = 2.0 * 3.14159265358979323846;
    for (int j = 0; j < p_ - 1; ++j) {
        double arg = twopi * j / p_;
        out += static_cast<double>(c_[static_cast<size_t>(j)]) * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return out;
}

CycInt gauss_sum(int p) {
    if (p == 2) fail(Errc::PreconditionViolated, "gauss_sum requires odd p");
    std::vector<int64_t> counts(static_cast<size_t>(p), 0);
    for (int64_t c = 0; c < p; ++c) counts[static_cast<size_t>(c * c % p)] += 1;
    return CycInt::from_counts(p, counts);
}

Unit unit_mul(Unit a, Unit b) {
    return static_cast<Unit>((static_cast<int>(a) + static_cast<int>(b)) % 4);
}

const char* unit_str(Unit u) {
    switch (u) {
        case Unit::PlusOne: return "+1";
        case Unit::PlusI: return "+i";
        case Unit::MinusOne: return "-1";
        case Unit::MinusI: return "-i";
    }
    return "?";
}

Unit gauss_unit(int p, int n) {
    if (p % 4 == 1) return Unit::PlusOne;
    return static_cast<Unit>(n % 4);  // i^n
}

CoeffNormalizer::CoeffNormalizer(int p, int m) : p_(p), m_(m), sign_flip_(1), conj_g_m_(2) {
    if (p != 2) {
        conj_g_m_ = gauss_sum(p).conj().pow(static_cast<unsigned>(m));
        // The pattern match recovers sigma_G with w*conj(G)^m = sigma_G * p^m * eps^t;
        // the case-split sign of w = sign*J*p^{m/2}*eps^t differs from sigma_G by
        // the ratio of the classical Gauss unit to J.
        if (p % 4 == 3 && (m % 4 == 2 || m % 4 == 3)) sign_flip_ = -1;
        int64_t v = 1;
        for (int i = 0; i < m; ++i) v = checked_mul(v, p);
        p_m_ = v;
    } else {
        if (m % 2 == 0) {
            p_m_ = 1;
            for (int i = 0; i < m / 2; ++i) p_m_ = checked_mul(p_m_, 2);
        }
    }
}

NormalizedCoeff CoeffNormalizer::operator()(const CycInt& w) const {
    if (w.p() != p_) fail(Errc::MixedP, "normalizer prime mismatch");
    NormalizedCoeff out;
    if (p_ == 2) {
        if (m_ % 2 != 0) return out;  // +-2^{m/2} is irrational
        int64_t c = w.coeffs()[0];
        if (c == p_m_ || c == -p_m_) {
            out.magnitude_ok = true;
            out.sign = c > 0 ? 1 : -1;
            out.eps_exp = 0;
        }
        return out;
    }
    CycInt U = w * conj_g_m_;
    for (int32_t t = 0; t < p_; ++t) {
        for (int sg : {1, -1}) {
            CycInt cand = CycInt::eps_pow(p_, t) * CycInt::integer(p_, sg * p_m_);
            if (U == cand) {
                out.magnitude_ok = true;
                out.sign = sg * sign_flip_;
                out.eps_exp = t;
                return out;
            }
        }
    }
    return out;
}

NormalizedCoeff normalize_coeff(const CycInt& w, int p, int n) {
    return CoeffNormalizer(p, n)(w);
}

std::string render_value(const CycInt& w, int p, int n) {
    if (p == 2) {
        return std::to_string(w.coeffs()[0]);
    }
    NormalizedCoeff nc = normalize_coeff(w, p, n);
    if (nc.magnitude_ok) {
        bool imag = (p % 4 == 3 && n % 2 == 1);
        std::string s = nc.sign < 0 ? "-" : "";
        if (n % 2 == 0) {
            int64_t mag = 1;
            for (int i = 0; i < n / 2; ++i) mag *= p;
            s += std::to_string(mag);
        } else {
            s += std::to_string(p) + "^{" + std::to_string(n) + "/2}";
        }
        if (imag) s += "*i";
        if (nc.eps_exp) s += "*eps^" + std::to_string(nc.eps_exp);
        return s;
    }
    // raw coefficient polynomial in eps
    std::string s;
    for (int j = 0; j < p - 1; ++j) {
        int64_t c = w.coeffs()[static_cast<size_t>(j)];
        if (c == 0) continue;
        std::string term;
        if (j == 0) {
            term = std::to_string(c);
        } else {
            if (c == 1) term = "";
            else if (c == -1) term = "-";
            else term = std::to_string(c) + "*";
            term += "eps^" + std::to_string(j);
        }
        if (!s.empty() && term[0] != '-') s += "+";
        s += term;
    }
    return s.empty() ? "0" : s;
}

} // namespace bentforge
