// Copyright 2026 The gamepoly authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "modpoly.hpp"

#include <algorithm>
#include <cassert>

namespace gamepoly {

namespace {

using coeff = modpoly::coeff;

coeff mulmod(coeff a, coeff b, coeff p) {
    return static_cast<coeff>((static_cast<unsigned __int128>(a) * b) % p);
}

coeff addmod(coeff a, coeff b, coeff p) {
    coeff s = a + b;
    return s >= p ? s - p : s;
}

coeff submod(coeff a, coeff b, coeff p) {
    return a >= b ? a - b : a + p - b;
}

coeff powmod_scalar(coeff base, coeff e, coeff p) {
    coeff acc = 1 % p;
    while (e) {
        if (e & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return acc;
}

/// Modular inverse by Fermat (p prime).
coeff invmod(coeff a, coeff p) {
    return powmod_scalar(a % p, p - 2, p);
}

void strip(std::vector<coeff>& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

}  // namespace

modpoly::modpoly(std::vector<coeff> coeffs, coeff p) : coeffs_(std::move(coeffs)), p_(p) {
    for (coeff& c : coeffs_)
        c %= p_;
    strip(coeffs_);
}

modpoly modpoly::from_int_poly(const int_poly& f, coeff p) {
    std::vector<coeff> out(f.coefficients().size());
    mpz_class m(static_cast<unsigned long>(p)), r;
    for (std::size_t i = 0; i < out.size(); ++i) {
        mpz_mod(r.get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());  // nonnegative remainder
        out[i] = r.get_ui();
    }
    return modpoly(std::move(out), p);
}

modpoly modpoly::constant(coeff value, coeff p) {
    return modpoly(std::vector<coeff>{value}, p);
}

modpoly modpoly::x(coeff p) {
    return modpoly(std::vector<coeff>{0, 1}, p);
}

modpoly modpoly::monic() const {
    assert(!is_zero());
    if (leading() == 1) return *this;
    coeff inv = invmod(leading(), p_);
    std::vector<coeff> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = mulmod(coeffs_[i], inv, p_);
    return modpoly(std::move(out), p_);
}

modpoly operator+(const modpoly& a, const modpoly& b) {
    const coeff p = a.p_ ? a.p_ : b.p_;
    std::vector<coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        coeff av = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
        coeff bv = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
        out[i] = addmod(av, bv, p);
    }
    return modpoly(std::move(out), p);
}

modpoly operator-(const modpoly& a, const modpoly& b) {
    const coeff p = a.p_ ? a.p_ : b.p_;
    std::vector<coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        coeff av = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
        coeff bv = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
        out[i] = submod(av, bv, p);
    }
    return modpoly(std::move(out), p);
}

modpoly operator*(const modpoly& a, const modpoly& b) {
    if (a.is_zero() || b.is_zero()) return modpoly({}, a.p_ ? a.p_ : b.p_);
    const coeff p = a.p_;
    std::vector<coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = addmod(out[i + j], mulmod(a.coeffs_[i], b.coeffs_[j], p), p);
    }
    return modpoly(std::move(out), p);
}

modpoly modpoly::derivative() const {
    if (coeffs_.size() <= 1) return modpoly({}, p_);
    std::vector<coeff> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = mulmod(coeffs_[i], static_cast<coeff>(i % p_), p_);
    return modpoly(std::move(out), p_);
}

std::pair<modpoly, modpoly> mod_divmod(const modpoly& a, const modpoly& d) {
    assert(!d.is_zero());
    const coeff p = d.modulus();
    if (a.is_zero() || a.degree() < d.degree())
        return {modpoly({}, p), a};

    std::vector<coeff> rem = a.coefficients();
    std::vector<coeff> quot(a.degree() - d.degree() + 1, 0);
    const coeff lead_inv = invmod(d.leading(), p);
    for (int k = a.degree() - d.degree(); k >= 0; --k) {
        coeff c = mulmod(rem[k + d.degree()], lead_inv, p);
        if (c == 0) continue;
        quot[k] = c;
        for (int i = 0; i <= d.degree(); ++i)
            rem[k + i] = submod(rem[k + i], mulmod(c, d.coefficients()[i], p), p);
    }
    return {modpoly(std::move(quot), p), modpoly(std::move(rem), p)};
}

modpoly mod_gcd(const modpoly& a, const modpoly& b) {
    modpoly x = a, y = b;
    while (!y.is_zero()) {
        modpoly r = mod_divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

modpoly mod_powmod(const modpoly& base, const mpz_class& e, const modpoly& f) {
    modpoly acc = modpoly::constant(1, f.modulus());
    modpoly b = mod_divmod(base, f).second;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (std::size_t i = bits; i-- > 0;) {
        acc = mod_divmod(acc * acc, f).second;
        if (mpz_tstbit(e.get_mpz_t(), i))
            acc = mod_divmod(acc * b, f).second;
    }
    return acc;
}

namespace {

/// Distinct-degree decomposition of a monic squarefree f: list of
/// (product-of-irreducibles, common degree) pairs in increasing degree.
std::vector<std::pair<modpoly, unsigned>> distinct_degree(const modpoly& f) {
    std::vector<std::pair<modpoly, unsigned>> parts;
    const coeff p = f.modulus();
    modpoly v = f;
    modpoly h = modpoly::x(p);
    unsigned d = 0;
    while (v.degree() > 0) {
        ++d;
        if (2 * d > static_cast<unsigned>(v.degree())) {
            parts.emplace_back(v, static_cast<unsigned>(v.degree()));
            break;
        }
        h = mod_powmod(h, mpz_class(static_cast<unsigned long>(p)), v);
        modpoly g = mod_gcd(h - modpoly::x(p), v);
        if (g.degree() > 0) {
            parts.emplace_back(g, d);
            v = mod_divmod(v, g).first;
            h = mod_divmod(h, v).second;
        }
    }
    return parts;
}

/// Cantor-Zassenhaus equal-degree splitting: g is a product of distinct
/// monic irreducibles, all of degree d.
void equal_degree_split(const modpoly& g, unsigned d, std::mt19937_64& rng,
                        std::vector<modpoly>& out) {
    if (static_cast<unsigned>(g.degree()) == d) {
        out.push_back(g);
        return;
    }
    const coeff p = g.modulus();
    // exponent (p^d - 1) / 2; p is odd
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), d);
    e = (e - 1) / 2;

    std::uniform_int_distribution<coeff> dist(0, p - 1);
    for (;;) {
        std::vector<coeff> rc(static_cast<std::size_t>(g.degree()), 0);
        for (coeff& c : rc)
            c = dist(rng);
        modpoly a(std::move(rc), p);
        if (a.degree() < 1) continue;

        modpoly c1 = mod_gcd(a, g);
        if (c1.degree() > 0 && c1.degree() < g.degree()) {
            equal_degree_split(c1, d, rng, out);
            equal_degree_split(mod_divmod(g, c1).first, d, rng, out);
            return;
        }
        modpoly b = mod_powmod(a, e, g) - modpoly::constant(1, p);
        modpoly c2 = mod_gcd(b, g);
        if (c2.degree() > 0 && c2.degree() < g.degree()) {
            equal_degree_split(c2, d, rng, out);
            equal_degree_split(mod_divmod(g, c2).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

unsigned mod_count_irreducible_factors(const modpoly& f) {
    unsigned count = 0;
    for (const auto& [part, d] : distinct_degree(f))
        count += static_cast<unsigned>(part.degree()) / d;
    return count;
}

std::vector<modpoly> mod_factor_squarefree(const modpoly& f, std::mt19937_64& rng) {
    std::vector<modpoly> out;
    for (const auto& [part, d] : distinct_degree(f))
        equal_degree_split(part, d, rng, out);
    std::sort(out.begin(), out.end(), [](const modpoly& a, const modpoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coefficients() < b.coefficients();
    });
    return out;
}

}  // namespace gamepoly
