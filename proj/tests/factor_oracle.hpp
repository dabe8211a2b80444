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

/// Independent brute-force factorizer over Q for integer polynomials of
/// degree <= 4.  Shares no code with the production engine: linear factors
/// come from the rational root theorem, and a root-free quartic is split into
/// two integer quadratics (if possible) by enumerating divisor pairs of the
/// leading and constant coefficients and solving a 2x2 linear system for the
/// middle coefficients.  Root-free quadratics and cubics are irreducible over
/// Q outright.  Arithmetic is plain long long; for the coefficient boxes the
/// suites use, every intermediate is Mignotte-bounded far below overflow.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "factorize.hpp"
#include "poly.hpp"

namespace gamepoly::testing {

namespace oracle_detail {

using ll = long long;

/// gmpxx has no long long constructors; go through long (64-bit here).
inline mpz_class wide(ll v) { return mpz_class(static_cast<long>(v)); }

/// Trims high zeros; a vector of size 0 means the zero polynomial.
inline std::vector<ll> trimmed(std::vector<ll> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

/// Exact division of f by d (both ascending, d nonzero with exact quotient
/// guaranteed by the caller).  Classic descending long division.
inline std::vector<ll> divide_exact(const std::vector<ll>& f, const std::vector<ll>& d) {
    const std::size_t n = f.size() - 1;
    const std::size_t m = d.size() - 1;
    std::vector<ll> rem = f;
    std::vector<ll> quot(n - m + 1, 0);
    for (std::size_t i = n - m + 1; i-- > 0;) {
        ll t = rem[i + m] / d[m];
        quot[i] = t;
        for (std::size_t j = 0; j <= m; ++j) rem[i + j] -= t * d[j];
    }
    for (ll r : rem)
        if (r != 0) throw std::logic_error("oracle: division was not exact");
    return quot;
}

/// f(nm/dv) == 0, tested exactly as sum c_i nm^i dv^(n-i) == 0.
inline bool has_root(const std::vector<ll>& f, ll nm, ll dv) {
    const std::size_t n = f.size() - 1;
    ll sum = 0;
    ll nm_pow = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        ll dv_pow = 1;
        for (std::size_t j = 0; j < n - i; ++j) dv_pow *= dv;
        sum += f[i] * nm_pow * dv_pow;
        nm_pow *= nm;
    }
    return sum == 0;
}

inline std::vector<ll> positive_divisors(ll v) {
    v = std::abs(v);
    std::vector<ll> out;
    for (ll t = 1; t <= v; ++t)
        if (v % t == 0) out.push_back(t);
    return out;
}

inline rational_poly monic_of(const std::vector<ll>& f) {
    std::vector<mpq_class> coeffs;
    coeffs.reserve(f.size());
    const ll lead = f.back();
    for (ll c : f) {
        mpq_class value(wide(c), wide(lead));
        value.canonicalize();
        coeffs.push_back(value);
    }
    return rational_poly(std::move(coeffs));
}

/// Tries to split a primitive, positive-lc, root-free quartic into two
/// integer quadratics.  Returns true and fills q1/q2 on success.
inline bool split_quartic(const std::vector<ll>& f, std::vector<ll>& q1, std::vector<ll>& q2) {
    const ll A = f[4], B = f[3], C = f[2], D = f[1], E = f[0];
    double norm = 0;
    for (ll c : f) norm += double(c) * double(c);
    const ll bound = ll(2.0 * std::sqrt(norm)) + 1;  // Landau-Mignotte for a quadratic factor

    for (ll a : positive_divisors(A)) {
        const ll d = A / a;
        for (ll ct : positive_divisors(E)) {
            for (ll c : {ct, -ct}) {
                const ll g = E / c;
                // (a x^2 + b x + c)(d x^2 + e x + g): x^3 gives d*b + a*e = B,
                // x^1 gives g*b + c*e = D; x^2 = a*g + b*e + c*d is the check.
                const ll det = d * c - a * g;
                if (det != 0) {
                    const ll num_b = B * c - a * D;
                    const ll num_e = d * D - g * B;
                    if (num_b % det != 0 || num_e % det != 0) continue;
                    const ll b = num_b / det;
                    const ll e = num_e / det;
                    if (a * g + b * e + c * d != C) continue;
                    q1 = {c, b, a};
                    q2 = {g, e, d};
                    return true;
                }
                for (ll b = -bound; b <= bound; ++b) {
                    const ll rest = B - d * b;
                    if (rest % a != 0) continue;
                    const ll e = rest / a;
                    if (g * b + c * e != D) continue;
                    if (a * g + b * e + c * d != C) continue;
                    q1 = {c, b, a};
                    q2 = {g, e, d};
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace oracle_detail

/// Same shape and canonical order as factor_over_q: unit is the leading
/// coefficient, factors are monic irreducible with multiplicity, sorted by
/// ascending degree then ascending coefficient sequence.
inline poly_factorization oracle_factor(const std::vector<long long>& ascending) {
    using namespace oracle_detail;

    std::vector<ll> f = trimmed(ascending);
    if (f.empty()) throw std::logic_error("oracle: zero polynomial");
    if (f.size() - 1 > 4) throw std::logic_error("oracle: degree > 4");

    poly_factorization out;
    out.unit = mpq_class(wide(f.back()));

    std::vector<rational_poly> monic_factors;

    // Low zero coefficients are factors of x.
    std::size_t low = 0;
    while (f[low] == 0) ++low;
    for (std::size_t i = 0; i < low; ++i) monic_factors.push_back(rational_poly({0, 1}));
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));

    // Primitive part with positive leading coefficient; the monic factors of
    // c*f are those of f, so content only ever lands in the unit.
    ll content = 0;
    for (ll c : f) content = std::gcd(content, c);
    if (f.back() < 0) content = -content;
    for (ll& c : f) c /= content;

    while (f.size() - 1 >= 1) {
        if (f.size() - 1 == 1) {
            monic_factors.push_back(monic_of(f));
            break;
        }
        // Rational root theorem: roots nm/dv with dv | lc, nm | constant.
        bool found_root = false;
        for (ll dv : positive_divisors(f.back())) {
            for (ll nt : positive_divisors(f.front())) {
                for (ll nm : {nt, -nt}) {
                    if (std::gcd(std::abs(nm), dv) != 1) continue;
                    if (!has_root(f, nm, dv)) continue;
                    monic_factors.push_back(monic_of({-nm, dv}));
                    f = divide_exact(f, {-nm, dv});
                    found_root = true;
                    break;
                }
                if (found_root) break;
            }
            if (found_root) break;
        }
        if (found_root) continue;

        // No rational root: degree 2 and 3 are irreducible; a quartic can
        // still split into two root-free quadratics.
        if (f.size() - 1 == 4) {
            std::vector<ll> q1, q2;
            if (split_quartic(f, q1, q2)) {
                monic_factors.push_back(monic_of(q1));
                monic_factors.push_back(monic_of(q2));
                break;
            }
        }
        monic_factors.push_back(monic_of(f));
        break;
    }

    std::sort(monic_factors.begin(), monic_factors.end(),
              [](const rational_poly& a, const rational_poly& b) {
                  if (a.degree() != b.degree()) return a.degree() < b.degree();
                  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
                      if (a[i] < b[i]) return true;
                      if (b[i] < a[i]) return false;
                  }
                  return false;
              });
    for (const rational_poly& m : monic_factors) {
        if (!out.factors.empty() && out.factors.back().factor == m)
            ++out.factors.back().multiplicity;
        else
            out.factors.push_back(poly_factor{m, 1});
    }
    return out;
}

/// True when the engine's factorization matches the oracle's exactly
/// (unit, factor polynomials, multiplicities, order).
inline bool matches_oracle(const poly_factorization& engine, const poly_factorization& oracle) {
    if (engine.unit != oracle.unit) return false;
    if (engine.factors.size() != oracle.factors.size()) return false;
    for (std::size_t i = 0; i < engine.factors.size(); ++i) {
        if (engine.factors[i].multiplicity != oracle.factors[i].multiplicity) return false;
        if (!(engine.factors[i].factor == oracle.factors[i].factor)) return false;
    }
    return true;
}

}  // namespace gamepoly::testing
