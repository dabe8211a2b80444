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

#include "factorize.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <random>

#include "errors.hpp"
#include "modpoly.hpp"
#include "representation.hpp"
#include "roots.hpp"

namespace gamepoly {

namespace {

// ---------------------------------------------------------------------------
// engine seed

std::uint64_t engine_seed() {
    if (const char* env = std::getenv("GAMEPOLY_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0x67616d65706f6c79ull;  // fixed default; output is seed-independent
}

// ---------------------------------------------------------------------------
// arithmetic on integer polynomials modulo an arbitrary-precision modulus,
// used by the Hensel lifting stage.  Vectors are ascending with no trailing
// zeros and coefficients in [0, m).

using zvec = std::vector<mpz_class>;

void zp_strip(zvec& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

zvec zp_reduce(const zvec& a, const mpz_class& m) {
    zvec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        mpz_mod(out[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    zp_strip(out);
    return out;
}

zvec zp_add(const zvec& a, const zvec& b, const mpz_class& m) {
    zvec out(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
        mpz_mod(out[i].get_mpz_t(), out[i].get_mpz_t(), m.get_mpz_t());
    }
    zp_strip(out);
    return out;
}

zvec zp_sub(const zvec& a, const zvec& b, const mpz_class& m) {
    zvec out(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
        mpz_mod(out[i].get_mpz_t(), out[i].get_mpz_t(), m.get_mpz_t());
    }
    zp_strip(out);
    return out;
}

zvec zp_mul(const zvec& a, const zvec& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    zvec out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    for (mpz_class& c : out)
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    zp_strip(out);
    return out;
}

zvec zp_scale(const zvec& a, const mpz_class& c, const mpz_class& m) {
    zvec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        mpz_mod(out[i].get_mpz_t(), mpz_class(a[i] * c).get_mpz_t(), m.get_mpz_t());
    zp_strip(out);
    return out;
}

/// Division by a monic divisor (leading coefficient exactly 1 mod m).
std::pair<zvec, zvec> zp_divmod_monic(const zvec& a, const zvec& d, const mpz_class& m) {
    assert(!d.empty() && d.back() == 1);
    if (a.size() < d.size()) return {{}, a};
    zvec rem = a;
    zvec quot(a.size() - d.size() + 1, mpz_class(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        mpz_class c = rem[k + d.size() - 1];
        if (c == 0) continue;
        quot[k] = c;
        for (std::size_t i = 0; i < d.size(); ++i) {
            mpz_class v = rem[k + i] - c * d[i];
            mpz_mod(rem[k + i].get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        }
    }
    zp_strip(rem);
    return {std::move(quot), std::move(rem)};
}

/// Symmetric representative: coefficients mapped into (-m/2, m/2].
int_poly zp_symmetric(const zvec& a, const mpz_class& m) {
    const mpz_class half = m / 2;
    std::vector<mpz_class> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] > half ? mpz_class(a[i] - m) : a[i];
    return int_poly(std::move(out));
}

zvec zp_from_int_poly(const int_poly& f, const mpz_class& m) {
    return zp_reduce(f.coefficients(), m);
}

zvec zp_from_modpoly(const modpoly& f) {
    zvec out(f.coefficients().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = mpz_class(static_cast<unsigned long>(f.coefficients()[i]));
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting

/// Extended Euclid over F_p: s*a + t*b = 1 with deg s < deg b, deg t < deg a.
/// Requires gcd(a, b) = 1.
std::pair<modpoly, modpoly> mod_bezout(const modpoly& a, const modpoly& b) {
    const auto p = a.modulus();
    modpoly r0 = a, r1 = b;
    modpoly s0 = modpoly::constant(1, p), s1 = modpoly::constant(0, p);
    modpoly t0 = modpoly::constant(0, p), t1 = modpoly::constant(1, p);
    while (!r1.is_zero()) {
        auto [q, r] = mod_divmod(r0, r1);
        modpoly s2 = s0 - q * s1;
        modpoly t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    assert(r0.degree() == 0);  // coprime inputs
    modpoly inv = modpoly::constant(1, p);
    inv = mod_divmod(inv, r0).first;  // 1 / gcd constant
    modpoly s = s0 * inv, t = t0 * inv;
    // Normalize the degrees: s mod b, and t recomputed so the identity is
    // exact rather than merely congruent.
    s = mod_divmod(s, b).second;
    modpoly num = modpoly::constant(1, p) - s * a;
    auto [tq, tr] = mod_divmod(num, b);
    assert(tr.is_zero());
    t = tq;
    return {s, t};
}

struct hensel_pair {
    zvec g, h, s, t;  // f = g*h (mod m), s*g + t*h = 1 (mod m), h monic
};

/// One quadratic step: everything true mod m becomes true mod m*m.
hensel_pair hensel_step(const zvec& f, const hensel_pair& in, const mpz_class& m) {
    const mpz_class m2 = m * m;
    const zvec fr = zp_reduce(f, m2);

    zvec e = zp_sub(fr, zp_mul(in.g, in.h, m2), m2);
    auto [q, r] = zp_divmod_monic(zp_mul(in.s, e, m2), in.h, m2);
    zvec g2 = zp_add(zp_add(in.g, zp_mul(in.t, e, m2), m2), zp_mul(q, in.g, m2), m2);
    zvec h2 = zp_add(in.h, r, m2);

    zvec b = zp_sub(zp_add(zp_mul(in.s, g2, m2), zp_mul(in.t, h2, m2), m2),
                    zvec{mpz_class(1)}, m2);
    auto [c, d] = zp_divmod_monic(zp_mul(in.s, b, m2), h2, m2);
    zvec s2 = zp_sub(in.s, d, m2);
    zvec t2 = zp_sub(zp_sub(in.t, zp_mul(in.t, b, m2), m2), zp_mul(c, g2, m2), m2);

    return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

/// Lifts the modular factorization f = lc(f) * g_0 * ... * g_{r-1} (mod p)
/// to monic factors mod p^(2^steps), peeling one factor per pair lift.
std::vector<zvec> hensel_lift_factors(const int_poly& f, const std::vector<modpoly>& factors,
                                      unsigned long p, unsigned steps, mpz_class& final_modulus) {
    mpz_class target(static_cast<unsigned long>(p));
    for (unsigned i = 0; i < steps; ++i)
        target *= target;
    final_modulus = target;

    const mpz_class pz(static_cast<unsigned long>(p));
    std::vector<zvec> lifted;
    lifted.reserve(factors.size());

    zvec current = zp_from_int_poly(f, target);
    mpz_class lead = f.leading_coefficient();

    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        // Pair: h = next factor (monic), g = lc * product of the rest mod p.
        modpoly h_p = factors[i];
        modpoly g_p = modpoly::constant(
            static_cast<modpoly::coeff>(mpz_fdiv_ui(lead.get_mpz_t(), p)), p);
        for (std::size_t k = i + 1; k < factors.size(); ++k)
            g_p = g_p * factors[k];
        auto [s_p, t_p] = mod_bezout(g_p, h_p);

        hensel_pair pair{zp_from_modpoly(g_p), zp_from_modpoly(h_p),
                         zp_from_modpoly(s_p), zp_from_modpoly(t_p)};
        mpz_class m = pz;
        for (unsigned step = 0; step < steps; ++step) {
            pair = hensel_step(current, pair, m);
            m *= m;
        }
        lifted.push_back(pair.h);  // monic lifted factor
        current = pair.g;          // carries the leading coefficient
    }

    // Last factor: the remaining cofactor divided by the leading coefficient.
    mpz_class lead_inv;
    mpz_class lead_mod = lead % target;
    if (lead_mod < 0) lead_mod += target;
    int ok = mpz_invert(lead_inv.get_mpz_t(), lead_mod.get_mpz_t(), target.get_mpz_t());
    assert(ok != 0);
    (void)ok;
    lifted.push_back(zp_scale(current, lead_inv, target));
    assert(!lifted.back().empty() && lifted.back().back() == 1);
    return lifted;
}

// ---------------------------------------------------------------------------
// integer polynomial helpers

/// Primitive part with positive leading coefficient.
int_poly primitive_part(const int_poly& a) {
    return content_primitive(a.to_rational()).primitive;
}

mpz_class eval_abs_bound(const int_poly& f) {
    // 2^deg * (1 + ceil of the Euclidean norm) * |leading coefficient|:
    // a safe ceiling for any coefficient of lc * (monic factor of f).
    mpz_class sq(0);
    for (const mpz_class& c : f.coefficients())
        sq += c * c;
    mpz_class norm;
    mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
    norm += 1;  // round the square root up
    mpz_class bound = norm + 1;
    mpz_class lead = abs(f.leading_coefficient());
    bound *= lead;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
    return bound;
}

bool is_small_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Factorization of a primitive squarefree polynomial with positive leading
/// coefficient into primitive irreducibles with positive leading
/// coefficients (Zassenhaus).
std::vector<int_poly> factor_primitive_squarefree(const int_poly& input, std::mt19937_64& rng) {
    if (input.degree() == 1)
        return {input};

    // --- prime selection: the smallest primes >= 3 that keep the degree and
    // the squarefreeness mod p; among up to 20 candidates take the one with
    // the fewest modular factors (fewer pieces = cheaper recombination).
    const mpz_class& lead = input.leading_coefficient();
    unsigned long best_p = 0;
    unsigned best_count = 0;
    unsigned tried = 0;
    for (unsigned long p = 3; tried < 20; p += 2) {
        while (!is_small_prime(p))
            p += 2;
        if (mpz_divisible_ui_p(lead.get_mpz_t(), p)) continue;
        modpoly fp = modpoly::from_int_poly(input, p).monic();
        modpoly d = fp.derivative();
        if (d.is_zero() || mod_gcd(fp, d).degree() != 0) continue;
        ++tried;
        unsigned count = mod_count_irreducible_factors(fp);
        if (count == 1)
            return {input};  // irreducible mod p => irreducible over Z
        if (best_p == 0 || count < best_count) {
            best_p = p;
            best_count = count;
        }
    }
    assert(best_p != 0);

    // --- modular factorization and Hensel lifting past the coefficient bound
    const unsigned long p = best_p;
    modpoly fp = modpoly::from_int_poly(input, p).monic();
    std::vector<modpoly> modular = mod_factor_squarefree(fp, rng);

    mpz_class bound = 2 * eval_abs_bound(input) + 1;
    unsigned steps = 0;
    {
        mpz_class reach(static_cast<unsigned long>(p));
        while (reach < bound) {
            reach *= reach;
            ++steps;
        }
    }
    mpz_class modulus;
    std::vector<zvec> lifted = hensel_lift_factors(input, modular, p, steps, modulus);

    // --- exhaustive recombination, subsets by ascending size
    std::vector<int_poly> out;
    std::vector<std::size_t> active(lifted.size());
    for (std::size_t i = 0; i < active.size(); ++i)
        active[i] = i;
    int_poly remaining = input;

    auto try_subset = [&](const std::vector<std::size_t>& subset) -> bool {
        zvec prod{remaining.leading_coefficient() % modulus};
        if (prod[0] < 0) prod[0] += modulus;
        for (std::size_t idx : subset)
            prod = zp_mul(prod, lifted[idx], modulus);
        int_poly candidate = primitive_part(zp_symmetric(prod, modulus));
        int_poly quotient;
        if (!try_divide_exact(remaining, candidate, quotient)) return false;
        out.push_back(candidate);
        remaining = quotient;
        std::vector<std::size_t> next;
        for (std::size_t idx : active)
            if (std::find(subset.begin(), subset.end(), idx) == subset.end())
                next.push_back(idx);
        active = std::move(next);
        return true;
    };

    for (std::size_t size = 1; 2 * size <= active.size();) {
        // enumerate size-subsets of the current active list in lex order
        std::vector<std::size_t> pick(size);
        bool found = false;
        auto enumerate = [&](auto&& self, std::size_t start, std::size_t depth) -> bool {
            if (depth == size)
                return try_subset(pick);
            for (std::size_t i = start; i + (size - depth) <= active.size(); ++i) {
                pick[depth] = active[i];
                if (self(self, i + 1, depth + 1)) return true;
            }
            return false;
        };
        found = enumerate(enumerate, 0, 0);
        if (!found)
            ++size;  // no factor of this size: move up
    }
    if (remaining.degree() >= 1)
        out.push_back(remaining);
    return out;
}

bool canonical_factor_less(const poly_factor& a, const poly_factor& b) {
    if (a.factor.degree() != b.factor.degree())
        return a.factor.degree() < b.factor.degree();
    const auto& ca = a.factor.coefficients();
    const auto& cb = b.factor.coefficients();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] < cb[i]) return true;
        if (cb[i] < ca[i]) return false;
    }
    return false;
}

}  // namespace

rational_poly poly_factorization::reassemble() const {
    rational_poly out = rational_poly::constant(unit);
    for (const poly_factor& f : factors)
        for (unsigned i = 0; i < f.multiplicity; ++i)
            out = out * f.factor;
    return out;
}

std::vector<int_poly_power> squarefree_decompose(const int_poly& p) {
    if (p.is_zero())
        throw domain_error(errc::zero_polynomial, "squarefree decomposition of zero");
    if (p.leading_coefficient() < 0)
        throw domain_error(errc::invalid_argument,
                           "squarefree decomposition needs a positive leading coefficient");
    {
        content_primitive_result cp = content_primitive(p.to_rational());
        if (cp.content != 1)
            throw domain_error(errc::invalid_argument,
                               "squarefree decomposition needs a primitive polynomial");
    }

    std::vector<int_poly_power> parts;
    rational_poly a = p.to_rational();
    if (a.degree() == 0) return parts;

    // Yun's algorithm with monic rational gcds; parts are primitivized.
    rational_poly da = a.derivative();
    rational_poly u = poly_gcd(a, da);
    rational_poly v = divide_with_remainder(a, u).first;
    rational_poly w = divide_with_remainder(da, u).first;
    unsigned k = 1;
    while (v.degree() > 0) {
        rational_poly z = w - v.derivative();
        if (z.is_zero()) {
            parts.push_back({content_primitive(v).primitive, k});
            break;
        }
        rational_poly g = poly_gcd(v, z);
        if (g.degree() > 0)
            parts.push_back({content_primitive(g).primitive, k});
        v = divide_with_remainder(v, g).first;
        w = divide_with_remainder(z, g).first;
        ++k;
    }
    return parts;
}

poly_factorization factor_over_q(const rational_poly& p) {
    if (p.is_zero())
        throw domain_error(errc::zero_polynomial, "cannot factor the zero polynomial");

    poly_factorization result;
    result.unit = p.leading_coefficient();
    if (p.degree() == 0)
        return result;

    // Deflate powers of x so every squarefree part has a nonzero constant
    // term.
    std::size_t low = 0;
    while (p[low] == 0)
        ++low;
    if (low > 0)
        result.factors.push_back({rational_poly::monomial(1), static_cast<unsigned>(low)});

    std::vector<mpq_class> rest(p.coefficients().begin() + static_cast<std::ptrdiff_t>(low),
                                p.coefficients().end());
    rational_poly q(std::move(rest));
    if (q.degree() >= 1) {
        std::mt19937_64 rng(engine_seed());
        int_poly primitive = content_primitive(q).primitive;
        for (const int_poly_power& part : squarefree_decompose(primitive)) {
            for (const int_poly& irr : factor_primitive_squarefree(part.part, rng)) {
                // monic rational version of the primitive irreducible
                mpq_class inv(1, 1);
                inv /= mpq_class(irr.leading_coefficient());
                result.factors.push_back({inv * irr.to_rational(), part.multiplicity});
            }
        }
    }

    std::sort(result.factors.begin(), result.factors.end(), canonical_factor_less);
    return result;
}

bool is_irreducible(const rational_poly& p) {
    if (p.is_zero())
        throw domain_error(errc::zero_polynomial, "irreducibility of the zero polynomial");
    if (p.degree() == 0)
        throw domain_error(errc::degree_zero, "irreducibility needs degree >= 1");
    poly_factorization f = factor_over_q(p);
    return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

bool eisenstein_check(const int_poly& p, const mpz_class& prime) {
    if (prime < 2 || mpz_probab_prime_p(prime.get_mpz_t(), 40) == 0)
        throw domain_error(errc::not_prime, "Eisenstein needs a prime");
    if (p.is_zero())
        throw domain_error(errc::zero_polynomial, "Eisenstein on the zero polynomial");
    if (p.degree() == 0)
        throw domain_error(errc::degree_zero, "Eisenstein needs degree >= 1");

    const std::size_t n = static_cast<std::size_t>(p.degree());
    if (mpz_divisible_p(p[n].get_mpz_t(), prime.get_mpz_t()))
        return false;
    for (std::size_t i = 0; i < n; ++i)
        if (!mpz_divisible_p(p[i].get_mpz_t(), prime.get_mpz_t()))
            return false;
    mpz_class p2 = prime * prime;
    return !mpz_divisible_p(p[0].get_mpz_t(), p2.get_mpz_t());
}

game_factorization factor_game(const game& v, const basis_id& basis) {
    rational_poly p = to_poly(v, basis);
    if (p.is_zero())
        throw domain_error(errc::zero_game, "cannot factor the zero game");
    poly_factorization pf = factor_over_q(p);
    game_factorization out;
    out.scalar = pf.unit;
    out.factors.reserve(pf.factors.size());
    for (const poly_factor& f : pf.factors)
        out.factors.push_back({from_poly(f.factor, basis), f.multiplicity});
    return out;
}

root_multiset algebraic_rep_of_factorization(const game_factorization& f, double tol) {
    root_multiset out;
    out.tolerance = tol;
    for (const game_factor& gf : f.factors) {
        rational_poly p = to_poly(gf.factor, gf.factor.basis());
        root_multiset part = find_roots(p, tol);
        for (root_entry e : part.entries) {
            e.multiplicity *= gf.multiplicity;
            out.entries.push_back(e);
        }
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const root_entry& a, const root_entry& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

}  // namespace gamepoly
