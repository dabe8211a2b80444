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

#ifndef GAMEPOLY_MODPOLY_HPP
#define GAMEPOLY_MODPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "poly.hpp"

namespace gamepoly {

/// Polynomials over F_p for word-sized odd primes p: the workhorse of prime
/// selection and Cantor-Zassenhaus splitting.  Coefficients live in
/// [0, p) in uint64 words; products go through 128-bit intermediates, so any
/// p < 2^63 is safe (the engine only ever uses small primes).
class modpoly {
public:
    using coeff = std::uint64_t;

    modpoly() = default;
    modpoly(std::vector<coeff> coeffs, coeff p);

    /// Reduction of an integer polynomial mod p.
    static modpoly from_int_poly(const int_poly& f, coeff p);
    static modpoly constant(coeff value, coeff p);
    static modpoly x(coeff p);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    coeff modulus() const noexcept { return p_; }
    const std::vector<coeff>& coefficients() const noexcept { return coeffs_; }
    coeff leading() const { return coeffs_.back(); }

    modpoly monic() const;

    friend modpoly operator+(const modpoly& a, const modpoly& b);
    friend modpoly operator-(const modpoly& a, const modpoly& b);
    friend modpoly operator*(const modpoly& a, const modpoly& b);
    friend bool operator==(const modpoly& a, const modpoly& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }

    modpoly derivative() const;

private:
    std::vector<coeff> coeffs_;  // ascending, no trailing zeros
    coeff p_ = 0;
};

/// a = q*d + r with deg r < deg d.
std::pair<modpoly, modpoly> mod_divmod(const modpoly& a, const modpoly& d);

/// Monic gcd over F_p.
modpoly mod_gcd(const modpoly& a, const modpoly& b);

/// base^e mod f, with an arbitrary-precision exponent (Cantor-Zassenhaus
/// raises to (p^d - 1)/2, which overflows any word for moderate d).
modpoly mod_powmod(const modpoly& base, const mpz_class& e, const modpoly& f);

/// Number of irreducible factors of a monic squarefree f over F_p, counted
/// by distinct-degree splitting without performing the full factorization.
/// Used to rank candidate primes.
unsigned mod_count_irreducible_factors(const modpoly& f);

/// Full factorization of a monic squarefree f into monic irreducibles
/// (distinct-degree then Cantor-Zassenhaus equal-degree splitting; the rng
/// drives the random splitting polynomials).
std::vector<modpoly> mod_factor_squarefree(const modpoly& f, std::mt19937_64& rng);

}  // namespace gamepoly

#endif  // GAMEPOLY_MODPOLY_HPP
