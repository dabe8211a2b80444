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

#ifndef GAMEPOLY_FACTORIZE_HPP
#define GAMEPOLY_FACTORIZE_HPP

#include <gmpxx.h>

#include <vector>

#include "game.hpp"
#include "poly.hpp"
#include "roots.hpp"

namespace gamepoly {

struct poly_factor {
    rational_poly factor;   ///< monic irreducible
    unsigned multiplicity;
};

/// p = unit * product of factor^multiplicity, unit a nonzero rational (the
/// leading coefficient of p).  Factors are sorted by ascending degree, then
/// by ascending coefficient sequence, so the output is deterministic.
struct poly_factorization {
    mpq_class unit;
    std::vector<poly_factor> factors;

    rational_poly reassemble() const;
};

struct int_poly_power {
    int_poly part;          ///< primitive, squarefree, positive leading coefficient
    unsigned multiplicity;
};

/// Yun decomposition p = product of part^multiplicity with pairwise coprime
/// squarefree parts, in ascending multiplicity.  Requires p nonzero,
/// primitive, with positive leading coefficient.
std::vector<int_poly_power> squarefree_decompose(const int_poly& p);

/// Complete factorization over Q into monic irreducibles (Zassenhaus:
/// squarefree decomposition, a modular factorization for the best of up to
/// 20 candidate primes, quadratic Hensel lifting past the coefficient bound,
/// exhaustive subset recombination).  Deterministic; the internal random
/// source is freshly seeded per call (GAMEPOLY_SEED overrides the default
/// seed).  Raises ZeroPolynomial for the zero polynomial; constants give a
/// unit-only result.
poly_factorization factor_over_q(const rational_poly& p);

/// True when p is irreducible over Q (a unit times one monic irreducible).
/// Raises ZeroPolynomial / DegreeZero for zero and constant input.
bool is_irreducible(const rational_poly& p);

/// Eisenstein's criterion at the given prime: prime | a_i for all i < n,
/// prime does not divide a_n, prime^2 does not divide a_0.  Sufficient for
/// irreducibility, never necessary.  Raises NotPrime if `prime` is not a
/// prime, DegreeZero for constants.
bool eisenstein_check(const int_poly& p, const mpz_class& prime);

struct game_factor {
    game factor;            ///< minimal, normalized (canonical representative)
    unsigned multiplicity;
};

/// v = scalar * product of factor games (with multiplicity) relative to the
/// named basis; each factor is the canonical game of one monic irreducible
/// polynomial factor.
struct game_factorization {
    mpq_class scalar;
    std::vector<game_factor> factors;
};

/// Factors the game's polynomial and maps each monic irreducible back to its
/// minimal game.  Raises ZeroGame for the zero game.
game_factorization factor_game(const game& v, const basis_id& basis);

/// Root multiset of the whole factorization: the roots of every factor,
/// multiplicities scaled by the factor multiplicities.  A unit-only
/// factorization yields the empty multiset.
root_multiset algebraic_rep_of_factorization(const game_factorization& f, double tol = 1e-12);

}  // namespace gamepoly

#endif  // GAMEPOLY_FACTORIZE_HPP
