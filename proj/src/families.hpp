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

#ifndef GAMEPOLY_FAMILIES_HPP
#define GAMEPOLY_FAMILIES_HPP

#include <gmpxx.h>

#include <vector>

#include "coalition.hpp"
#include "factorize.hpp"
#include "game.hpp"
#include "poly.hpp"

namespace gamepoly {

/// Hygiene bound on cyclotomic indices: keeps x^n - 1 comfortably in memory.
inline constexpr unsigned long kMaxCyclotomicIndex = 1000000;

/// Hygiene bound on multiplicative factor counts: the product polynomial has
/// degree 2^n - 1, so the game needs 2^n coordinates.
inline constexpr unsigned long kMaxMultiplicativeFactors = 20;

/// A game that is a product of one-player affine games: the k-th factor has
/// polynomial x^{2^(k-1)} - alpha_k, and the whole product is scaled by beta.
struct multiplicative_spec {
    mpq_class beta;                 ///< nonzero scale
    std::vector<mpq_class> alphas;  ///< alpha_1 .. alpha_n, n >= 1
};

/// Euler's totient: the count of k in [1, n] coprime to n.  Requires n >= 1.
unsigned long totient(unsigned long n);

/// The n-th cyclotomic polynomial, computed by exact division of x^n - 1 by
/// the product of the proper-divisor cyclotomics (memoized).  Monic, integer
/// coefficients, degree totient(n).  Requires 1 <= n <= kMaxCyclotomicIndex.
int_poly cyclotomic_poly(unsigned long n);

/// The canonical game of the n-th cyclotomic polynomial in the named basis.
game cyclotomic_game(unsigned long n, const basis_id& basis);

/// Player count of cyclotomic_game(n): min_players(totient(n)).
unsigned cyclotomic_player_count(unsigned long n);

/// Expands beta * (x - a1)(x^2 - a2)...(x^(2^(n-1)) - an) and reads the game
/// off the polynomial; the result has exactly n players (degree 2^n - 1).
game multiplicative_game(const multiplicative_spec& spec, const basis_id& basis);

/// Closed form for the same coordinates, evaluated directly per coalition:
/// coefficient(S) = beta * (-1)^(n - |S|) * product of alpha_i over i not in
/// S (empty product = 1).  Returns the 2^n values in coalition-rank order;
/// equals multiplicative_game's coefficient vector exactly.
std::vector<mpq_class> multiplicative_closed_form(const multiplicative_spec& spec);

/// Factorization of the game with polynomial x^eta(s) - 1: scalar 1 and the
/// cyclotomic games {c_d : d divides eta(s)} in ascending divisor order,
/// each with multiplicity 1.  Bypasses the general factorization engine.
/// Raises EmptyCoalition for the empty coalition (eta = 0 gives the zero
/// polynomial); Overflow when eta(s) exceeds kMaxCyclotomicIndex.
game_factorization factor_unit_circle_game(const coalition& s, const basis_id& basis);

}  // namespace gamepoly

#endif  // GAMEPOLY_FAMILIES_HPP
