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

#ifndef GAMEPOLY_REPRESENTATION_HPP
#define GAMEPOLY_REPRESENTATION_HPP

#include "game.hpp"
#include "poly.hpp"

namespace gamepoly {

/// Smallest player count n with 2^n >= degree + 1, i.e. the fewest players
/// whose coefficient table can hold a coefficient at index `degree`.
unsigned min_players(std::size_t degree);

/// The polynomial whose coefficient of x^i is the basis coordinate of the
/// rank-i coalition.  Trailing zero coordinates disappear with the
/// polynomial normalization, so distinct paddings of one game agree.
rational_poly to_poly(const game& v, const basis_id& basis);

/// Inverse of to_poly on minimal games: the game on min_players(deg p)
/// players whose basis coordinates are the coefficients of p (padded with
/// zeros).  The zero polynomial gives the zero game on 0 players.
game from_poly(const rational_poly& p, const basis_id& basis);

/// The unique minimal monic game equivalent to v: polynomial divided by its
/// leading coefficient, then re-read on the minimal player count.
/// Raises ZeroGame for the zero game.
game canonical_representative(const game& v, const basis_id& basis);

/// True when the two games' polynomials differ by a nonzero rational factor
/// (zero is equivalent only to zero).
bool equivalent(const game& v, const game& w, const basis_id& basis);

/// Product of games relative to the named basis: the game of the polynomial
/// product, on the minimal player count.  If either factor is the zero game
/// the result is the zero game on 0 players.
game product(const game& v, const game& w, const basis_id& basis);

}  // namespace gamepoly

#endif  // GAMEPOLY_REPRESENTATION_HPP
