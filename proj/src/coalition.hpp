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

#ifndef GAMEPOLY_COALITION_HPP
#define GAMEPOLY_COALITION_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace gamepoly {

/// A finite set of players {1, 2, 3, ...} ordered by its rank in the natural
/// (binary counting) order: rank(S) = sum of 2^(i-1) over players i in S.
/// Player i is stored as bit i-1 of the rank, so the rank doubles whenever
/// every member is shifted up by one player.  Ranks are arbitrary-precision,
/// so there is no limit on the highest player.
class coalition {
public:
    /// The empty coalition (rank 0).
    coalition() : bits_(0) {}

    /// Coalition with the given rank in the natural order (inverse of rank()).
    /// Requires rank >= 0.
    static coalition from_rank(const mpz_class& rank);

    /// Coalition with the given members.  Players must be >= 1; duplicates are
    /// allowed (the set is formed regardless of order or repetition).
    static coalition of_players(const std::vector<unsigned long>& players);

    /// Rank in the natural order: sum of 2^(i-1) over members i.
    const mpz_class& rank() const noexcept { return bits_; }

    bool empty() const noexcept { return bits_ == 0; }
    bool contains(unsigned long player) const;

    /// Number of members.
    std::size_t size() const;

    /// Members in ascending order.
    std::vector<unsigned long> players() const;

    /// Largest member; requires a nonempty coalition.
    unsigned long highest_player() const;

    /// Immediate successor in the natural order, computed by the carry
    /// cascade on players: let j be the smallest player not in S; drop the
    /// players 1..j-1 and add j.  (Equivalent to rank+1; the cascade is the
    /// defining algorithm, the arithmetic identity is checked by tests.)
    coalition successor() const;

    /// 2^k-th successor: the same cascade started at player k+1, leaving
    /// players 1..k untouched.  k is a zero-based power index.
    coalition successor_pow2(unsigned long k) const;

    /// k-th successor for arbitrary k >= 0, via the binary decomposition of
    /// k into powers of two (least significant first).
    coalition kth_successor(const mpz_class& k) const;

    /// Every member i becomes i+k; the rank is multiplied by 2^k exactly.
    coalition shifted(unsigned long k) const;

    /// Set union / intersection (used by disjoint-union tests and callers
    /// assembling coalitions).
    friend coalition operator|(const coalition& a, const coalition& b);
    friend coalition operator&(const coalition& a, const coalition& b);

    friend bool operator==(const coalition& a, const coalition& b) { return a.bits_ == b.bits_; }

    /// Natural-order comparison (by rank).
    friend bool operator<(const coalition& a, const coalition& b) { return a.bits_ < b.bits_; }

private:
    explicit coalition(mpz_class bits) : bits_(std::move(bits)) {}

    mpz_class bits_;
};

}  // namespace gamepoly

#endif  // GAMEPOLY_COALITION_HPP
