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

#ifndef GAMEPOLY_GAME_HPP
#define GAMEPOLY_GAME_HPP

#include <gmpxx.h>

#include <deque>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "coalition.hpp"
#include "poly.hpp"

namespace gamepoly {

/// Identifier of a coordinate basis for games.  "identity" (raw coalition
/// values) and "mobius" (unanimity-basis coordinates) ship built in; further
/// bases can be added through transform_registry::register_transform.
class basis_id {
public:
    static basis_id identity() { return basis_id("identity"); }
    static basis_id mobius() { return basis_id("mobius"); }

    /// Names an arbitrary basis; validated against the registry at the point
    /// of use, not at construction.
    explicit basis_id(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const basis_id& a, const basis_id& b) { return a.name_ == b.name_; }

private:
    std::string name_;
};

/// A coefficient transform and its inverse, both in-place on a vector of
/// length 2^n indexed by coalition rank.  `from_identity` turns raw coalition
/// values into basis coordinates; `to_identity` is its inverse.
struct transform_pair {
    std::function<void(std::vector<mpq_class>&)> from_identity;
    std::function<void(std::vector<mpq_class>&)> to_identity;
};

/// Registry of named basis transforms.  Reads vastly outnumber writes; the
/// built-in entries are installed on first access and registration of an
/// existing name is rejected.
class transform_registry {
public:
    static transform_registry& instance();

    void register_transform(const std::string& name, transform_pair pair);
    const transform_pair& lookup(const std::string& name) const;  ///< throws UnknownBasis
    bool contains(const std::string& name) const;

private:
    transform_registry();

    // deque: lookup() hands out references that must survive later
    // registrations.
    std::deque<std::pair<std::string, transform_pair>> entries_;
};

/// A transferable-utility game on players {1..n}, stored as the 2^n basis
/// coordinates of a chosen basis, indexed by coalition rank in the natural
/// order.  Exact rational coordinates throughout.
class game {
public:
    /// Requires coeffs.size() == 2^players (LengthMismatch otherwise).
    game(unsigned players, basis_id basis, std::vector<mpq_class> coeffs);

    static game zero(unsigned players, basis_id basis);

    unsigned players() const noexcept { return players_; }
    const basis_id& basis() const noexcept { return basis_; }
    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

    /// Coordinate of the coalition with the given rank.
    const mpq_class& coefficient(const coalition& s) const;

    bool is_zero() const;

    /// The same game expressed in another registered basis (exact).
    game in_basis(const basis_id& target) const;

    /// Vector-space operations; operands must share players and basis.
    friend game operator+(const game& a, const game& b);
    friend game operator-(const game& a, const game& b);
    friend game operator*(const mpq_class& c, const game& a);
    friend bool operator==(const game& a, const game& b);

private:
    unsigned players_;
    basis_id basis_;
    std::vector<mpq_class> coeffs_;
};

/// Dirac game: 1 on the coalition s, 0 elsewhere (identity-basis spike).
/// Every member of s must be <= players.
game dirac_game(const coalition& s, unsigned players);

/// Unanimity game u_s: v(T) = 1 iff T contains s.
/// Every member of s must be <= players.
game unanimity_game(const coalition& s, unsigned players);

/// Average of v over the coalitions of each cardinality 0..n
/// (identity-basis values; exact rationals).
std::vector<mpq_class> cardinality_averages(const game& v);

/// Polynomial whose coefficient of x^k is the cardinality-k average.
rational_poly cardinality_polynomial(const game& v);

/// True when v(S) depends only on |S| (in the identity basis).
bool is_cardinality_game(const game& v);

}  // namespace gamepoly

#endif  // GAMEPOLY_GAME_HPP
