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

#include "game.hpp"

#include <bit>
#include <mutex>

#include "errors.hpp"

namespace gamepoly {

namespace {

std::mutex registry_mutex;

/// In-place subset-sum (zeta) transform: out(S) = sum of in(T) over T ⊆ S.
/// One sweep per player bit; n*2^n additions total.
void zeta_transform(std::vector<mpq_class>& a) {
    for (std::size_t bit = 1; bit < a.size(); bit <<= 1)
        for (std::size_t mask = 0; mask < a.size(); ++mask)
            if (mask & bit)
                a[mask] += a[mask ^ bit];
}

/// Inverse of zeta_transform: out(S) = sum of (-1)^{|S \ T|} in(T) over T ⊆ S.
void mobius_transform(std::vector<mpq_class>& a) {
    for (std::size_t bit = 1; bit < a.size(); bit <<= 1)
        for (std::size_t mask = 0; mask < a.size(); ++mask)
            if (mask & bit)
                a[mask] -= a[mask ^ bit];
}

unsigned long binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b.get_ui();
}

}  // namespace

transform_registry::transform_registry() {
    auto no_op = [](std::vector<mpq_class>&) {};
    entries_.emplace_back("identity", transform_pair{no_op, no_op});
    entries_.emplace_back("mobius", transform_pair{mobius_transform, zeta_transform});
}

transform_registry& transform_registry::instance() {
    static transform_registry reg;
    return reg;
}

void transform_registry::register_transform(const std::string& name, transform_pair pair) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    for (const auto& [existing, _] : entries_)
        if (existing == name)
            throw domain_error(errc::invalid_argument, "basis '" + name + "' already registered");
    entries_.emplace_back(name, std::move(pair));
}

const transform_pair& transform_registry::lookup(const std::string& name) const {
    std::lock_guard<std::mutex> lock(registry_mutex);
    for (const auto& [existing, pair] : entries_)
        if (existing == name)
            return pair;
    throw domain_error(errc::unknown_basis, "no basis named '" + name + "'");
}

bool transform_registry::contains(const std::string& name) const {
    std::lock_guard<std::mutex> lock(registry_mutex);
    for (const auto& [existing, _] : entries_)
        if (existing == name)
            return true;
    return false;
}

game::game(unsigned players, basis_id basis, std::vector<mpq_class> coeffs)
    : players_(players), basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    const std::size_t expected = std::size_t(1) << players_;
    if (coeffs_.size() != expected)
        throw domain_error(errc::length_mismatch,
                           "game on " + std::to_string(players_) + " players needs " +
                               std::to_string(expected) + " coefficients, got " +
                               std::to_string(coeffs_.size()));
}

game game::zero(unsigned players, basis_id basis) {
    return game(players, std::move(basis),
                std::vector<mpq_class>(std::size_t(1) << players, mpq_class(0)));
}

const mpq_class& game::coefficient(const coalition& s) const {
    if (s.rank() >= static_cast<unsigned long>(coeffs_.size()))
        throw domain_error(errc::player_out_of_range,
                           "coalition rank exceeds the coefficient table");
    return coeffs_[s.rank().get_ui()];
}

bool game::is_zero() const {
    for (const mpq_class& c : coeffs_)
        if (c != 0) return false;
    return true;
}

game game::in_basis(const basis_id& target) const {
    if (target == basis_) return *this;
    const transform_pair& from = transform_registry::instance().lookup(basis_.name());
    const transform_pair& to = transform_registry::instance().lookup(target.name());
    std::vector<mpq_class> coeffs = coeffs_;
    from.to_identity(coeffs);
    to.from_identity(coeffs);
    return game(players_, target, std::move(coeffs));
}

static void require_compatible(const game& a, const game& b) {
    if (a.players() != b.players())
        throw domain_error(errc::length_mismatch, "games have different player counts");
    if (!(a.basis() == b.basis()))
        throw domain_error(errc::invalid_argument, "games are expressed in different bases");
}

game operator+(const game& a, const game& b) {
    require_compatible(a, b);
    std::vector<mpq_class> out(a.coefficients());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b.coefficients()[i];
    return game(a.players(), a.basis(), std::move(out));
}

game operator-(const game& a, const game& b) {
    require_compatible(a, b);
    std::vector<mpq_class> out(a.coefficients());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= b.coefficients()[i];
    return game(a.players(), a.basis(), std::move(out));
}

game operator*(const mpq_class& c, const game& a) {
    std::vector<mpq_class> out(a.coefficients());
    for (mpq_class& v : out)
        v *= c;
    return game(a.players(), a.basis(), std::move(out));
}

bool operator==(const game& a, const game& b) {
    return a.players_ == b.players_ && a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
}

static std::size_t checked_rank_index(const coalition& s, unsigned players, const char* what) {
    if (!s.empty() && s.highest_player() > players)
        throw domain_error(errc::player_out_of_range,
                           std::string(what) + ": coalition members exceed the player count");
    return s.rank().get_ui();
}

game dirac_game(const coalition& s, unsigned players) {
    std::size_t index = checked_rank_index(s, players, "dirac_game");
    std::vector<mpq_class> coeffs(std::size_t(1) << players, mpq_class(0));
    coeffs[index] = 1;
    return game(players, basis_id::identity(), std::move(coeffs));
}

game unanimity_game(const coalition& s, unsigned players) {
    std::size_t base = checked_rank_index(s, players, "unanimity_game");
    std::vector<mpq_class> coeffs(std::size_t(1) << players, mpq_class(0));
    for (std::size_t mask = 0; mask < coeffs.size(); ++mask)
        if ((mask & base) == base)
            coeffs[mask] = 1;
    return game(players, basis_id::identity(), std::move(coeffs));
}

std::vector<mpq_class> cardinality_averages(const game& v) {
    const game w = v.in_basis(basis_id::identity());
    const unsigned n = w.players();
    std::vector<mpq_class> sums(n + 1, mpq_class(0));
    for (std::size_t mask = 0; mask < w.coefficients().size(); ++mask)
        sums[static_cast<unsigned>(std::popcount(mask))] += w.coefficients()[mask];
    for (unsigned k = 0; k <= n; ++k) {
        sums[k] /= mpq_class(binomial(n, k));
    }
    return sums;
}

rational_poly cardinality_polynomial(const game& v) {
    return rational_poly(cardinality_averages(v));
}

bool is_cardinality_game(const game& v) {
    const game w = v.in_basis(basis_id::identity());
    std::vector<bool> seen(w.players() + 1, false);
    std::vector<mpq_class> value(w.players() + 1, mpq_class(0));
    for (std::size_t mask = 0; mask < w.coefficients().size(); ++mask) {
        unsigned k = static_cast<unsigned>(std::popcount(mask));
        if (!seen[k]) {
            seen[k] = true;
            value[k] = w.coefficients()[mask];
        } else if (value[k] != w.coefficients()[mask]) {
            return false;
        }
    }
    return true;
}

}  // namespace gamepoly
