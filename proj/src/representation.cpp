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

#include "representation.hpp"

#include "errors.hpp"

namespace gamepoly {

unsigned min_players(std::size_t degree) {
    unsigned n = 0;
    while ((std::size_t(1) << n) < degree + 1)
        ++n;
    return n;
}

rational_poly to_poly(const game& v, const basis_id& basis) {
    return rational_poly(v.in_basis(basis).coefficients());
}

game from_poly(const rational_poly& p, const basis_id& basis) {
    // Validate the basis name even for the trivial zero case.
    transform_registry::instance().lookup(basis.name());
    if (p.is_zero())
        return game::zero(0, basis);
    const unsigned n = min_players(static_cast<std::size_t>(p.degree()));
    std::vector<mpq_class> coeffs = p.coefficients();
    coeffs.resize(std::size_t(1) << n, mpq_class(0));
    return game(n, basis, std::move(coeffs));
}

game canonical_representative(const game& v, const basis_id& basis) {
    rational_poly p = to_poly(v, basis);
    if (p.is_zero())
        throw domain_error(errc::zero_game, "the zero game has no canonical representative");
    mpq_class inv = 1 / p.leading_coefficient();
    return from_poly(inv * p, basis);
}

bool equivalent(const game& v, const game& w, const basis_id& basis) {
    rational_poly p = to_poly(v, basis);
    rational_poly q = to_poly(w, basis);
    if (p.is_zero() || q.is_zero())
        return p.is_zero() && q.is_zero();
    if (p.degree() != q.degree())
        return false;
    mpq_class scale = q.leading_coefficient() / p.leading_coefficient();
    return scale * p == q;
}

game product(const game& v, const game& w, const basis_id& basis) {
    rational_poly p = to_poly(v, basis);
    rational_poly q = to_poly(w, basis);
    if (p.is_zero() || q.is_zero())
        return game::zero(0, basis);
    return from_poly(p * q, basis);
}

}  // namespace gamepoly
