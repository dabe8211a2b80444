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

#ifndef GAMEPOLY_ROOTS_HPP
#define GAMEPOLY_ROOTS_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "game.hpp"
#include "poly.hpp"

namespace gamepoly {

struct root_entry {
    std::complex<double> value;
    unsigned multiplicity;
};

/// Roots with multiplicity, sorted by (real, imaginary) part.  `tolerance`
/// records the clustering tolerance the multiset was built with.
struct root_multiset {
    std::vector<root_entry> entries;
    double tolerance = 0.0;

    std::size_t total_multiplicity() const;
};

/// All complex roots of p (degree >= 1) in double precision.
/// Multiplicities are recovered structurally: trailing zero coefficients
/// deflate into a root at 0, and the squarefree decomposition supplies the
/// multiplicity of every other root, so the iteration itself only ever sees
/// simple roots (Aberth-Ehrlich, simultaneous).  Roots of one squarefree
/// part closer than tol are clustered.  Raises ZeroPolynomial / DegreeZero.
root_multiset find_roots(const rational_poly& p, double tol = 1e-12);

/// Root multiset of the game's polynomial in the named basis: the algebraic
/// representation of the game.  A constant (nonzero) game has an empty
/// multiset; the zero game raises ZeroGame.
root_multiset algebraic_representation(const game& v, const basis_id& basis, double tol = 1e-12);

/// Checks the multiset against p by Vieta: product and sum of all roots
/// (with multiplicity) must match (-1)^n a_0/a_n and -a_{n-1}/a_n within
/// tol.  Raises MultiplicityMismatch when the total multiplicity differs
/// from deg p.
bool verify_vieta(const root_multiset& roots, const rational_poly& p, double tol);

}  // namespace gamepoly

#endif  // GAMEPOLY_ROOTS_HPP
