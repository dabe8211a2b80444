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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "game.hpp"
#include "poly.hpp"
#include "representation.hpp"
#include "test_support.hpp"

using namespace gamepoly;
using namespace gamepoly::testing;

TEST_CASE("min_players is the smallest n with 2^n coefficient slots for the degree") {
    CHECK(min_players(0) == 0);
    CHECK(min_players(1) == 1);
    CHECK(min_players(2) == 2);
    CHECK(min_players(3) == 2);
    CHECK(min_players(4) == 3);
    CHECK(min_players(7) == 3);
    CHECK(min_players(8) == 4);
    CHECK(min_players(9) == 4);
    CHECK(min_players(15) == 4);
    CHECK(min_players(16) == 5);
    for (std::size_t d = 0; d <= 1024; ++d) {
        unsigned n = min_players(d);
        CHECK((std::size_t(1) << n) >= d + 1);
        if (n > 0) CHECK((std::size_t(1) << (n - 1)) < d + 1);
    }
}

TEST_CASE("to_poly reads the coefficient vector as an ascending polynomial") {
    game v(3, basis_id::mobius(), qvec({0, 0, 0, 1, 2, 0, 0, 0}));
    CHECK(to_poly(v, basis_id::mobius()) == qpoly({0, 0, 0, 1, 2}));

    // The same game in the identity basis has a different polynomial.
    game w = v.in_basis(basis_id::identity());
    CHECK(to_poly(w, basis_id::identity()) == qpoly({0, 0, 0, 1, 2, 2, 2, 3}));

    // The basis argument converts first when needed.
    CHECK(to_poly(w, basis_id::mobius()) == qpoly({0, 0, 0, 1, 2}));
    CHECK(to_poly(v, basis_id::identity()) == qpoly({0, 0, 0, 1, 2, 2, 2, 3}));

    CHECK(to_poly(game::zero(2, basis_id::mobius()), basis_id::mobius()).is_zero());
}

TEST_CASE("from_poly pads to the minimal player count") {
    game v = from_poly(qpoly({0, 0, 0, 1, 2}), basis_id::mobius());
    CHECK(v.players() == 3);
    CHECK(v.basis() == basis_id::mobius());
    CHECK(v.coefficients() == qvec({0, 0, 0, 1, 2, 0, 0, 0}));

    game unit = from_poly(rational_poly::constant(1), basis_id::identity());
    CHECK(unit.players() == 0);
    CHECK(unit.coefficients() == qvec({1}));

    game z = from_poly(rational_poly(), basis_id::mobius());
    CHECK(z.players() == 0);
    CHECK(z.is_zero());

    // Degree 2^k forces k+1 players.
    CHECK(from_poly(rational_poly::monomial(4), basis_id::mobius()).players() == 3);
    CHECK(from_poly(rational_poly::monomial(3), basis_id::mobius()).players() == 2);
}

TEST_CASE("to_poly and from_poly are inverse on minimal games") {
    rng random(0x7265707250ull);
    for (int trial = 0; trial < 200; ++trial) {
        int degree = static_cast<int>(random.integer(0, 20));
        rational_poly p = random.poly(degree);
        basis_id basis = random.integer(0, 1) ? basis_id::mobius() : basis_id::identity();
        game v = from_poly(p, basis);
        CHECK(v.players() == min_players(static_cast<std::size_t>(degree)));
        CHECK(to_poly(v, basis) == p);
    }

    // A game whose top half is zero strips to fewer players through the round
    // trip: the polynomial forgets the padding.
    game padded(3, basis_id::mobius(), qvec({0, 1, 0, 0, 0, 0, 0, 0}));
    game stripped = from_poly(to_poly(padded, basis_id::mobius()), basis_id::mobius());
    CHECK(stripped.players() == 1);
    CHECK(stripped.coefficients() == qvec({0, 1}));
}

TEST_CASE("worked product example") {
    game v(3, basis_id::mobius(), qvec({0, 0, 0, -1, 0, 2, -1, 0}));
    game w(2, basis_id::mobius(), qvec({1, 0, -1, 1}));
    game p = product(v, w, basis_id::mobius());
    CHECK(p.players() == 4);
    CHECK(p.coefficients() ==
          qvec({0, 0, 0, -1, 0, 3, -2, -2, 3, -1, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("product is commutative and associative on 300 random triples") {
    rng random(0x70726f64ull);
    for (int trial = 0; trial < 300; ++trial) {
        unsigned n1 = static_cast<unsigned>(random.integer(0, 3));
        unsigned n2 = static_cast<unsigned>(random.integer(0, 3));
        unsigned n3 = static_cast<unsigned>(random.integer(0, 3));
        game a = random.random_game(n1, basis_id::mobius());
        game b = random.random_game(n2, basis_id::mobius());
        game c = random.random_game(n3, basis_id::mobius());
        CHECK(product(a, b, basis_id::mobius()) == product(b, a, basis_id::mobius()));
        game ab_c = product(product(a, b, basis_id::mobius()), c, basis_id::mobius());
        game a_bc = product(a, product(b, c, basis_id::mobius()), basis_id::mobius());
        CHECK(ab_c == a_bc);
    }
}

TEST_CASE("product player count never exceeds max(n, m) + 1") {
    rng random(0x706c6179ull);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = static_cast<unsigned>(random.integer(0, 3));
        unsigned m = static_cast<unsigned>(random.integer(0, 3));
        game a = random.random_game(n, basis_id::mobius());
        game b = random.random_game(m, basis_id::mobius());
        game p = product(a, b, basis_id::mobius());
        CHECK(p.players() <= std::max(n, m) + 1);
    }
}

TEST_CASE("the scalar-one game is the multiplicative identity on minimal games") {
    game one = from_poly(rational_poly::constant(1), basis_id::mobius());
    rng random(0x6f6e65ull);
    for (int trial = 0; trial < 50; ++trial) {
        rational_poly p = random.poly(static_cast<int>(random.integer(0, 10)));
        game v = from_poly(p, basis_id::mobius());
        CHECK(product(v, one, basis_id::mobius()) == v);
        CHECK(product(one, v, basis_id::mobius()) == v);
    }
}

TEST_CASE("unanimity games multiply by union when the coalitions are disjoint") {
    for (unsigned long s = 0; s < 8; ++s)
        for (unsigned long t = 0; t < 8; ++t) {
            if ((s & t) != 0) continue;
            coalition cs = coalition::from_rank(s);
            coalition ct = coalition::from_rank(t);
            unsigned ns = s == 0 ? 0 : min_players(static_cast<std::size_t>(s));
            unsigned nt = t == 0 ? 0 : min_players(static_cast<std::size_t>(t));
            game us = unanimity_game(cs, ns).in_basis(basis_id::mobius());
            game ut = unanimity_game(ct, nt).in_basis(basis_id::mobius());
            game got = product(us, ut, basis_id::mobius());
            unsigned nu = (s | t) == 0 ? 0 : min_players(static_cast<std::size_t>(s | t));
            game want = unanimity_game(cs | ct, nu).in_basis(basis_id::mobius());
            CHECK(got == want);
        }
}

TEST_CASE("canonical representative is minimal and monic") {
    // 2x^3 + 4x^4 canonicalizes to x^3/2 + x^4... the leading coefficient
    // becomes 1: (2x^3 + 4x^4)/4 = x^3/2 + x^4.
    game v(3, basis_id::mobius(), qvec({0, 0, 0, 2, 4, 0, 0, 0}));
    game c = canonical_representative(v, basis_id::mobius());
    CHECK(c.players() == 3);
    CHECK(c.coefficients() ==
          std::vector<mpq_class>{q(0), q(0), q(0), q(1, 2), q(1), q(0), q(0), q(0)});

    // A scaled and padded variant lands on the same representative.
    game padded(4, basis_id::mobius(),
                qvec({0, 0, 0, 4, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(canonical_representative(padded, basis_id::mobius()) == c);

    // Idempotent.
    CHECK(canonical_representative(c, basis_id::mobius()) == c);

    CHECK(domain_kind_of([] {
              canonical_representative(game::zero(2, basis_id::mobius()), basis_id::mobius());
          }) == errc::zero_game);
}

TEST_CASE("equivalence is agreement up to a nonzero scalar") {
    game v(3, basis_id::mobius(), qvec({0, 0, 0, 1, 2, 0, 0, 0}));
    game scaled(4, basis_id::mobius(),
                qvec({0, 0, 0, 2, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(equivalent(v, scaled, basis_id::mobius()));

    CHECK_FALSE(equivalent(unanimity_game(coal({1}), 2), unanimity_game(coal({2}), 2),
                           basis_id::mobius()));

    // Zero is equivalent only to zero.
    CHECK(equivalent(game::zero(1, basis_id::mobius()), game::zero(3, basis_id::mobius()),
                     basis_id::mobius()));
    CHECK_FALSE(equivalent(game::zero(1, basis_id::mobius()), v, basis_id::mobius()));
    CHECK_FALSE(equivalent(v, game::zero(1, basis_id::mobius()), basis_id::mobius()));

    // Reflexive, symmetric, transitive across random scalings and paddings.
    rng random(0x65717569ull);
    for (int trial = 0; trial < 100; ++trial) {
        rational_poly p = random.poly(static_cast<int>(random.integer(0, 8)));
        game a = from_poly(p, basis_id::mobius());
        game b = from_poly(random.nonzero_rational() * p, basis_id::mobius());
        game c = from_poly(random.nonzero_rational() * p, basis_id::mobius());
        CHECK(equivalent(a, a, basis_id::mobius()));
        CHECK(equivalent(a, b, basis_id::mobius()));
        CHECK(equivalent(b, a, basis_id::mobius()));
        CHECK(equivalent(b, c, basis_id::mobius()));
        CHECK(equivalent(a, c, basis_id::mobius()));

        // Perturbing one coefficient breaks equivalence.
        std::vector<mpq_class> bumped = a.coefficients();
        bumped[static_cast<std::size_t>(
            random.integer(0, static_cast<long>(bumped.size()) - 1))] += 1;
        game d(a.players(), basis_id::mobius(), bumped);
        CHECK(equivalent(a, d, basis_id::mobius()) == equivalent(d, a, basis_id::mobius()));
    }
}

TEST_CASE("equivalent games share a canonical representative") {
    rng random(0x63616e6full);
    for (int trial = 0; trial < 100; ++trial) {
        rational_poly p = random.poly(static_cast<int>(random.integer(0, 10)));
        game a = from_poly(p, basis_id::mobius());
        game b = from_poly(random.nonzero_rational() * p, basis_id::mobius());
        CHECK(canonical_representative(a, basis_id::mobius()) ==
              canonical_representative(b, basis_id::mobius()));
        game c = canonical_representative(a, basis_id::mobius());
        CHECK(to_poly(c, basis_id::mobius()).leading_coefficient() == 1);
        CHECK(c.players() == min_players(static_cast<std::size_t>(p.degree())));
    }
}

TEST_CASE("product respects the chosen basis") {
    // The product of v and w is defined through their polynomials in the given
    // basis; converting operands between bases first must not change it.
    rng random(0x62617369ull);
    for (int trial = 0; trial < 50; ++trial) {
        game a = random.random_game(static_cast<unsigned>(random.integer(0, 3)),
                                    basis_id::identity());
        game b = random.random_game(static_cast<unsigned>(random.integer(0, 3)),
                                    basis_id::identity());
        game direct = product(a, b, basis_id::identity());
        game via_mobius = product(a.in_basis(basis_id::mobius()), b.in_basis(basis_id::mobius()),
                                  basis_id::identity());
        CHECK(direct == via_mobius);
    }
}
