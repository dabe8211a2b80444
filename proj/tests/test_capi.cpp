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

/// Exercises the shared-library C surface the way an external consumer would:
/// only through gamepoly/gamepoly.h.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gamepoly/gamepoly.h>

#include <cmath>
#include <string>

namespace {

/// Takes ownership of a C string result and frees it.
std::string take(char* s) {
    std::string out = s ? s : "<null>";
    gp_free_string(s);
    return out;
}

}  // namespace

TEST_CASE("status names and the error message channel") {
    CHECK(std::string(gp_status_name(GP_OK)) == "Ok");
    CHECK(std::string(gp_status_name(GP_ERROR_ZERO_GAME)) == "ZeroGame");
    CHECK(std::string(gp_status_name(GP_ERROR_PARSE)) == "ParseError");
    CHECK(std::string(gp_status_name(GP_ERROR_UNKNOWN_BASIS)) == "UnknownBasis");
    CHECK(std::string(gp_status_name(GP_ERROR_INTERNAL)) == "InternalError");

    gp_coalition* s = nullptr;
    CHECK(gp_coalition_parse("{3,1}", &s) == GP_ERROR_PARSE);
    CHECK(std::string(gp_last_error_message()) ==
          "parse error at position 3: expected a player greater than the previous member");
    CHECK(s == nullptr);

    // A successful call clears the message.
    CHECK(gp_coalition_parse("{1,3}", &s) == GP_OK);
    CHECK(std::string(gp_last_error_message()).empty());
    gp_coalition_free(s);

    // Null arguments are rejected, not crashed on.
    CHECK(gp_coalition_parse(nullptr, &s) == GP_ERROR_INVALID_ARGUMENT);
    CHECK(gp_coalition_parse("{1}", nullptr) == GP_ERROR_INVALID_ARGUMENT);

    // Free functions accept NULL.
    gp_coalition_free(nullptr);
    gp_poly_free(nullptr);
    gp_game_free(nullptr);
    gp_free_string(nullptr);
    gp_poly_factorization_free(nullptr);
    gp_game_factorization_free(nullptr);
    gp_roots_free(nullptr);
}

TEST_CASE("coalition surface") {
    gp_coalition* s = nullptr;
    REQUIRE(gp_coalition_parse("{2,3}", &s) == GP_OK);

    char* text = nullptr;
    REQUIRE(gp_coalition_rank(s, &text) == GP_OK);
    CHECK(take(text) == "6");

    gp_coalition* next = nullptr;
    REQUIRE(gp_coalition_successor(s, &next) == GP_OK);
    REQUIRE(gp_coalition_format(next, &text) == GP_OK);
    CHECK(take(text) == "{1,2,3}");
    gp_coalition_free(next);

    gp_coalition* jumped = nullptr;
    REQUIRE(gp_coalition_successor_pow2(s, 3, &jumped) == GP_OK);
    REQUIRE(gp_coalition_rank(jumped, &text) == GP_OK);
    CHECK(take(text) == "14");
    gp_coalition_free(jumped);

    gp_coalition* walked = nullptr;
    REQUIRE(gp_coalition_kth_successor(s, "10", &walked) == GP_OK);
    REQUIRE(gp_coalition_rank(walked, &text) == GP_OK);
    CHECK(take(text) == "16");
    gp_coalition_free(walked);

    gp_coalition* shifted = nullptr;
    REQUIRE(gp_coalition_shift(s, 2, &shifted) == GP_OK);
    REQUIRE(gp_coalition_format(shifted, &text) == GP_OK);
    CHECK(take(text) == "{4,5}");
    gp_coalition_free(shifted);
    gp_coalition_free(s);

    gp_coalition* from_rank = nullptr;
    REQUIRE(gp_coalition_from_rank("24", &from_rank) == GP_OK);
    REQUIRE(gp_coalition_format(from_rank, &text) == GP_OK);
    CHECK(take(text) == "{4,5}");
    gp_coalition_free(from_rank);

    CHECK(gp_coalition_from_rank("-1", &from_rank) == GP_ERROR_INVALID_ARGUMENT);
    CHECK(gp_coalition_from_rank("ten", &from_rank) == GP_ERROR_PARSE);
}

TEST_CASE("polynomial surface") {
    gp_poly* p = nullptr;
    REQUIRE(gp_poly_parse("x^3 + 2*x^4", &p) == GP_OK);

    long degree = 0;
    REQUIRE(gp_poly_degree(p, &degree) == GP_OK);
    CHECK(degree == 4);

    char* text = nullptr;
    REQUIRE(gp_poly_format(p, &text) == GP_OK);
    CHECK(take(text) == "x^3 + 2*x^4");

    REQUIRE(gp_poly_coefficient(p, 4, &text) == GP_OK);
    CHECK(take(text) == "2");
    REQUIRE(gp_poly_coefficient(p, 0, &text) == GP_OK);
    CHECK(take(text) == "0");
    REQUIRE(gp_poly_coefficient(p, 100, &text) == GP_OK);
    CHECK(take(text) == "0");

    gp_poly* zero = nullptr;
    REQUIRE(gp_poly_parse("0", &zero) == GP_OK);
    REQUIRE(gp_poly_degree(zero, &degree) == GP_OK);
    CHECK(degree == -1);
    gp_poly_free(zero);

    CHECK(gp_poly_parse("x^^2", &zero) == GP_ERROR_PARSE);

    gp_poly_free(p);
}

TEST_CASE("game surface") {
    gp_game* v = nullptr;
    REQUIRE(gp_game_from_json(
                R"({"players": 3, "basis": "identity",
                    "coefficients": ["0","0","0","1","2","2","2","3"]})",
                &v) == GP_OK);

    unsigned players = 0;
    REQUIRE(gp_game_players(v, &players) == GP_OK);
    CHECK(players == 3);

    char* text = nullptr;
    REQUIRE(gp_game_basis(v, &text) == GP_OK);
    CHECK(take(text) == "identity");

    gp_game* m = nullptr;
    REQUIRE(gp_game_change_basis(v, "mobius", &m) == GP_OK);
    REQUIRE(gp_game_to_json(m, &text) == GP_OK);
    CHECK(take(text) ==
          R"({"basis":"mobius","coefficients":["0","0","0","1","2","0","0","0"],"players":3})");

    REQUIRE(gp_game_format_expression(m, &text) == GP_OK);
    CHECK(take(text) == "2*u{3} + u{1,2}");

    gp_poly* p = nullptr;
    REQUIRE(gp_game_to_poly(v, "mobius", &p) == GP_OK);
    REQUIRE(gp_poly_format(p, &text) == GP_OK);
    CHECK(take(text) == "x^3 + 2*x^4");

    gp_game* back = nullptr;
    REQUIRE(gp_game_from_poly(p, "mobius", &back) == GP_OK);
    int same = 0;
    REQUIRE(gp_game_equivalent(back, m, "mobius", &same) == GP_OK);
    CHECK(same == 1);

    gp_game* canon = nullptr;
    REQUIRE(gp_game_canonical(v, "mobius", &canon) == GP_OK);
    REQUIRE(gp_game_to_json(canon, &text) == GP_OK);
    CHECK(take(text) ==
          R"({"basis":"mobius","coefficients":["0","0","0","1/2","1","0","0","0"],"players":3})");

    gp_poly* card = nullptr;
    REQUIRE(gp_game_cardinality_poly(v, &card) == GP_OK);
    REQUIRE(gp_poly_format(card, &text) == GP_OK);
    CHECK(take(text) == "2/3*x + 5/3*x^2 + 3*x^3");

    CHECK(gp_game_change_basis(v, "fourier", &back) == GP_ERROR_UNKNOWN_BASIS);
    CHECK(gp_game_from_json("{", &back) == GP_ERROR_PARSE);

    gp_poly_free(card);
    gp_game_free(canon);
    gp_game_free(back);
    gp_poly_free(p);
    gp_game_free(m);
    gp_game_free(v);
}

TEST_CASE("game product through the C surface") {
    gp_game* v = nullptr;
    REQUIRE(gp_game_from_json(
                R"({"players": 3, "basis": "mobius",
                    "coefficients": ["0","0","0","-1","0","2","-1","0"]})",
                &v) == GP_OK);
    gp_game* w = nullptr;
    REQUIRE(gp_game_from_json(
                R"({"players": 2, "basis": "mobius", "coefficients": ["1","0","-1","1"]})",
                &w) == GP_OK);

    gp_game* prod = nullptr;
    REQUIRE(gp_game_product(v, w, "mobius", &prod) == GP_OK);
    char* text = nullptr;
    REQUIRE(gp_game_to_json(prod, &text) == GP_OK);
    CHECK(take(text) ==
          R"({"basis":"mobius","coefficients":["0","0","0","-1","0","3","-2","-2","3","-1","0","0","0","0","0","0"],"players":4})");

    gp_game_free(prod);
    gp_game_free(w);
    gp_game_free(v);
}

TEST_CASE("polynomial factorization surface") {
    gp_poly* p = nullptr;
    REQUIRE(gp_poly_parse("-1 + x^12", &p) == GP_OK);

    gp_poly_factorization* f = nullptr;
    REQUIRE(gp_poly_factor(p, &f) == GP_OK);

    char* text = nullptr;
    REQUIRE(gp_poly_factorization_unit(f, &text) == GP_OK);
    CHECK(take(text) == "1");

    unsigned long count = 0;
    REQUIRE(gp_poly_factorization_size(f, &count) == GP_OK);
    REQUIRE(count == 6);

    const char* expected[] = {"-1 + x",     "1 + x",         "1 - x + x^2",
                              "1 + x^2",    "1 + x + x^2",   "1 - x^2 + x^4"};
    for (unsigned long i = 0; i < 6; ++i) {
        gp_poly* factor = nullptr;
        REQUIRE(gp_poly_factorization_factor(f, i, &factor) == GP_OK);
        REQUIRE(gp_poly_format(factor, &text) == GP_OK);
        CHECK(take(text) == expected[i]);
        unsigned multiplicity = 0;
        REQUIRE(gp_poly_factorization_multiplicity(f, i, &multiplicity) == GP_OK);
        CHECK(multiplicity == 1);
        gp_poly_free(factor);
    }

    gp_poly* bad = nullptr;
    CHECK(gp_poly_factorization_factor(f, 6, &bad) == GP_ERROR_INVALID_ARGUMENT);

    int flag = -1;
    gp_poly* quartic = nullptr;
    REQUIRE(gp_poly_parse("1 + 2*x + 2*x^2 + 2*x^3 + 3*x^4", &quartic) == GP_OK);
    REQUIRE(gp_poly_is_irreducible(quartic, &flag) == GP_OK);
    CHECK(flag == 1);
    REQUIRE(gp_poly_is_irreducible(p, &flag) == GP_OK);
    CHECK(flag == 0);
    gp_poly_free(quartic);

    gp_poly* eis = nullptr;
    REQUIRE(gp_poly_parse("2 + 2*x + x^2", &eis) == GP_OK);
    REQUIRE(gp_poly_eisenstein(eis, "2", &flag) == GP_OK);
    CHECK(flag == 1);
    REQUIRE(gp_poly_eisenstein(eis, "3", &flag) == GP_OK);
    CHECK(flag == 0);
    CHECK(gp_poly_eisenstein(eis, "4", &flag) == GP_ERROR_NOT_PRIME);
    gp_poly_free(eis);

    gp_poly_factorization_free(f);
    gp_poly_free(p);

    gp_poly* zero = nullptr;
    REQUIRE(gp_poly_parse("0", &zero) == GP_OK);
    CHECK(gp_poly_factor(zero, &f) == GP_ERROR_ZERO_POLYNOMIAL);
    gp_poly_free(zero);
}

TEST_CASE("game factorization surface") {
    gp_game* v = nullptr;
    REQUIRE(gp_game_from_json(
                R"({"players": 2, "basis": "mobius", "coefficients": ["0","0","0","1"]})",
                &v) == GP_OK);

    gp_game_factorization* f = nullptr;
    REQUIRE(gp_game_factor(v, "mobius", &f) == GP_OK);

    char* text = nullptr;
    REQUIRE(gp_game_factorization_scalar(f, &text) == GP_OK);
    CHECK(take(text) == "1");

    unsigned long count = 0;
    REQUIRE(gp_game_factorization_size(f, &count) == GP_OK);
    REQUIRE(count == 1);

    gp_game* factor = nullptr;
    REQUIRE(gp_game_factorization_factor(f, 0, &factor) == GP_OK);
    REQUIRE(gp_game_to_json(factor, &text) == GP_OK);
    CHECK(take(text) == R"({"basis":"mobius","coefficients":["0","1"],"players":1})");
    unsigned multiplicity = 0;
    REQUIRE(gp_game_factorization_multiplicity(f, 0, &multiplicity) == GP_OK);
    CHECK(multiplicity == 3);

    gp_game_free(factor);
    gp_game_factorization_free(f);

    // The zero game cannot be factored.
    gp_game* zero = nullptr;
    REQUIRE(gp_game_from_json(
                R"({"players": 1, "basis": "mobius", "coefficients": ["0","0"]})",
                &zero) == GP_OK);
    CHECK(gp_game_factor(zero, "mobius", &f) == GP_ERROR_ZERO_GAME);
    CHECK(std::string(gp_last_error_message()) == "ZeroGame: cannot factor the zero game");
    gp_game_free(zero);
    gp_game_free(v);
}

TEST_CASE("roots surface") {
    gp_poly* p = nullptr;
    REQUIRE(gp_poly_parse("x - x^2 + x^3", &p) == GP_OK);

    gp_roots* r = nullptr;
    REQUIRE(gp_poly_roots(p, 1e-12, &r) == GP_OK);

    unsigned long count = 0;
    REQUIRE(gp_roots_size(r, &count) == GP_OK);
    REQUIRE(count == 3);

    // Sorted by (re, im): 0, then 0.5 -/+ 0.866i.
    double re = 0.0, im = 0.0;
    unsigned multiplicity = 0;
    REQUIRE(gp_roots_value(r, 0, &re, &im) == GP_OK);
    CHECK(std::abs(re) < 1e-12);
    CHECK(std::abs(im) < 1e-12);
    REQUIRE(gp_roots_multiplicity(r, 0, &multiplicity) == GP_OK);
    CHECK(multiplicity == 1);

    REQUIRE(gp_roots_value(r, 1, &re, &im) == GP_OK);
    CHECK(std::abs(re - 0.5) < 1e-12);
    CHECK(std::abs(im + 0.8660254037844386) < 1e-12);
    REQUIRE(gp_roots_value(r, 2, &re, &im) == GP_OK);
    CHECK(std::abs(re - 0.5) < 1e-12);
    CHECK(std::abs(im - 0.8660254037844386) < 1e-12);

    CHECK(gp_roots_value(r, 3, &re, &im) == GP_ERROR_INVALID_ARGUMENT);
    gp_roots_free(r);

    CHECK(gp_poly_roots(p, 0.0, &r) == GP_ERROR_INVALID_ARGUMENT);
    gp_poly_free(p);

    gp_game* v = nullptr;
    REQUIRE(gp_game_from_json(
                R"({"players": 3, "basis": "mobius",
                    "coefficients": ["0","0","0","1","2","0","0","0"]})",
                &v) == GP_OK);
    REQUIRE(gp_game_roots(v, "mobius", 1e-12, &r) == GP_OK);
    REQUIRE(gp_roots_size(r, &count) == GP_OK);
    REQUIRE(count == 2);
    REQUIRE(gp_roots_value(r, 0, &re, &im) == GP_OK);
    CHECK(std::abs(re + 0.5) < 1e-12);
    REQUIRE(gp_roots_multiplicity(r, 1, &multiplicity) == GP_OK);
    CHECK(multiplicity == 3);
    gp_roots_free(r);
    gp_game_free(v);
}

TEST_CASE("families surface") {
    unsigned long phi = 0;
    REQUIRE(gp_totient(12, &phi) == GP_OK);
    CHECK(phi == 4);
    CHECK(gp_totient(0, &phi) == GP_ERROR_INVALID_ARGUMENT);

    gp_poly* p = nullptr;
    REQUIRE(gp_cyclotomic_poly(12, &p) == GP_OK);
    char* text = nullptr;
    REQUIRE(gp_poly_format(p, &text) == GP_OK);
    CHECK(take(text) == "1 - x^2 + x^4");
    gp_poly_free(p);

    gp_game* c = nullptr;
    REQUIRE(gp_cyclotomic_game(12, "mobius", &c) == GP_OK);
    REQUIRE(gp_game_format_expression(c, &text) == GP_OK);
    CHECK(take(text) == "u{3} - u{2} + u{}");
    gp_game_free(c);

    unsigned players = 0;
    REQUIRE(gp_cyclotomic_player_count(17, &players) == GP_OK);
    CHECK(players == 5);

    const char* alphas[] = {"1/2", "3"};
    gp_game* m = nullptr;
    REQUIRE(gp_multiplicative_game("1", alphas, 2, "mobius", &m) == GP_OK);
    REQUIRE(gp_game_to_json(m, &text) == GP_OK);
    CHECK(take(text) ==
          R"({"basis":"mobius","coefficients":["3/2","-3","-1/2","1"],"players":2})");
    gp_game_free(m);

    CHECK(gp_multiplicative_game("0", alphas, 2, "mobius", &m) == GP_ERROR_INVALID_ARGUMENT);
    CHECK(gp_multiplicative_game("x", alphas, 2, "mobius", &m) == GP_ERROR_PARSE);

    gp_coalition* s = nullptr;
    REQUIRE(gp_coalition_parse("{3,4}", &s) == GP_OK);
    gp_game_factorization* f = nullptr;
    REQUIRE(gp_unit_circle_factor(s, "mobius", &f) == GP_OK);
    unsigned long count = 0;
    REQUIRE(gp_game_factorization_size(f, &count) == GP_OK);
    CHECK(count == 6);
    gp_game_factorization_free(f);
    gp_coalition_free(s);

    gp_coalition* empty = nullptr;
    REQUIRE(gp_coalition_parse("{}", &empty) == GP_OK);
    CHECK(gp_unit_circle_factor(empty, "mobius", &f) == GP_ERROR_EMPTY_COALITION);
    gp_coalition_free(empty);
}
