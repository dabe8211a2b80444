/* Copyright 2026 The gamepoly authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the gamepoly library: transferable-utility games as formal
 * polynomials over the rationals, with exact basis transforms, products,
 * factorization into irreducible games, numeric root extraction, and the
 * multiplicative and cyclotomic game families.
 *
 * Conventions:
 *  - Every fallible function returns a gp_status and writes results through
 *    out-parameters, which are only modified on GP_OK.
 *  - On failure, gp_last_error_message() returns a human-readable message
 *    for the calling thread, valid until the thread's next gamepoly call.
 *  - Strings returned through char** out-parameters are heap-allocated;
 *    release them with gp_free_string.  Handles are released with their
 *    matching *_free function.  All *_free functions accept NULL.
 *  - Rationals cross the boundary as strings ("5", "-7/3"); coalition ranks
 *    and iteration counts as decimal integer strings, so they are unbounded.
 *  - Coalition text is "{}" or "{1,3,4}" (strictly increasing players).
 *    Polynomial text is e.g. "1 - x^2 + 3/4*x^5".  Game text is a JSON
 *    document {"players":n,"basis":name,"coefficients":[... 2^n strings]}.
 */

#ifndef GAMEPOLY_GAMEPOLY_H
#define GAMEPOLY_GAMEPOLY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gp_status {
    GP_OK = 0,
    GP_ERROR_LENGTH_MISMATCH,
    GP_ERROR_PLAYER_OUT_OF_RANGE,
    GP_ERROR_ZERO_GAME,
    GP_ERROR_ZERO_POLYNOMIAL,
    GP_ERROR_DIVISION_BY_ZERO_POLYNOMIAL,
    GP_ERROR_BOTH_ZERO,
    GP_ERROR_DEGREE_ZERO,
    GP_ERROR_NOT_PRIME,
    GP_ERROR_EMPTY_COALITION,
    GP_ERROR_MULTIPLICITY_MISMATCH,
    GP_ERROR_UNKNOWN_BASIS,
    GP_ERROR_INVALID_ARGUMENT,
    GP_ERROR_OVERFLOW,
    GP_ERROR_PARSE,
    GP_ERROR_INTERNAL
} gp_status;

/* Stable name of a status ("LengthMismatch", "ParseError", ...); static
 * storage, never freed. */
const char* gp_status_name(gp_status status);

/* Message describing this thread's most recent failure; empty string if no
 * call has failed yet.  Parse failures carry the position and the expected
 * token.  Valid until the next gamepoly call on the same thread. */
const char* gp_last_error_message(void);

/* Releases a string returned by any char** out-parameter. */
void gp_free_string(char* s);

/* Opaque handles. */
typedef struct gp_coalition gp_coalition;
typedef struct gp_game gp_game;
typedef struct gp_poly gp_poly;
typedef struct gp_poly_factorization gp_poly_factorization;
typedef struct gp_game_factorization gp_game_factorization;
typedef struct gp_roots gp_roots;

/* ---- Coalitions and the natural order ---------------------------------- */

gp_status gp_coalition_parse(const char* text, gp_coalition** out);
gp_status gp_coalition_from_rank(const char* rank_decimal, gp_coalition** out);
gp_status gp_coalition_format(const gp_coalition* s, char** out);
/* Rank of the coalition in the natural order (eta), as a decimal string. */
gp_status gp_coalition_rank(const gp_coalition* s, char** out);
gp_status gp_coalition_successor(const gp_coalition* s, gp_coalition** out);
/* 2^k-th successor in one cascade step. */
gp_status gp_coalition_successor_pow2(const gp_coalition* s, unsigned long k, gp_coalition** out);
/* k-th successor for arbitrary nonnegative decimal k. */
gp_status gp_coalition_kth_successor(const gp_coalition* s, const char* k_decimal,
                                     gp_coalition** out);
/* Shift: every player raised by k (rank multiplied by 2^k). */
gp_status gp_coalition_shift(const gp_coalition* s, unsigned long k, gp_coalition** out);
void gp_coalition_free(gp_coalition* s);

/* ---- Polynomials over Q ------------------------------------------------- */

gp_status gp_poly_parse(const char* text, gp_poly** out);
/* Canonical ascending-degree text; parse(format(p)) == p. */
gp_status gp_poly_format(const gp_poly* p, char** out);
/* Degree; -1 for the zero polynomial. */
gp_status gp_poly_degree(const gp_poly* p, long* out);
/* Coefficient of x^i as a rational string (zero beyond the degree). */
gp_status gp_poly_coefficient(const gp_poly* p, unsigned long i, char** out);
void gp_poly_free(gp_poly* p);

/* ---- Games -------------------------------------------------------------- */

gp_status gp_game_from_json(const char* text, gp_game** out);
gp_status gp_game_to_json(const gp_game* v, char** out);
/* Linear-combination text over basis games, e.g. "u{3} - u{2} + u{}". */
gp_status gp_game_format_expression(const gp_game* v, char** out);
gp_status gp_game_players(const gp_game* v, unsigned* out);
gp_status gp_game_basis(const gp_game* v, char** out);
/* The same game re-expressed in another registered basis (exact). */
gp_status gp_game_change_basis(const gp_game* v, const char* basis, gp_game** out);

/* Formal polynomial of the game relative to a basis, and its inverse (the
 * minimal game of a polynomial). */
gp_status gp_game_to_poly(const gp_game* v, const char* basis, gp_poly** out);
gp_status gp_game_from_poly(const gp_poly* p, const char* basis, gp_game** out);

/* Canonical representative: the unique minimal monic game equivalent to v. */
gp_status gp_game_canonical(const gp_game* v, const char* basis, gp_game** out);
/* Equivalence (nonzero scalar multiple); writes 1 or 0. */
gp_status gp_game_equivalent(const gp_game* v, const gp_game* w, const char* basis, int* out);
/* Product: the game of the product polynomial, on minimal players. */
gp_status gp_game_product(const gp_game* v, const gp_game* w, const char* basis, gp_game** out);
/* Polynomial whose x^k coefficient is the cardinality-k average of v. */
gp_status gp_game_cardinality_poly(const gp_game* v, gp_poly** out);
void gp_game_free(gp_game* v);

/* ---- Factorization ------------------------------------------------------ */

/* Complete factorization over Q into monic irreducibles (deterministic; the
 * environment variable GAMEPOLY_SEED overrides the engine's fixed seed). */
gp_status gp_poly_factor(const gp_poly* p, gp_poly_factorization** out);
gp_status gp_poly_factorization_unit(const gp_poly_factorization* f, char** out);
gp_status gp_poly_factorization_size(const gp_poly_factorization* f, unsigned long* out);
gp_status gp_poly_factorization_factor(const gp_poly_factorization* f, unsigned long i,
                                       gp_poly** out);
gp_status gp_poly_factorization_multiplicity(const gp_poly_factorization* f, unsigned long i,
                                             unsigned* out);
void gp_poly_factorization_free(gp_poly_factorization* f);

/* Irreducibility over Q; writes 1 or 0. */
gp_status gp_poly_is_irreducible(const gp_poly* p, int* out);
/* Eisenstein's criterion at a prime (decimal string); the polynomial must
 * have integer coefficients.  Writes 1 or 0; sufficient, never necessary. */
gp_status gp_poly_eisenstein(const gp_poly* p, const char* prime_decimal, int* out);

/* Factorization of a game into irreducible games relative to a basis. */
gp_status gp_game_factor(const gp_game* v, const char* basis, gp_game_factorization** out);
gp_status gp_game_factorization_scalar(const gp_game_factorization* f, char** out);
gp_status gp_game_factorization_size(const gp_game_factorization* f, unsigned long* out);
gp_status gp_game_factorization_factor(const gp_game_factorization* f, unsigned long i,
                                       gp_game** out);
gp_status gp_game_factorization_multiplicity(const gp_game_factorization* f, unsigned long i,
                                             unsigned* out);
void gp_game_factorization_free(gp_game_factorization* f);

/* ---- Roots (algebraic representation) ----------------------------------- */

/* All complex roots with multiplicity; tol > 0 is the convergence and
 * clustering tolerance (1e-12 is the conventional default). */
gp_status gp_poly_roots(const gp_poly* p, double tol, gp_roots** out);
/* Roots of the game's polynomial in the named basis. */
gp_status gp_game_roots(const gp_game* v, const char* basis, double tol, gp_roots** out);
gp_status gp_roots_size(const gp_roots* r, unsigned long* out);
gp_status gp_roots_value(const gp_roots* r, unsigned long i, double* re, double* im);
gp_status gp_roots_multiplicity(const gp_roots* r, unsigned long i, unsigned* out);
void gp_roots_free(gp_roots* r);

/* ---- Families ----------------------------------------------------------- */

gp_status gp_totient(unsigned long n, unsigned long* out);
/* The n-th cyclotomic polynomial (exact integer coefficients). */
gp_status gp_cyclotomic_poly(unsigned long n, gp_poly** out);
/* Canonical game of the n-th cyclotomic polynomial. */
gp_status gp_cyclotomic_game(unsigned long n, const char* basis, gp_game** out);
gp_status gp_cyclotomic_player_count(unsigned long n, unsigned* out);
/* beta * (x - a1)(x^2 - a2)...(x^(2^(n-1)) - an) as an n-player game; beta
 * and the alphas are rational strings. */
gp_status gp_multiplicative_game(const char* beta, const char* const* alphas,
                                 unsigned long alpha_count, const char* basis, gp_game** out);
/* Factorization of the game with polynomial x^eta(s) - 1 into cyclotomic
 * games, one per divisor of eta(s), bypassing the general engine. */
gp_status gp_unit_circle_factor(const gp_coalition* s, const char* basis,
                                gp_game_factorization** out);

#ifdef __cplusplus
}
#endif

#endif /* GAMEPOLY_GAMEPOLY_H */
