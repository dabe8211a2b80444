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

#include "gamepoly/gamepoly.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coalition.hpp"
#include "errors.hpp"
#include "factorize.hpp"
#include "families.hpp"
#include "formats.hpp"
#include "game.hpp"
#include "poly.hpp"
#include "representation.hpp"
#include "roots.hpp"

struct gp_coalition {
    gamepoly::coalition value;
};
struct gp_game {
    gamepoly::game value;
};
struct gp_poly {
    gamepoly::rational_poly value;
};
struct gp_poly_factorization {
    gamepoly::poly_factorization value;
};
struct gp_game_factorization {
    gamepoly::game_factorization value;
};
struct gp_roots {
    gamepoly::root_multiset value;
};

namespace {

thread_local std::string g_last_error;

gp_status map_errc(gamepoly::errc kind) noexcept {
    using gamepoly::errc;
    switch (kind) {
    case errc::length_mismatch: return GP_ERROR_LENGTH_MISMATCH;
    case errc::player_out_of_range: return GP_ERROR_PLAYER_OUT_OF_RANGE;
    case errc::zero_game: return GP_ERROR_ZERO_GAME;
    case errc::zero_polynomial: return GP_ERROR_ZERO_POLYNOMIAL;
    case errc::division_by_zero_polynomial: return GP_ERROR_DIVISION_BY_ZERO_POLYNOMIAL;
    case errc::both_zero: return GP_ERROR_BOTH_ZERO;
    case errc::degree_zero: return GP_ERROR_DEGREE_ZERO;
    case errc::not_prime: return GP_ERROR_NOT_PRIME;
    case errc::empty_coalition: return GP_ERROR_EMPTY_COALITION;
    case errc::multiplicity_mismatch: return GP_ERROR_MULTIPLICITY_MISMATCH;
    case errc::unknown_basis: return GP_ERROR_UNKNOWN_BASIS;
    case errc::invalid_argument: return GP_ERROR_INVALID_ARGUMENT;
    case errc::overflow: return GP_ERROR_OVERFLOW;
    }
    return GP_ERROR_INTERNAL;
}

/// Runs the body, translating C++ exceptions into status codes and the
/// thread-local message.  Out-parameters are only written on success.
template <typename F>
gp_status guarded(F&& body) noexcept {
    try {
        g_last_error.clear();
        body();
        return GP_OK;
    } catch (const gamepoly::parse_error& e) {
        g_last_error = e.what();
        return GP_ERROR_PARSE;
    } catch (const gamepoly::domain_error& e) {
        g_last_error = e.what();
        return map_errc(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GP_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return GP_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) throw gamepoly::domain_error(gamepoly::errc::invalid_argument, what);
}

/// Decimal integer (optional leading '-') for ranks, counts, and primes.
mpz_class parse_decimal(const char* text, const char* expected) {
    try {
        return mpz_class(text, 10);
    } catch (const std::invalid_argument&) {
        throw gamepoly::parse_error(0, expected);
    }
}

gamepoly::basis_id basis_from(const char* name) {
    require(name != nullptr, "basis name must not be null");
    return gamepoly::basis_id(std::string(name));
}

/// Rational polynomial with integer coefficients, exactly.
gamepoly::int_poly to_int_poly(const gamepoly::rational_poly& p) {
    std::vector<mpz_class> coeffs;
    coeffs.reserve(p.coefficients().size());
    for (const mpq_class& c : p.coefficients()) {
        if (c.get_den() != 1)
            throw gamepoly::domain_error(gamepoly::errc::invalid_argument,
                                         "polynomial must have integer coefficients");
        coeffs.push_back(c.get_num());
    }
    return gamepoly::int_poly(std::move(coeffs));
}

}  // namespace

extern "C" {

const char* gp_status_name(gp_status status) {
    switch (status) {
    case GP_OK: return "Ok";
    case GP_ERROR_LENGTH_MISMATCH: return "LengthMismatch";
    case GP_ERROR_PLAYER_OUT_OF_RANGE: return "PlayerOutOfRange";
    case GP_ERROR_ZERO_GAME: return "ZeroGame";
    case GP_ERROR_ZERO_POLYNOMIAL: return "ZeroPolynomial";
    case GP_ERROR_DIVISION_BY_ZERO_POLYNOMIAL: return "DivisionByZeroPolynomial";
    case GP_ERROR_BOTH_ZERO: return "BothZero";
    case GP_ERROR_DEGREE_ZERO: return "DegreeZero";
    case GP_ERROR_NOT_PRIME: return "NotPrime";
    case GP_ERROR_EMPTY_COALITION: return "EmptyCoalition";
    case GP_ERROR_MULTIPLICITY_MISMATCH: return "MultiplicityMismatch";
    case GP_ERROR_UNKNOWN_BASIS: return "UnknownBasis";
    case GP_ERROR_INVALID_ARGUMENT: return "InvalidArgument";
    case GP_ERROR_OVERFLOW: return "Overflow";
    case GP_ERROR_PARSE: return "ParseError";
    case GP_ERROR_INTERNAL: return "InternalError";
    }
    return "InternalError";
}

const char* gp_last_error_message(void) { return g_last_error.c_str(); }

void gp_free_string(char* s) { std::free(s); }

/* ---- Coalitions --------------------------------------------------------- */

gp_status gp_coalition_parse(const char* text, gp_coalition** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new gp_coalition{gamepoly::parse_coalition(text)};
    });
}

gp_status gp_coalition_from_rank(const char* rank_decimal, gp_coalition** out) {
    return guarded([&] {
        require(rank_decimal != nullptr && out != nullptr, "null argument");
        mpz_class rank = parse_decimal(rank_decimal, "a decimal integer");
        *out = new gp_coalition{gamepoly::coalition::from_rank(rank)};
    });
}

gp_status gp_coalition_format(const gp_coalition* s, char** out) {
    return guarded([&] {
        require(s != nullptr && out != nullptr, "null argument");
        *out = dup_string(gamepoly::format_coalition(s->value));
    });
}

gp_status gp_coalition_rank(const gp_coalition* s, char** out) {
    return guarded([&] {
        require(s != nullptr && out != nullptr, "null argument");
        *out = dup_string(s->value.rank().get_str());
    });
}

gp_status gp_coalition_successor(const gp_coalition* s, gp_coalition** out) {
    return guarded([&] {
        require(s != nullptr && out != nullptr, "null argument");
        *out = new gp_coalition{s->value.successor()};
    });
}

gp_status gp_coalition_successor_pow2(const gp_coalition* s, unsigned long k,
                                      gp_coalition** out) {
    return guarded([&] {
        require(s != nullptr && out != nullptr, "null argument");
        *out = new gp_coalition{s->value.successor_pow2(k)};
    });
}

gp_status gp_coalition_kth_successor(const gp_coalition* s, const char* k_decimal,
                                     gp_coalition** out) {
    return guarded([&] {
        require(s != nullptr && k_decimal != nullptr && out != nullptr, "null argument");
        mpz_class k = parse_decimal(k_decimal, "a decimal integer");
        *out = new gp_coalition{s->value.kth_successor(k)};
    });
}

gp_status gp_coalition_shift(const gp_coalition* s, unsigned long k, gp_coalition** out) {
    return guarded([&] {
        require(s != nullptr && out != nullptr, "null argument");
        *out = new gp_coalition{s->value.shifted(k)};
    });
}

void gp_coalition_free(gp_coalition* s) { delete s; }

/* ---- Polynomials --------------------------------------------------------- */

gp_status gp_poly_parse(const char* text, gp_poly** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new gp_poly{gamepoly::parse_poly(text)};
    });
}

gp_status gp_poly_format(const gp_poly* p, char** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        *out = dup_string(gamepoly::format_poly(p->value));
    });
}

gp_status gp_poly_degree(const gp_poly* p, long* out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        *out = p->value.degree();
    });
}

gp_status gp_poly_coefficient(const gp_poly* p, unsigned long i, char** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        *out = dup_string(gamepoly::format_rational(p->value[i]));
    });
}

void gp_poly_free(gp_poly* p) { delete p; }

/* ---- Games --------------------------------------------------------------- */

gp_status gp_game_from_json(const char* text, gp_game** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new gp_game{gamepoly::parse_game_json(text)};
    });
}

gp_status gp_game_to_json(const gp_game* v, char** out) {
    return guarded([&] {
        require(v != nullptr && out != nullptr, "null argument");
        *out = dup_string(gamepoly::format_game_json(v->value));
    });
}

gp_status gp_game_format_expression(const gp_game* v, char** out) {
    return guarded([&] {
        require(v != nullptr && out != nullptr, "null argument");
        *out = dup_string(gamepoly::format_game_expression(v->value));
    });
}

gp_status gp_game_players(const gp_game* v, unsigned* out) {
    return guarded([&] {
        require(v != nullptr && out != nullptr, "null argument");
        *out = v->value.players();
    });
}

gp_status gp_game_basis(const gp_game* v, char** out) {
    return guarded([&] {
        require(v != nullptr && out != nullptr, "null argument");
        *out = dup_string(v->value.basis().name());
    });
}

gp_status gp_game_change_basis(const gp_game* v, const char* basis, gp_game** out) {
    return guarded([&] {
        require(v != nullptr && out != nullptr, "null argument");
        *out = new gp_game{v->value.in_basis(basis_from(basis))};
    });
}

gp_status gp_game_to_poly(const gp_game* v, const char* basis, gp_poly** out) {
    return guarded([&] {
        require(v != nullptr && out != nullptr, "null argument");
        *out = new gp_poly{gamepoly::to_poly(v->value, basis_from(basis))};
    });
}

gp_status gp_game_from_poly(const gp_poly* p, const char* basis, gp_game** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        *out = new gp_game{gamepoly::from_poly(p->value, basis_from(basis))};
    });
}

gp_status gp_game_canonical(const gp_game* v, const char* basis, gp_game** out) {
    return guarded([&] {
        require(v != nullptr && out != nullptr, "null argument");
        *out = new gp_game{gamepoly::canonical_representative(v->value, basis_from(basis))};
    });
}

gp_status gp_game_equivalent(const gp_game* v, const gp_game* w, const char* basis, int* out) {
    return guarded([&] {
        require(v != nullptr && w != nullptr && out != nullptr, "null argument");
        *out = gamepoly::equivalent(v->value, w->value, basis_from(basis)) ? 1 : 0;
    });
}

gp_status gp_game_product(const gp_game* v, const gp_game* w, const char* basis, gp_game** out) {
    return guarded([&] {
        require(v != nullptr && w != nullptr && out != nullptr, "null argument");
        *out = new gp_game{gamepoly::product(v->value, w->value, basis_from(basis))};
    });
}

gp_status gp_game_cardinality_poly(const gp_game* v, gp_poly** out) {
    return guarded([&] {
        require(v != nullptr && out != nullptr, "null argument");
        *out = new gp_poly{gamepoly::cardinality_polynomial(v->value)};
    });
}

void gp_game_free(gp_game* v) { delete v; }

/* ---- Factorization ------------------------------------------------------- */

gp_status gp_poly_factor(const gp_poly* p, gp_poly_factorization** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        *out = new gp_poly_factorization{gamepoly::factor_over_q(p->value)};
    });
}

gp_status gp_poly_factorization_unit(const gp_poly_factorization* f, char** out) {
    return guarded([&] {
        require(f != nullptr && out != nullptr, "null argument");
        *out = dup_string(gamepoly::format_rational(f->value.unit));
    });
}

gp_status gp_poly_factorization_size(const gp_poly_factorization* f, unsigned long* out) {
    return guarded([&] {
        require(f != nullptr && out != nullptr, "null argument");
        *out = f->value.factors.size();
    });
}

gp_status gp_poly_factorization_factor(const gp_poly_factorization* f, unsigned long i,
                                       gp_poly** out) {
    return guarded([&] {
        require(f != nullptr && out != nullptr, "null argument");
        require(i < f->value.factors.size(), "factor index out of range");
        *out = new gp_poly{f->value.factors[i].factor};
    });
}

gp_status gp_poly_factorization_multiplicity(const gp_poly_factorization* f, unsigned long i,
                                             unsigned* out) {
    return guarded([&] {
        require(f != nullptr && out != nullptr, "null argument");
        require(i < f->value.factors.size(), "factor index out of range");
        *out = f->value.factors[i].multiplicity;
    });
}

void gp_poly_factorization_free(gp_poly_factorization* f) { delete f; }

gp_status gp_poly_is_irreducible(const gp_poly* p, int* out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        *out = gamepoly::is_irreducible(p->value) ? 1 : 0;
    });
}

gp_status gp_poly_eisenstein(const gp_poly* p, const char* prime_decimal, int* out) {
    return guarded([&] {
        require(p != nullptr && prime_decimal != nullptr && out != nullptr, "null argument");
        mpz_class prime = parse_decimal(prime_decimal, "a decimal integer");
        *out = gamepoly::eisenstein_check(to_int_poly(p->value), prime) ? 1 : 0;
    });
}

gp_status gp_game_factor(const gp_game* v, const char* basis, gp_game_factorization** out) {
    return guarded([&] {
        require(v != nullptr && out != nullptr, "null argument");
        *out = new gp_game_factorization{gamepoly::factor_game(v->value, basis_from(basis))};
    });
}

gp_status gp_game_factorization_scalar(const gp_game_factorization* f, char** out) {
    return guarded([&] {
        require(f != nullptr && out != nullptr, "null argument");
        *out = dup_string(gamepoly::format_rational(f->value.scalar));
    });
}

gp_status gp_game_factorization_size(const gp_game_factorization* f, unsigned long* out) {
    return guarded([&] {
        require(f != nullptr && out != nullptr, "null argument");
        *out = f->value.factors.size();
    });
}

gp_status gp_game_factorization_factor(const gp_game_factorization* f, unsigned long i,
                                       gp_game** out) {
    return guarded([&] {
        require(f != nullptr && out != nullptr, "null argument");
        require(i < f->value.factors.size(), "factor index out of range");
        *out = new gp_game{f->value.factors[i].factor};
    });
}

gp_status gp_game_factorization_multiplicity(const gp_game_factorization* f, unsigned long i,
                                             unsigned* out) {
    return guarded([&] {
        require(f != nullptr && out != nullptr, "null argument");
        require(i < f->value.factors.size(), "factor index out of range");
        *out = f->value.factors[i].multiplicity;
    });
}

void gp_game_factorization_free(gp_game_factorization* f) { delete f; }

/* ---- Roots ---------------------------------------------------------------- */

gp_status gp_poly_roots(const gp_poly* p, double tol, gp_roots** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        *out = new gp_roots{gamepoly::find_roots(p->value, tol)};
    });
}

gp_status gp_game_roots(const gp_game* v, const char* basis, double tol, gp_roots** out) {
    return guarded([&] {
        require(v != nullptr && out != nullptr, "null argument");
        *out = new gp_roots{gamepoly::algebraic_representation(v->value, basis_from(basis), tol)};
    });
}

gp_status gp_roots_size(const gp_roots* r, unsigned long* out) {
    return guarded([&] {
        require(r != nullptr && out != nullptr, "null argument");
        *out = r->value.entries.size();
    });
}

gp_status gp_roots_value(const gp_roots* r, unsigned long i, double* re, double* im) {
    return guarded([&] {
        require(r != nullptr && re != nullptr && im != nullptr, "null argument");
        require(i < r->value.entries.size(), "root index out of range");
        *re = r->value.entries[i].value.real();
        *im = r->value.entries[i].value.imag();
    });
}

gp_status gp_roots_multiplicity(const gp_roots* r, unsigned long i, unsigned* out) {
    return guarded([&] {
        require(r != nullptr && out != nullptr, "null argument");
        require(i < r->value.entries.size(), "root index out of range");
        *out = r->value.entries[i].multiplicity;
    });
}

void gp_roots_free(gp_roots* r) { delete r; }

/* ---- Families -------------------------------------------------------------- */

gp_status gp_totient(unsigned long n, unsigned long* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = gamepoly::totient(n);
    });
}

gp_status gp_cyclotomic_poly(unsigned long n, gp_poly** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = new gp_poly{gamepoly::cyclotomic_poly(n).to_rational()};
    });
}

gp_status gp_cyclotomic_game(unsigned long n, const char* basis, gp_game** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = new gp_game{gamepoly::cyclotomic_game(n, basis_from(basis))};
    });
}

gp_status gp_cyclotomic_player_count(unsigned long n, unsigned* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = gamepoly::cyclotomic_player_count(n);
    });
}

gp_status gp_multiplicative_game(const char* beta, const char* const* alphas,
                                 unsigned long alpha_count, const char* basis, gp_game** out) {
    return guarded([&] {
        require(beta != nullptr && alphas != nullptr && out != nullptr, "null argument");
        gamepoly::multiplicative_spec spec;
        spec.beta = gamepoly::parse_rational(beta);
        spec.alphas.reserve(alpha_count);
        for (unsigned long i = 0; i < alpha_count; ++i) {
            require(alphas[i] != nullptr, "null argument");
            spec.alphas.push_back(gamepoly::parse_rational(alphas[i]));
        }
        *out = new gp_game{gamepoly::multiplicative_game(spec, basis_from(basis))};
    });
}

gp_status gp_unit_circle_factor(const gp_coalition* s, const char* basis,
                                gp_game_factorization** out) {
    return guarded([&] {
        require(s != nullptr && out != nullptr, "null argument");
        *out = new gp_game_factorization{
            gamepoly::factor_unit_circle_game(s->value, basis_from(basis))};
    });
}

}  // extern "C"
