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

#ifndef GAMEPOLY_POLY_HPP
#define GAMEPOLY_POLY_HPP

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace gamepoly {

/// Dense univariate polynomial over Q.  Coefficients are stored in ascending
/// degree with no trailing zero entries, so the zero polynomial is the empty
/// vector and degree() of a nonzero polynomial is coefficients().size() - 1.
class rational_poly {
public:
    /// The zero polynomial.
    rational_poly() = default;

    /// From an ascending coefficient vector; trailing zeros are stripped.
    explicit rational_poly(std::vector<mpq_class> coeffs);

    static rational_poly constant(const mpq_class& c);
    static rational_poly monomial(std::size_t degree, const mpq_class& c = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of a nonzero polynomial; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i (zero beyond the stored range).
    const mpq_class& operator[](std::size_t i) const;

    /// Leading coefficient; requires a nonzero polynomial.
    const mpq_class& leading_coefficient() const;

    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

    rational_poly derivative() const;

    friend rational_poly operator+(const rational_poly& a, const rational_poly& b);
    friend rational_poly operator-(const rational_poly& a, const rational_poly& b);
    friend rational_poly operator-(const rational_poly& a);
    friend rational_poly operator*(const rational_poly& a, const rational_poly& b);
    friend rational_poly operator*(const mpq_class& c, const rational_poly& a);
    friend bool operator==(const rational_poly& a, const rational_poly& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<mpq_class> coeffs_;
};

/// Dense univariate polynomial over Z, same storage conventions.  Thin by
/// design: the factorization engine does its modular work in dedicated
/// layers, so this type only carries exact integer coefficients around.
class int_poly {
public:
    int_poly() = default;
    explicit int_poly(std::vector<mpz_class> coeffs);

    static int_poly monomial(std::size_t degree, const mpz_class& c = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& operator[](std::size_t i) const;
    const mpz_class& leading_coefficient() const;
    const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }

    rational_poly to_rational() const;

    friend int_poly operator*(const int_poly& a, const int_poly& b);
    friend bool operator==(const int_poly& a, const int_poly& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<mpz_class> coeffs_;
};

/// Euclidean division: p = q*d + r with r = 0 or deg r < deg d.
/// Raises DivisionByZeroPolynomial if d is zero.
std::pair<rational_poly, rational_poly> divide_with_remainder(const rational_poly& p,
                                                              const rational_poly& d);

/// Exact division over Z: quotient is set and true returned only when d
/// divides a in Z[x].  Raises DivisionByZeroPolynomial if d is zero.
bool try_divide_exact(const int_poly& a, const int_poly& d, int_poly& quotient);

/// Monic greatest common divisor (Euclid with monic normalization).
/// gcd(p, 0) is the monic multiple of p; raises BothZero if both are zero.
rational_poly poly_gcd(const rational_poly& p, const rational_poly& q);

struct content_primitive_result {
    mpq_class content;    ///< rational content, sign chosen so that ...
    int_poly primitive;   ///< ... the primitive part has positive leading coefficient
};

/// Gauss decomposition p = content * primitive with primitive in Z[x],
/// coprime integer coefficients and positive leading coefficient.
/// Raises ZeroPolynomial for the zero polynomial.
content_primitive_result content_primitive(const rational_poly& p);

/// Horner evaluation in double-precision complex arithmetic.
std::complex<double> evaluate(const rational_poly& p, std::complex<double> z);

/// (product of roots, sum of roots) by Vieta:
/// ((-1)^n a_0 / a_n, -a_{n-1} / a_n) for degree n >= 1.
/// Raises DegreeZero for constants and ZeroPolynomial for zero.
std::pair<mpq_class, mpq_class> vieta_ratios(const rational_poly& p);

}  // namespace gamepoly

#endif  // GAMEPOLY_POLY_HPP
