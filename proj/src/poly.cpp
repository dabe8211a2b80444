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

#include "poly.hpp"

#include <algorithm>

#include "errors.hpp"

namespace gamepoly {

namespace {

const mpq_class kZeroQ(0);
const mpz_class kZeroZ(0);

template <typename Coeff>
void strip_trailing_zeros(std::vector<Coeff>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}

}  // namespace

rational_poly::rational_poly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    strip_trailing_zeros(coeffs_);
}

rational_poly rational_poly::constant(const mpq_class& c) {
    return rational_poly(std::vector<mpq_class>{c});
}

rational_poly rational_poly::monomial(std::size_t degree, const mpq_class& c) {
    std::vector<mpq_class> coeffs(degree + 1, kZeroQ);
    coeffs[degree] = c;
    return rational_poly(std::move(coeffs));
}

const mpq_class& rational_poly::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZeroQ;
}

const mpq_class& rational_poly::leading_coefficient() const {
    if (is_zero())
        throw domain_error(errc::zero_polynomial, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

rational_poly rational_poly::derivative() const {
    if (coeffs_.size() <= 1) return rational_poly();
    std::vector<mpq_class> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = mpq_class(static_cast<unsigned long>(i)) * coeffs_[i];
    return rational_poly(std::move(out));
}

rational_poly operator+(const rational_poly& a, const rational_poly& b) {
    std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), kZeroQ);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a[i] + b[i];
    return rational_poly(std::move(out));
}

rational_poly operator-(const rational_poly& a, const rational_poly& b) {
    std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), kZeroQ);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a[i] - b[i];
    return rational_poly(std::move(out));
}

rational_poly operator-(const rational_poly& a) {
    std::vector<mpq_class> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = -a.coeffs_[i];
    return rational_poly(std::move(out));
}

rational_poly operator*(const rational_poly& a, const rational_poly& b) {
    if (a.is_zero() || b.is_zero()) return rational_poly();
    std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, kZeroQ);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return rational_poly(std::move(out));
}

rational_poly operator*(const mpq_class& c, const rational_poly& a) {
    std::vector<mpq_class> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = c * a.coeffs_[i];
    return rational_poly(std::move(out));
}

int_poly::int_poly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    strip_trailing_zeros(coeffs_);
}

int_poly int_poly::monomial(std::size_t degree, const mpz_class& c) {
    std::vector<mpz_class> coeffs(degree + 1, kZeroZ);
    coeffs[degree] = c;
    return int_poly(std::move(coeffs));
}

const mpz_class& int_poly::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZeroZ;
}

const mpz_class& int_poly::leading_coefficient() const {
    if (is_zero())
        throw domain_error(errc::zero_polynomial, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

rational_poly int_poly::to_rational() const {
    std::vector<mpq_class> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = mpq_class(coeffs_[i]);
    return rational_poly(std::move(out));
}

int_poly operator*(const int_poly& a, const int_poly& b) {
    if (a.is_zero() || b.is_zero()) return int_poly();
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, kZeroZ);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return int_poly(std::move(out));
}

std::pair<rational_poly, rational_poly> divide_with_remainder(const rational_poly& p,
                                                              const rational_poly& d) {
    if (d.is_zero())
        throw domain_error(errc::division_by_zero_polynomial, "division by the zero polynomial");
    if (p.is_zero() || p.degree() < d.degree())
        return {rational_poly(), p};

    std::vector<mpq_class> rem(p.coefficients());
    std::vector<mpq_class> quot(p.degree() - d.degree() + 1, mpq_class(0));
    const mpq_class& lead = d.leading_coefficient();
    for (int k = p.degree() - d.degree(); k >= 0; --k) {
        mpq_class c = rem[k + d.degree()] / lead;
        if (c == 0) continue;
        quot[k] = c;
        for (int i = 0; i <= d.degree(); ++i)
            rem[k + i] -= c * d[i];
    }
    return {rational_poly(std::move(quot)), rational_poly(std::move(rem))};
}

bool try_divide_exact(const int_poly& a, const int_poly& d, int_poly& quotient) {
    if (d.is_zero())
        throw domain_error(errc::division_by_zero_polynomial, "division by the zero polynomial");
    if (a.is_zero()) {
        quotient = int_poly();
        return true;
    }
    if (a.degree() < d.degree()) return false;

    // Plain long division with a divisibility check at every step: it fails
    // exactly when the rational quotient is not an integer polynomial or the
    // remainder is nonzero.
    std::vector<mpz_class> rem = a.coefficients();
    std::vector<mpz_class> quot(a.degree() - d.degree() + 1, mpz_class(0));
    const mpz_class& lead = d.leading_coefficient();
    for (std::size_t k = quot.size(); k-- > 0;) {
        mpz_class& top = rem[k + static_cast<std::size_t>(d.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        mpz_class c = top / lead;
        quot[k] = c;
        for (int i = 0; i <= d.degree(); ++i)
            rem[k + static_cast<std::size_t>(i)] -= c * d[static_cast<std::size_t>(i)];
    }
    for (const mpz_class& c : rem)
        if (c != 0) return false;
    quotient = int_poly(std::move(quot));
    return true;
}

rational_poly poly_gcd(const rational_poly& p, const rational_poly& q) {
    if (p.is_zero() && q.is_zero())
        throw domain_error(errc::both_zero, "gcd of two zero polynomials");
    rational_poly a = p, b = q;
    while (!b.is_zero()) {
        rational_poly r = divide_with_remainder(a, b).second;
        a = b;
        b = r;
    }
    // Monic normalization makes the gcd unique.
    return mpq_class(1 / a.leading_coefficient()) * a;
}

content_primitive_result content_primitive(const rational_poly& p) {
    if (p.is_zero())
        throw domain_error(errc::zero_polynomial, "zero polynomial has no content");

    mpz_class den_lcm(1);
    for (const mpq_class& c : p.coefficients())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());

    std::vector<mpz_class> scaled(p.coefficients().size());
    mpz_class num_gcd(0);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        mpq_class v = p[i] * mpq_class(den_lcm);
        scaled[i] = v.get_num();  // denominator is 1 by construction
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled[i].get_mpz_t());
    }
    if (scaled.back() < 0) num_gcd = -num_gcd;

    for (mpz_class& c : scaled)
        c /= num_gcd;

    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    return {content, int_poly(std::move(scaled))};
}

std::complex<double> evaluate(const rational_poly& p, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = p.coefficients().size(); i-- > 0;)
        acc = acc * z + p[i].get_d();
    return acc;
}

std::pair<mpq_class, mpq_class> vieta_ratios(const rational_poly& p) {
    if (p.is_zero())
        throw domain_error(errc::zero_polynomial, "Vieta ratios of the zero polynomial");
    if (p.degree() == 0)
        throw domain_error(errc::degree_zero, "Vieta ratios need degree >= 1");
    const int n = p.degree();
    mpq_class product = p[0] / p[static_cast<std::size_t>(n)];
    if (n % 2 != 0) product = -product;
    mpq_class sum = -p[static_cast<std::size_t>(n) - 1] / p[static_cast<std::size_t>(n)];
    return {product, sum};
}

}  // namespace gamepoly
