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

#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "factorize.hpp"
#include "representation.hpp"

namespace gamepoly {

namespace {

/// Horner evaluation of an ascending real-coefficient polynomial and its
/// derivative at z.
std::pair<std::complex<double>, std::complex<double>> eval_with_derivative(
        const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> value = c.back();
    std::complex<double> deriv = 0.0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        deriv = deriv * z + value;
        value = value * z + c[i];
    }
    return {value, deriv};
}

/// Simultaneous Aberth-Ehrlich iteration.  `c` holds the ascending
/// coefficients of a monic squarefree polynomial of degree >= 1, so every
/// root is simple and the corrections stay well conditioned.
std::vector<std::complex<double>> aberth_roots(const std::vector<double>& c, double tol) {
    const std::size_t n = c.size() - 1;
    if (n == 1) return {std::complex<double>(-c[0], 0.0)};

    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
    radius += 1.0;  // Cauchy bound for a monic polynomial

    // Initial guesses on the bounding circle, rotated off the axes so real
    // roots are approached from genuinely complex directions.
    constexpr double kAngularOffset = 0.4;
    std::vector<std::complex<double>> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n)
                       + kAngularOffset;
        z[j] = radius * std::complex<double>(std::cos(angle), std::sin(angle));
    }

    constexpr int kMaxIterations = 500;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        double max_step = 0.0;
        double scale = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            auto [value, deriv] = eval_with_derivative(c, z[j]);
            std::complex<double> newton = value / deriv;
            std::complex<double> repulsion = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) repulsion += 1.0 / (z[j] - z[k]);
            std::complex<double> step = newton / (1.0 - newton * repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                // Coincident iterates or a vanishing derivative: nudge this
                // iterate deterministically and keep going.
                double angle = 2.0 * std::numbers::pi
                               * (static_cast<double>(j) + 0.5) / static_cast<double>(n);
                step = 1e-3 * radius * std::complex<double>(std::cos(angle), std::sin(angle));
            }
            z[j] -= step;
            max_step = std::max(max_step, std::abs(step));
            scale = std::max(scale, std::abs(z[j]));
        }
        if (max_step < tol) break;
        // Stagnation guard: steps at the machine-precision floor cannot
        // shrink further even if tol asks for more.
        if (max_step < 16.0 * std::numeric_limits<double>::epsilon() * scale) break;
    }
    return z;
}

/// Clusters roots of one squarefree part that lie within tol of each other
/// (sorted greedy chaining) and appends one entry per cluster, valued at the
/// cluster centroid with the part multiplicity scaled by the cluster size.
void append_clustered(std::vector<root_entry>& entries, std::vector<std::complex<double>> roots,
                      unsigned multiplicity, double tol) {
    std::sort(roots.begin(), roots.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  if (a.real() != b.real()) return a.real() < b.real();
                  return a.imag() < b.imag();
              });
    std::size_t i = 0;
    while (i < roots.size()) {
        std::complex<double> sum = roots[i];
        std::size_t count = 1;
        while (i + count < roots.size()
               && std::abs(roots[i + count] - roots[i + count - 1]) <= tol) {
            sum += roots[i + count];
            ++count;
        }
        entries.push_back({sum / static_cast<double>(count),
                           multiplicity * static_cast<unsigned>(count)});
        i += count;
    }
}

}  // namespace

std::size_t root_multiset::total_multiplicity() const {
    std::size_t total = 0;
    for (const root_entry& e : entries) total += e.multiplicity;
    return total;
}

root_multiset find_roots(const rational_poly& p, double tol) {
    if (p.is_zero())
        throw domain_error(errc::zero_polynomial, "cannot extract roots of the zero polynomial");
    if (p.degree() == 0)
        throw domain_error(errc::degree_zero, "a constant polynomial has no roots");
    if (!(tol > 0.0))
        throw domain_error(errc::invalid_argument, "tolerance must be positive");

    root_multiset out;
    out.tolerance = tol;

    // Trailing zero coefficients are an exact root at the origin; deflating
    // them keeps the iteration away from a known multiple root.
    std::vector<mpq_class> coeffs = p.coefficients();
    std::size_t low = 0;
    while (coeffs[low] == 0) ++low;
    if (low > 0) {
        out.entries.push_back({std::complex<double>(0.0, 0.0), static_cast<unsigned>(low)});
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(low));
    }

    rational_poly reduced{std::move(coeffs)};
    if (reduced.degree() >= 1) {
        const int_poly primitive = content_primitive(reduced).primitive;
        for (const int_poly_power& sf : squarefree_decompose(primitive)) {
            const int_poly& part = sf.part;
            if (part.degree() < 1) continue;
            // Monic coefficients as exact rational ratios first, so large
            // integer coefficients keep their relative accuracy in double.
            std::vector<double> c(static_cast<std::size_t>(part.degree()) + 1);
            const mpz_class& lead = part.leading_coefficient();
            for (std::size_t i = 0; i < c.size(); ++i) {
                mpq_class ratio(part[i], lead);
                ratio.canonicalize();
                c[i] = ratio.get_d();
            }
            append_clustered(out.entries, aberth_roots(c, tol), sf.multiplicity, tol);
        }
    }

    std::sort(out.entries.begin(), out.entries.end(), [](const root_entry& a, const root_entry& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

root_multiset algebraic_representation(const game& v, const basis_id& basis, double tol) {
    if (v.is_zero())
        throw domain_error(errc::zero_game, "the zero game has no algebraic representation");
    rational_poly p = to_poly(v, basis);
    if (p.degree() == 0) {
        root_multiset out;
        out.tolerance = tol;
        return out;
    }
    return find_roots(p, tol);
}

bool verify_vieta(const root_multiset& roots, const rational_poly& p, double tol) {
    const auto [expected_product, expected_sum] = vieta_ratios(p);
    if (roots.total_multiplicity() != static_cast<std::size_t>(p.degree()))
        throw domain_error(errc::multiplicity_mismatch,
                           "root multiplicities do not sum to the polynomial degree");

    std::complex<double> product(1.0, 0.0);
    std::complex<double> sum(0.0, 0.0);
    for (const root_entry& e : roots.entries) {
        for (unsigned m = 0; m < e.multiplicity; ++m) product *= e.value;
        sum += static_cast<double>(e.multiplicity) * e.value;
    }
    auto close = [tol](std::complex<double> actual, const mpq_class& expected) {
        double want = expected.get_d();
        return std::abs(actual - std::complex<double>(want, 0.0))
               <= tol * std::max(1.0, std::abs(want));
    };
    return close(product, expected_product) && close(sum, expected_sum);
}

}  // namespace gamepoly
