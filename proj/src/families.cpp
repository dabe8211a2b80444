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

#include "families.hpp"

#include <bit>
#include <cassert>
#include <cstddef>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "representation.hpp"

namespace gamepoly {

namespace {

/// All divisors of n in ascending order.
std::vector<unsigned long> divisors_of(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// x^n - 1 over Z.
int_poly power_minus_one(unsigned long n) {
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1, mpz_class(0));
    c[0] = -1;
    c[n] = 1;
    return int_poly(std::move(c));
}

void require_cyclotomic_index(unsigned long n) {
    if (n == 0)
        throw domain_error(errc::invalid_argument, "cyclotomic index must be at least 1");
    if (n > kMaxCyclotomicIndex)
        throw domain_error(errc::overflow, "cyclotomic index exceeds the supported bound");
}

void require_multiplicative(const multiplicative_spec& spec) {
    if (spec.beta == 0)
        throw domain_error(errc::invalid_argument, "beta must be nonzero");
    if (spec.alphas.empty())
        throw domain_error(errc::invalid_argument, "at least one alpha is required");
    if (spec.alphas.size() > kMaxMultiplicativeFactors)
        throw domain_error(errc::overflow, "too many multiplicative factors");
}

}  // namespace

unsigned long totient(unsigned long n) {
    if (n == 0)
        throw domain_error(errc::invalid_argument, "totient is defined for n >= 1");
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p <= m / p; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

int_poly cyclotomic_poly(unsigned long n) {
    require_cyclotomic_index(n);

    static std::mutex mutex;
    static std::map<unsigned long, int_poly> memo;
    std::lock_guard<std::mutex> lock(mutex);

    auto hit = memo.find(n);
    if (hit != memo.end()) return hit->second;

    // Fill bottom-up along the divisor lattice: every divisor e of a divisor
    // d of n divides n itself, so ascending order guarantees memo.at(e) is
    // present when d's quotient is formed.
    for (unsigned long d : divisors_of(n)) {
        if (memo.find(d) != memo.end()) continue;
        int_poly numerator = power_minus_one(d);
        for (unsigned long e : divisors_of(d)) {
            if (e == d) continue;
            int_poly quotient;
            const bool exact = try_divide_exact(numerator, memo.at(e), quotient);
            assert(exact);
            (void)exact;
            numerator = std::move(quotient);
        }
        memo.emplace(d, std::move(numerator));
    }
    return memo.at(n);
}

game cyclotomic_game(unsigned long n, const basis_id& basis) {
    return from_poly(cyclotomic_poly(n).to_rational(), basis);
}

unsigned cyclotomic_player_count(unsigned long n) {
    return min_players(totient(n));
}

game multiplicative_game(const multiplicative_spec& spec, const basis_id& basis) {
    require_multiplicative(spec);
    rational_poly product = rational_poly::constant(spec.beta);
    for (std::size_t k = 0; k < spec.alphas.size(); ++k) {
        std::vector<mpq_class> factor((std::size_t{1} << k) + 1, mpq_class(0));
        factor[0] = -spec.alphas[k];
        factor.back() = 1;
        product = product * rational_poly(std::move(factor));
    }
    return from_poly(product, basis);
}

std::vector<mpq_class> multiplicative_closed_form(const multiplicative_spec& spec) {
    require_multiplicative(spec);
    const std::size_t n = spec.alphas.size();
    std::vector<mpq_class> out(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < out.size(); ++mask) {
        mpq_class value = spec.beta;
        if ((n - static_cast<std::size_t>(std::popcount(mask))) % 2 == 1) value = -value;
        for (std::size_t i = 0; i < n; ++i)
            if (!(mask & (std::size_t{1} << i))) value *= spec.alphas[i];
        out[mask] = value;
    }
    return out;
}

game_factorization factor_unit_circle_game(const coalition& s, const basis_id& basis) {
    if (s.empty())
        throw domain_error(errc::empty_coalition,
                           "the empty coalition has rank 0, giving the zero polynomial");
    const mpz_class& rank = s.rank();
    if (!rank.fits_ulong_p() || rank.get_ui() > kMaxCyclotomicIndex)
        throw domain_error(errc::overflow, "coalition rank exceeds the supported bound");
    const unsigned long n = rank.get_ui();

    game_factorization out;
    out.scalar = 1;
    for (unsigned long d : divisors_of(n))
        out.factors.push_back({cyclotomic_game(d, basis), 1u});
    return out;
}

}  // namespace gamepoly
