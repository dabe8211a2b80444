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

#include "coalition.hpp"

#include "errors.hpp"

namespace gamepoly {

coalition coalition::from_rank(const mpz_class& rank) {
    if (rank < 0)
        throw domain_error(errc::invalid_argument, "coalition rank must be nonnegative");
    return coalition(rank);
}

coalition coalition::of_players(const std::vector<unsigned long>& players) {
    mpz_class bits = 0;
    for (unsigned long p : players) {
        if (p == 0)
            throw domain_error(errc::invalid_argument, "players are numbered from 1");
        mpz_setbit(bits.get_mpz_t(), p - 1);
    }
    return coalition(bits);
}

bool coalition::contains(unsigned long player) const {
    if (player == 0) return false;
    return mpz_tstbit(bits_.get_mpz_t(), player - 1) != 0;
}

std::size_t coalition::size() const {
    return mpz_popcount(bits_.get_mpz_t());
}

std::vector<unsigned long> coalition::players() const {
    std::vector<unsigned long> out;
    mp_bitcnt_t bit = mpz_scan1(bits_.get_mpz_t(), 0);
    while (bit != static_cast<mp_bitcnt_t>(-1)) {
        out.push_back(static_cast<unsigned long>(bit) + 1);
        bit = mpz_scan1(bits_.get_mpz_t(), bit + 1);
    }
    return out;
}

unsigned long coalition::highest_player() const {
    if (empty()) throw domain_error(errc::empty_coalition, "empty coalition has no members");
    return mpz_sizeinbase(bits_.get_mpz_t(), 2);  // index of the top set bit, one-based
}

// The carry cascade: walk up from `start_player` until a missing player is
// found, dropping every player passed on the way and adding the missing one.
// With start_player = 1 this is the plain successor; with start_player = k+1
// it advances by 2^k because players 1..k are left alone.
static mpz_class cascade(const mpz_class& bits, unsigned long start_player) {
    mpz_class out = bits;
    unsigned long j = start_player;
    while (mpz_tstbit(out.get_mpz_t(), j - 1))
        ++j;
    for (unsigned long i = start_player; i < j; ++i)
        mpz_clrbit(out.get_mpz_t(), i - 1);
    mpz_setbit(out.get_mpz_t(), j - 1);
    return out;
}

coalition coalition::successor() const {
    return coalition(cascade(bits_, 1));
}

coalition coalition::successor_pow2(unsigned long k) const {
    return coalition(cascade(bits_, k + 1));
}

coalition coalition::kth_successor(const mpz_class& k) const {
    if (k < 0)
        throw domain_error(errc::invalid_argument, "successor count must be nonnegative");
    coalition out = *this;
    mp_bitcnt_t bit = mpz_scan1(k.get_mpz_t(), 0);
    while (bit != static_cast<mp_bitcnt_t>(-1)) {
        out = out.successor_pow2(static_cast<unsigned long>(bit));
        bit = mpz_scan1(k.get_mpz_t(), bit + 1);
    }
    return out;
}

coalition coalition::shifted(unsigned long k) const {
    mpz_class out;
    mpz_mul_2exp(out.get_mpz_t(), bits_.get_mpz_t(), k);
    return coalition(out);
}

coalition operator|(const coalition& a, const coalition& b) {
    mpz_class out;
    mpz_ior(out.get_mpz_t(), a.bits_.get_mpz_t(), b.bits_.get_mpz_t());
    return coalition(out);
}

coalition operator&(const coalition& a, const coalition& b) {
    mpz_class out;
    mpz_and(out.get_mpz_t(), a.bits_.get_mpz_t(), b.bits_.get_mpz_t());
    return coalition(out);
}

}  // namespace gamepoly
