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

#ifndef GAMEPOLY_ERRORS_HPP
#define GAMEPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gamepoly {

/// Domain error categories raised by library operations.  The names returned
/// by errc_name() are part of the external contract: the CLI prints them and
/// the C API maps them one-to-one onto status codes.
enum class errc {
    length_mismatch,
    player_out_of_range,
    zero_game,
    zero_polynomial,
    division_by_zero_polynomial,
    both_zero,
    degree_zero,
    not_prime,
    empty_coalition,
    multiplicity_mismatch,
    unknown_basis,
    invalid_argument,
    overflow,
};

inline const char* errc_name(errc kind) noexcept {
    switch (kind) {
    case errc::length_mismatch: return "LengthMismatch";
    case errc::player_out_of_range: return "PlayerOutOfRange";
    case errc::zero_game: return "ZeroGame";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::division_by_zero_polynomial: return "DivisionByZeroPolynomial";
    case errc::both_zero: return "BothZero";
    case errc::degree_zero: return "DegreeZero";
    case errc::not_prime: return "NotPrime";
    case errc::empty_coalition: return "EmptyCoalition";
    case errc::multiplicity_mismatch: return "MultiplicityMismatch";
    case errc::unknown_basis: return "UnknownBasis";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::overflow: return "Overflow";
    }
    return "InternalError";
}

/// Violation of an operation precondition (wrong-length coefficient vector,
/// zero game where a nonzero one is required, ...).
class domain_error : public std::runtime_error {
public:
    domain_error(errc kind, const std::string& detail)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + detail), kind_(kind) {}

    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

/// Malformed textual input (coalition text, polynomial text, game JSON).
/// `position` is a zero-based byte offset into the input where parsing
/// stopped; `expected` names the token class the parser was looking for.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t position, const std::string& expected)
        : std::runtime_error("parse error at position " + std::to_string(position) +
                             ": expected " + expected),
          position_(position),
          expected_(expected) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

}  // namespace gamepoly

#endif  // GAMEPOLY_ERRORS_HPP
