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

#ifndef GAMEPOLY_FORMATS_HPP
#define GAMEPOLY_FORMATS_HPP

#include <string>
#include <string_view>

#include "coalition.hpp"
#include "game.hpp"
#include "poly.hpp"

namespace gamepoly {

// All parsers raise parse_error (with byte position and expected token) on
// malformed input; printers emit the canonical forms the parsers accept, so
// print-then-parse is the identity.

/// Exact rational "p", "-p" or "p/q" in lowest terms, "2" rather than "2/1".
std::string format_rational(const mpq_class& value);

/// Accepts an optional sign, digits, and an optional "/digits" denominator.
/// The denominator must be nonzero.  The result is canonicalized.
mpq_class parse_rational(std::string_view text);

/// Coalition text: "{}" or "{1,3,4}" with strictly increasing positive
/// members.  Whitespace is allowed around members and separators.
coalition parse_coalition(std::string_view text);
std::string format_coalition(const coalition& s);

/// Polynomial text: terms "c", "c*x", "c*x^k", "x", "x^k" joined by + or -,
/// rational coefficients.  The printer emits ascending canonical form, e.g.
/// "-1/2 + x^3 - 2*x^4"; the zero polynomial prints "0".
rational_poly parse_poly(std::string_view text);
std::string format_poly(const rational_poly& p);

/// Game JSON: {"players": n, "basis": "identity"|"mobius",
/// "coefficients": ["0","1/2",...]} with exactly 2^n coefficient strings.
game parse_game_json(std::string_view text);
std::string format_game_json(const game& v);

/// Human-readable expansion over basis games, highest rank first, e.g.
/// "u{3} - u{2} + u{}" for a Möbius-basis game ("d" for identity, "b"
/// otherwise).  The zero game prints "0".
std::string format_game_expression(const game& v);

}  // namespace gamepoly

#endif  // GAMEPOLY_FORMATS_HPP
