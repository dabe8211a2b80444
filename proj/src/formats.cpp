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

#include "formats.hpp"

#include <json.hpp>

#include <cctype>
#include <map>

#include "errors.hpp"

namespace gamepoly {

namespace {

// Games larger than this would need >2^20 exact coefficients; reject early
// instead of exhausting memory on malformed or hostile input.
constexpr unsigned kMaxPlayers = 20;
constexpr unsigned long kMaxExponent = 1000000;

/// Tiny cursor over the input with position-carrying errors.
class scanner {
public:
    explicit scanner(std::string_view text) : text_(text) {}

    std::size_t position() const noexcept { return pos_; }
    bool at_end() const noexcept { return pos_ >= text_.size(); }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    bool accept(char c) {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw parse_error(pos_, what);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    /// Consumes one or more decimal digits.
    std::string digits(const char* what) {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw parse_error(pos_, what);
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect_end(const char* what) {
        skip_ws();
        if (!at_end()) throw parse_error(pos_, what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

/// Unsigned rational "digits" or "digits/digits"; the sign is handled by the
/// caller, which knows whether it came from a leading '-' or a '-' separator.
mpq_class scan_unsigned_rational(scanner& in) {
    std::string num = in.digits("a digit");
    mpz_class n(num);
    if (in.accept('/')) {
        std::size_t den_pos = in.position();
        mpz_class d(in.digits("denominator digits"));
        if (d == 0) throw parse_error(den_pos, "a nonzero denominator");
        mpq_class q(n, d);
        q.canonicalize();
        return q;
    }
    return mpq_class(n);
}

unsigned long scan_bounded_uint(scanner& in, unsigned long bound, const char* what) {
    std::size_t start = in.position();
    mpz_class value(in.digits(what));
    if (value > bound) throw parse_error(start, std::string(what) + " up to " + std::to_string(bound));
    return value.get_ui();
}

}  // namespace

std::string format_rational(const mpq_class& value) {
    return value.get_str();
}

mpq_class parse_rational(std::string_view text) {
    scanner in(text);
    in.skip_ws();
    bool negative = in.accept('-');
    mpq_class value = scan_unsigned_rational(in);
    in.expect_end("end of rational");
    return negative ? mpq_class(-value) : value;
}

coalition parse_coalition(std::string_view text) {
    scanner in(text);
    in.skip_ws();
    in.expect('{', "'{'");
    in.skip_ws();
    std::vector<unsigned long> players;
    if (!in.accept('}')) {
        unsigned long previous = 0;
        for (;;) {
            in.skip_ws();
            std::size_t start = in.position();
            unsigned long player = scan_bounded_uint(in, kMaxExponent * 64, "a player number");
            if (player == 0) throw parse_error(start, "a player number >= 1");
            if (player <= previous)
                throw parse_error(start, "a player greater than the previous member");
            players.push_back(player);
            previous = player;
            in.skip_ws();
            if (in.accept('}')) break;
            in.expect(',', "',' or '}'");
        }
    }
    in.expect_end("end of coalition");
    return coalition::of_players(players);
}

std::string format_coalition(const coalition& s) {
    std::string out = "{";
    bool first = true;
    for (unsigned long p : s.players()) {
        if (!first) out += ",";
        out += std::to_string(p);
        first = false;
    }
    out += "}";
    return out;
}

rational_poly parse_poly(std::string_view text) {
    scanner in(text);
    std::map<unsigned long, mpq_class> terms;

    in.skip_ws();
    bool negative = in.accept('-');
    for (;;) {
        in.skip_ws();
        // One term: either a coefficient with optional "*x^k", or a bare
        // power of x.
        mpq_class coeff(1);
        unsigned long degree = 0;
        if (in.peek() == 'x') {
            in.accept('x');
            degree = 1;
            if (in.accept('^'))
                degree = scan_bounded_uint(in, kMaxExponent, "an exponent");
        } else {
            coeff = scan_unsigned_rational(in);
            in.skip_ws();
            if (in.accept('*')) {
                in.skip_ws();
                in.expect('x', "'x'");
                degree = 1;
                if (in.accept('^'))
                    degree = scan_bounded_uint(in, kMaxExponent, "an exponent");
            }
        }
        if (negative) coeff = -coeff;
        terms[degree] += coeff;

        in.skip_ws();
        if (in.accept('+')) {
            negative = false;
        } else if (in.accept('-')) {
            negative = true;
        } else {
            in.expect_end("'+', '-' or end of polynomial");
            break;
        }
    }

    std::vector<mpq_class> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, mpq_class(0));
    for (const auto& [degree, c] : terms)
        coeffs[degree] = c;
    return rational_poly(std::move(coeffs));
}

std::string format_poly(const rational_poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        const mpq_class& c = p[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        mpq_class mag = abs(c);
        if (i == 0) {
            out += format_rational(mag);
        } else {
            if (mag != 1) out += format_rational(mag) + "*";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

game parse_game_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.byte, "well-formed JSON");
    }
    if (!doc.is_object())
        throw parse_error(0, "a JSON object with players, basis and coefficients");
    for (const auto& [key, _] : doc.items())
        if (key != "players" && key != "basis" && key != "coefficients")
            throw parse_error(0, "only the keys players, basis and coefficients");

    if (!doc.contains("players") || !doc["players"].is_number_unsigned())
        throw parse_error(0, "an unsigned integer \"players\"");
    unsigned long players = doc["players"].get<unsigned long>();
    if (players > kMaxPlayers)
        throw parse_error(0, "\"players\" at most " + std::to_string(kMaxPlayers));

    if (!doc.contains("basis") || !doc["basis"].is_string())
        throw parse_error(0, "a string \"basis\"");
    std::string basis_name = doc["basis"].get<std::string>();
    if (!transform_registry::instance().contains(basis_name))
        throw parse_error(0, "\"basis\" naming a registered transform");

    if (!doc.contains("coefficients") || !doc["coefficients"].is_array())
        throw parse_error(0, "an array \"coefficients\"");
    const auto& arr = doc["coefficients"];
    const std::size_t expected = std::size_t(1) << players;
    if (arr.size() != expected)
        throw parse_error(0, "exactly " + std::to_string(expected) + " coefficient strings");

    std::vector<mpq_class> coeffs;
    coeffs.reserve(expected);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_string())
            throw parse_error(0, "coefficient " + std::to_string(i) + " as a string");
        coeffs.push_back(parse_rational(arr[i].get<std::string>()));
    }
    return game(static_cast<unsigned>(players), basis_id(basis_name), std::move(coeffs));
}

std::string format_game_json(const game& v) {
    nlohmann::json doc;
    doc["players"] = v.players();
    doc["basis"] = v.basis().name();
    nlohmann::json arr = nlohmann::json::array();
    for (const mpq_class& c : v.coefficients())
        arr.push_back(format_rational(c));
    doc["coefficients"] = std::move(arr);
    return doc.dump();
}

std::string format_game_expression(const game& v) {
    const char* symbol = "b";
    if (v.basis() == basis_id::mobius()) symbol = "u";
    else if (v.basis() == basis_id::identity()) symbol = "d";

    std::string out;
    const auto& coeffs = v.coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const mpq_class& c = coeffs[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        mpq_class mag = abs(c);
        if (mag != 1) out += format_rational(mag) + "*";
        out += symbol;
        out += format_coalition(coalition::from_rank(mpz_class(static_cast<unsigned long>(i))));
    }
    return out.empty() ? "0" : out;
}

}  // namespace gamepoly
