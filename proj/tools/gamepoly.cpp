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

// Command-line front end; talks to the library exclusively through the C
// API in gamepoly/gamepoly.h.
//
// Exit codes: 0 success, 1 domain error (message leads with the library
// error name), 2 parse error (position and expected token) or command-line
// misuse.

#include <gamepoly/gamepoly.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

struct cli_failure {
    int exit_code;
    std::string message;
};

void check(gp_status status) {
    if (status == GP_OK) return;
    throw cli_failure{status == GP_ERROR_PARSE ? 2 : 1, gp_last_error_message()};
}

std::string take(char* s) {
    std::string out(s);
    gp_free_string(s);
    return out;
}

template <typename T, void (*Free)(T*)>
struct handle {
    T* ptr = nullptr;
    handle() = default;
    ~handle() { Free(ptr); }
    handle(const handle&) = delete;
    handle& operator=(const handle&) = delete;
    handle(handle&& other) noexcept : ptr(std::exchange(other.ptr, nullptr)) {}
    handle& operator=(handle&& other) noexcept {
        std::swap(ptr, other.ptr);
        return *this;
    }
    T** out() { return &ptr; }
    T* get() const { return ptr; }
};

using coalition_handle = handle<gp_coalition, gp_coalition_free>;
using game_handle = handle<gp_game, gp_game_free>;
using poly_handle = handle<gp_poly, gp_poly_free>;
using poly_factorization_handle = handle<gp_poly_factorization, gp_poly_factorization_free>;
using game_factorization_handle = handle<gp_game_factorization, gp_game_factorization_free>;
using roots_handle = handle<gp_roots, gp_roots_free>;

std::string trim_trailing(std::string s) {
    while (!s.empty()
           && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    return s;
}

std::string slurp_stdin() {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return trim_trailing(buffer.str());
}

/// Inline text, or stdin when the argument is "-".
std::string resolve_text(const std::string& arg) {
    return arg == "-" ? slurp_stdin() : arg;
}

/// Game arguments additionally accept a file path (anything that is not "-"
/// and does not open with '{' is read as a file).
std::string resolve_game_text(const std::string& arg) {
    if (arg == "-") return slurp_stdin();
    if (!arg.empty() && arg.front() == '{') return arg;
    std::ifstream in(arg);
    if (!in) throw cli_failure{2, "cannot open file: " + arg};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return trim_trailing(buffer.str());
}

coalition_handle load_coalition(const std::string& arg) {
    coalition_handle s;
    check(gp_coalition_parse(resolve_text(arg).c_str(), s.out()));
    return s;
}

poly_handle load_poly(const std::string& arg) {
    poly_handle p;
    check(gp_poly_parse(resolve_text(arg).c_str(), p.out()));
    return p;
}

game_handle load_game(const std::string& arg) {
    game_handle g;
    check(gp_game_from_json(resolve_game_text(arg).c_str(), g.out()));
    return g;
}

void print_line(const std::string& s) { std::cout << s << "\n"; }

void print_json(const json& doc) { std::cout << doc.dump() << "\n"; }

void print_coalition_result(const coalition_handle& s, bool as_json) {
    char* text = nullptr;
    check(gp_coalition_format(s.get(), &text));
    std::string t = take(text);
    if (as_json)
        print_json(json{{"coalition", t}});
    else
        print_line(t);
}

/// A game result is a JSON document in both modes (games round-trip through
/// pipes this way).
void print_game_result(const game_handle& g) {
    char* text = nullptr;
    check(gp_game_to_json(g.get(), &text));
    print_line(take(text));
}

void print_poly_result(const poly_handle& p, bool as_json) {
    char* text = nullptr;
    check(gp_poly_format(p.get(), &text));
    std::string t = take(text);
    if (as_json)
        print_json(json{{"polynomial", t}});
    else
        print_line(t);
}

void print_bool_result(const char* key, bool value, bool as_json) {
    if (as_json)
        print_json(json{{key, value}});
    else
        print_line(value ? "true" : "false");
}

void print_roots_result(const roots_handle& r, double tol, bool as_json) {
    unsigned long count = 0;
    check(gp_roots_size(r.get(), &count));
    json entries = json::array();
    for (unsigned long i = 0; i < count; ++i) {
        double re = 0.0;
        double im = 0.0;
        unsigned m = 0;
        check(gp_roots_value(r.get(), i, &re, &im));
        check(gp_roots_multiplicity(r.get(), i, &m));
        if (as_json) {
            entries.push_back({{"re", re}, {"im", im}, {"multiplicity", m}});
        } else {
            char line[160];
            std::snprintf(line, sizeof line, "%.15g%+.15g*i (multiplicity %u)", re, im, m);
            print_line(line);
        }
    }
    if (as_json) print_json(json{{"tolerance", tol}, {"roots", entries}});
}

void print_poly_factorization(const poly_factorization_handle& f, bool as_json) {
    char* unit_text = nullptr;
    check(gp_poly_factorization_unit(f.get(), &unit_text));
    std::string unit = take(unit_text);
    unsigned long count = 0;
    check(gp_poly_factorization_size(f.get(), &count));

    json factors = json::array();
    std::vector<std::string> lines;
    for (unsigned long i = 0; i < count; ++i) {
        poly_handle factor;
        unsigned m = 0;
        check(gp_poly_factorization_factor(f.get(), i, factor.out()));
        check(gp_poly_factorization_multiplicity(f.get(), i, &m));
        char* text = nullptr;
        check(gp_poly_format(factor.get(), &text));
        std::string t = take(text);
        if (as_json)
            factors.push_back({{"polynomial", t}, {"multiplicity", m}});
        else
            lines.push_back("(" + t + ")^" + std::to_string(m));
    }
    if (as_json) {
        print_json(json{{"unit", unit}, {"factors", factors}});
        return;
    }
    print_line("unit " + unit);
    for (const std::string& line : lines) print_line(line);
}

/// Text mode prints the unit then one factor per line as canonical
/// polynomial text in the working basis; JSON mode carries the factor games
/// as full documents.
void print_game_factorization(const game_factorization_handle& f, const std::string& basis,
                              bool as_json) {
    char* scalar_text = nullptr;
    check(gp_game_factorization_scalar(f.get(), &scalar_text));
    std::string scalar = take(scalar_text);
    unsigned long count = 0;
    check(gp_game_factorization_size(f.get(), &count));

    json factors = json::array();
    std::vector<std::string> lines;
    for (unsigned long i = 0; i < count; ++i) {
        game_handle factor;
        unsigned m = 0;
        check(gp_game_factorization_factor(f.get(), i, factor.out()));
        check(gp_game_factorization_multiplicity(f.get(), i, &m));
        if (as_json) {
            char* text = nullptr;
            check(gp_game_to_json(factor.get(), &text));
            factors.push_back({{"game", json::parse(take(text))}, {"multiplicity", m}});
        } else {
            poly_handle p;
            check(gp_game_to_poly(factor.get(), basis.c_str(), p.out()));
            char* text = nullptr;
            check(gp_poly_format(p.get(), &text));
            lines.push_back("(" + take(text) + ")^" + std::to_string(m));
        }
    }
    if (as_json) {
        print_json(json{{"scalar", scalar}, {"factors", factors}});
        return;
    }
    print_line("unit " + scalar);
    for (const std::string& line : lines) print_line(line);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for games as polynomials"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string basis = "mobius";
    std::string to_basis;
    std::string arg1;
    std::string arg2;
    std::string k_text;
    std::string beta;
    std::vector<std::string> alphas;
    std::string as_kind = "game";
    unsigned long n_arg = 0;
    unsigned long pow2_arg = 0;
    unsigned long shift_arg = 0;
    double tol = 1e-12;

    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "emit a JSON document instead of plain text");
    };
    auto add_basis = [&](CLI::App* sub) {
        sub->add_option("--basis", basis, "working basis")
            ->capture_default_str()
            ->check(CLI::IsMember({"identity", "mobius"}));
    };

    {
        auto* sub = app.add_subcommand("eta", "rank of a coalition in the natural order");
        sub->add_option("coalition", arg1, "coalition text, e.g. \"{1,3}\"")->required();
        add_json(sub);
        sub->callback([&] {
            auto s = load_coalition(arg1);
            char* text = nullptr;
            check(gp_coalition_rank(s.get(), &text));
            std::string rank = take(text);
            if (as_json)
                print_json(json{{"rank", rank}});
            else
                print_line(rank);
        });
    }
    {
        auto* sub = app.add_subcommand("eta-inv", "coalition with the given rank");
        sub->add_option("rank", arg1, "nonnegative decimal rank")->required();
        add_json(sub);
        sub->callback([&] {
            coalition_handle s;
            check(gp_coalition_from_rank(resolve_text(arg1).c_str(), s.out()));
            print_coalition_result(s, as_json);
        });
    }
    {
        auto* sub = app.add_subcommand("succ", "successor of a coalition in the natural order");
        sub->add_option("coalition", arg1, "coalition text")->required();
        auto* opt_pow2 =
            sub->add_option("--pow2", pow2_arg, "take the 2^K-th successor (one cascade step)");
        auto* opt_k = sub->add_option("--k", k_text, "take the k-th successor (decimal)");
        opt_pow2->excludes(opt_k);
        opt_k->excludes(opt_pow2);
        add_json(sub);
        sub->callback([&] {
            auto s = load_coalition(arg1);
            coalition_handle t;
            if (opt_pow2->count() > 0)
                check(gp_coalition_successor_pow2(s.get(), pow2_arg, t.out()));
            else if (opt_k->count() > 0)
                check(gp_coalition_kth_successor(s.get(), k_text.c_str(), t.out()));
            else
                check(gp_coalition_successor(s.get(), t.out()));
            print_coalition_result(t, as_json);
        });
    }
    {
        auto* sub = app.add_subcommand("shift", "raise every player of a coalition by k");
        sub->add_option("coalition", arg1, "coalition text")->required();
        sub->add_option("k", shift_arg, "shift amount")->required();
        add_json(sub);
        sub->callback([&] {
            auto s = load_coalition(arg1);
            coalition_handle t;
            check(gp_coalition_shift(s.get(), shift_arg, t.out()));
            print_coalition_result(t, as_json);
        });
    }
    {
        auto* sub = app.add_subcommand("to-poly", "formal polynomial of a game");
        sub->add_option("game", arg1, "game JSON (inline, file path, or -)")->required();
        add_basis(sub);
        add_json(sub);
        sub->callback([&] {
            auto g = load_game(arg1);
            poly_handle p;
            check(gp_game_to_poly(g.get(), basis.c_str(), p.out()));
            print_poly_result(p, as_json);
        });
    }
    {
        auto* sub = app.add_subcommand("from-poly", "minimal game of a polynomial");
        sub->add_option("polynomial", arg1, "polynomial text, e.g. \"1 - x^2\"")->required();
        add_basis(sub);
        add_json(sub);
        sub->callback([&] {
            auto p = load_poly(arg1);
            game_handle g;
            check(gp_game_from_poly(p.get(), basis.c_str(), g.out()));
            print_game_result(g);
        });
    }
    {
        auto* sub = app.add_subcommand("basis", "re-express a game in another basis");
        sub->add_option("game", arg1, "game JSON (inline, file path, or -)")->required();
        sub->add_option("--to", to_basis, "target basis")
            ->required()
            ->check(CLI::IsMember({"identity", "mobius"}));
        add_json(sub);
        sub->callback([&] {
            auto g = load_game(arg1);
            game_handle h;
            check(gp_game_change_basis(g.get(), to_basis.c_str(), h.out()));
            print_game_result(h);
        });
    }
    {
        auto* sub = app.add_subcommand("canon", "canonical representative (minimal, monic)");
        sub->add_option("game", arg1, "game JSON (inline, file path, or -)")->required();
        add_basis(sub);
        add_json(sub);
        sub->callback([&] {
            auto g = load_game(arg1);
            game_handle h;
            check(gp_game_canonical(g.get(), basis.c_str(), h.out()));
            print_game_result(h);
        });
    }
    {
        auto* sub = app.add_subcommand("equiv", "are two games nonzero scalar multiples?");
        sub->add_option("game1", arg1, "game JSON (inline, file path, or -)")->required();
        sub->add_option("game2", arg2, "game JSON (inline, file path, or -)")->required();
        add_basis(sub);
        add_json(sub);
        sub->callback([&] {
            auto v = load_game(arg1);
            auto w = load_game(arg2);
            int result = 0;
            check(gp_game_equivalent(v.get(), w.get(), basis.c_str(), &result));
            print_bool_result("equivalent", result != 0, as_json);
        });
    }
    {
        auto* sub = app.add_subcommand("mul", "product of two games");
        sub->add_option("game1", arg1, "game JSON (inline, file path, or -)")->required();
        sub->add_option("game2", arg2, "game JSON (inline, file path, or -)")->required();
        add_basis(sub);
        add_json(sub);
        sub->callback([&] {
            auto v = load_game(arg1);
            auto w = load_game(arg2);
            game_handle product;
            check(gp_game_product(v.get(), w.get(), basis.c_str(), product.out()));
            print_game_result(product);
        });
    }
    {
        auto* sub = app.add_subcommand("factor", "factor a game into irreducible games");
        sub->add_option("game", arg1, "game JSON (inline, file path, or -)")->required();
        add_basis(sub);
        add_json(sub);
        sub->callback([&] {
            auto g = load_game(arg1);
            game_factorization_handle f;
            check(gp_game_factor(g.get(), basis.c_str(), f.out()));
            print_game_factorization(f, basis, as_json);
        });
    }
    {
        auto* sub = app.add_subcommand("factor-poly", "factor a polynomial over Q");
        sub->add_option("polynomial", arg1, "polynomial text")->required();
        add_json(sub);
        sub->callback([&] {
            auto p = load_poly(arg1);
            poly_factorization_handle f;
            check(gp_poly_factor(p.get(), f.out()));
            print_poly_factorization(f, as_json);
        });
    }
    {
        auto* sub = app.add_subcommand("eisenstein", "Eisenstein irreducibility criterion");
        sub->add_option("polynomial", arg1, "polynomial text with integer coefficients")
            ->required();
        sub->add_option("prime", arg2, "prime to test at")->required();
        add_json(sub);
        sub->callback([&] {
            auto p = load_poly(arg1);
            int result = 0;
            check(gp_poly_eisenstein(p.get(), resolve_text(arg2).c_str(), &result));
            print_bool_result("eisenstein", result != 0, as_json);
        });
    }
    {
        auto* sub = app.add_subcommand("roots", "complex roots with multiplicity");
        sub->add_option("input", arg1, "polynomial text, or a game (inline JSON, file, or -)")
            ->required();
        sub->add_option("--tol", tol, "convergence and clustering tolerance")
            ->capture_default_str();
        add_basis(sub);
        add_json(sub);
        sub->callback([&] {
            std::string text;
            if (arg1 == "-") {
                text = slurp_stdin();
            } else if (!arg1.empty() && arg1.front() == '{') {
                text = arg1;
            } else if (std::ifstream in(arg1); in) {
                std::ostringstream buffer;
                buffer << in.rdbuf();
                text = trim_trailing(buffer.str());
            } else {
                text = arg1;
            }
            roots_handle r;
            if (!text.empty() && text.front() == '{') {
                game_handle g;
                check(gp_game_from_json(text.c_str(), g.out()));
                check(gp_game_roots(g.get(), basis.c_str(), tol, r.out()));
            } else {
                poly_handle p;
                check(gp_poly_parse(text.c_str(), p.out()));
                check(gp_poly_roots(p.get(), tol, r.out()));
            }
            print_roots_result(r, tol, as_json);
        });
    }
    {
        auto* sub = app.add_subcommand("cyclotomic", "cyclotomic polynomial or game");
        sub->add_option("n", n_arg, "index n >= 1")->required();
        add_basis(sub);
        sub->add_option("--as", as_kind, "output kind")
            ->capture_default_str()
            ->check(CLI::IsMember({"poly", "game"}));
        add_json(sub);
        sub->callback([&] {
            if (as_kind == "poly") {
                poly_handle p;
                check(gp_cyclotomic_poly(n_arg, p.out()));
                print_poly_result(p, as_json);
                return;
            }
            game_handle g;
            check(gp_cyclotomic_game(n_arg, basis.c_str(), g.out()));
            if (as_json) {
                print_game_result(g);
            } else {
                char* text = nullptr;
                check(gp_game_format_expression(g.get(), &text));
                print_line(take(text));
            }
        });
    }
    {
        auto* sub = app.add_subcommand("multiplicative", "product of one-player affine games");
        sub->add_option("--beta", beta, "nonzero rational scale")->required();
        sub->add_option("--alphas", alphas, "rationals a1,...,an (comma separated)")
            ->required()
            ->delimiter(',');
        add_basis(sub);
        add_json(sub);
        sub->callback([&] {
            std::vector<const char*> pointers;
            pointers.reserve(alphas.size());
            for (const std::string& a : alphas) pointers.push_back(a.c_str());
            game_handle g;
            check(gp_multiplicative_game(beta.c_str(), pointers.data(), pointers.size(),
                                         basis.c_str(), g.out()));
            print_game_result(g);
        });
    }
    {
        auto* sub = app.add_subcommand("cardpoly", "cardinality-average polynomial of a game");
        sub->add_option("game", arg1, "game JSON (inline, file path, or -)")->required();
        add_json(sub);
        sub->callback([&] {
            auto g = load_game(arg1);
            poly_handle p;
            check(gp_game_cardinality_poly(g.get(), p.out()));
            print_poly_result(p, as_json);
        });
    }
    {
        auto* sub = app.add_subcommand("unit-circle",
                                       "factor the game with polynomial x^eta(S) - 1");
        sub->add_option("coalition", arg1, "coalition text")->required();
        add_basis(sub);
        add_json(sub);
        sub->callback([&] {
            auto s = load_coalition(arg1);
            game_factorization_handle f;
            check(gp_unit_circle_factor(s.get(), basis.c_str(), f.out()));
            print_game_factorization(f, basis, as_json);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const cli_failure& failure) {
        std::cerr << failure.message << "\n";
        return failure.exit_code;
    }
    return 0;
}
