#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nureg {

// Squarefree monomial in x_1..x_n, y_1..y_n; bit k of x stands for x_{k+1}.
struct Monomial {
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    static Monomial parse(std::string_view text);

    int degree() const { return std::popcount(x) + std::popcount(y); }
    bool divides(const Monomial& m) const { return (x & ~m.x) == 0 && (y & ~m.y) == 0; }
    bool disjoint_from(const Monomial& m) const { return (x & m.x) == 0 && (y & m.y) == 0; }
    Monomial operator*(const Monomial& m) const { return {x | m.x, y | m.y}; }
    bool operator==(const Monomial&) const = default;

    // "x1*x3*y2"; the empty monomial prints as "1".
    std::string to_string() const;
};

// A set of variables is stored like the product of its members.
using VariableSet = Monomial;

// Lexicographic order with x_1 > ... > x_n > y_1 > ... > y_n.
bool lex_less(const Monomial& a, const Monomial& b);

struct SquarefreeMonomialIdeal {
    int n = 0;  // number of x (and of y) variables
    std::vector<Monomial> generators;

    // Drops generators divisible by others and sorts in increasing lex order.
    void normalize();
    bool same_generators(const SquarefreeMonomialIdeal& other) const;
    VariableSet support() const;
    std::string to_string() const;
};

// One monomial per line; an optional line "n <count>" fixes the number of
// variables, otherwise the largest index seen is used.
SquarefreeMonomialIdeal parse_ideal(std::istream& in);
SquarefreeMonomialIdeal parse_ideal_string(const std::string& text);

// Comma or whitespace separated variables, e.g. "x1,x3,y2".
VariableSet parse_variable_set(std::string_view text);

}  // namespace nureg
