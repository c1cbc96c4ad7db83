#include "nureg/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nureg/error.hpp"

namespace nureg {

namespace {

void add_variable(Monomial& m, char kind, int index, std::string_view context) {
    if (index < 1 || index > 64)
        throw Error(ErrorCode::ParseError, "variable index out of range in '" + std::string(context) + "'");
    std::uint64_t bit = std::uint64_t{1} << (index - 1);
    if (kind == 'x')
        m.x |= bit;
    else
        m.y |= bit;
}

// Reads variables like x3 or y12 separated by '*', ',', or whitespace.
Monomial parse_variables(std::string_view text) {
    Monomial m;
    std::size_t p = 0;
    while (p < text.size()) {
        char c = text[p];
        if (c == '*' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            ++p;
            continue;
        }
        if (c == '1' && m.x == 0 && m.y == 0 && text.find_first_not_of(" \t\r", p + 1) == std::string_view::npos) break;
        char kind = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (kind != 'x' && kind != 'y')
            throw Error(ErrorCode::ParseError, "unexpected character in '" + std::string(text) + "'");
        ++p;
        if (p < text.size() && text[p] == '_') ++p;
        std::size_t start = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (start == p) throw Error(ErrorCode::ParseError, "missing index in '" + std::string(text) + "'");
        add_variable(m, kind, std::stoi(std::string(text.substr(start, p - start))), text);
    }
    return m;
}

int top_index(const Monomial& m) { return std::max(64 - std::countl_zero(m.x), 64 - std::countl_zero(m.y)); }

}  // namespace

Monomial Monomial::parse(std::string_view text) { return parse_variables(text); }

std::string Monomial::to_string() const {
    std::string out;
    auto emit = [&](char kind, std::uint64_t bits) {
        while (bits) {
            int k = std::countr_zero(bits);
            bits &= bits - 1;
            if (!out.empty()) out += '*';
            out += kind;
            out += std::to_string(k + 1);
        }
    };
    emit('x', x);
    emit('y', y);
    return out.empty() ? "1" : out;
}

bool lex_less(const Monomial& a, const Monomial& b) {
    if (a.x != b.x) {
        std::uint64_t diff = a.x ^ b.x;
        std::uint64_t first = diff & (~diff + 1);
        return (b.x & first) != 0;
    }
    if (a.y != b.y) {
        std::uint64_t diff = a.y ^ b.y;
        std::uint64_t first = diff & (~diff + 1);
        return (b.y & first) != 0;
    }
    return false;
}

void SquarefreeMonomialIdeal::normalize() {
    std::vector<Monomial> kept;
    for (std::size_t a = 0; a < generators.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < generators.size() && !redundant; ++b) {
            if (a == b) continue;
            const Monomial& ga = generators[a];
            const Monomial& gb = generators[b];
            if (gb.divides(ga) && (!(gb == ga) || b < a)) redundant = true;
        }
        if (!redundant) kept.push_back(generators[a]);
    }
    std::sort(kept.begin(), kept.end(), lex_less);
    generators = std::move(kept);
}

bool SquarefreeMonomialIdeal::same_generators(const SquarefreeMonomialIdeal& other) const {
    SquarefreeMonomialIdeal a = *this;
    SquarefreeMonomialIdeal b = other;
    a.normalize();
    b.normalize();
    return a.generators == b.generators;
}

VariableSet SquarefreeMonomialIdeal::support() const {
    VariableSet s;
    for (const auto& g : generators) s = s * g;
    return s;
}

std::string SquarefreeMonomialIdeal::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (k) out += ", ";
        out += generators[k].to_string();
    }
    return out + ")";
}

SquarefreeMonomialIdeal parse_ideal(std::istream& in) {
    SquarefreeMonomialIdeal ideal;
    int declared = -1;
    int seen = 0;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (line[first] == 'n') {
            std::istringstream ss(line.substr(first + 1));
            if (!(ss >> declared) || declared < 0 || declared > 64)
                throw Error(ErrorCode::ParseError, "bad variable count line '" + line + "'");
            continue;
        }
        Monomial m = Monomial::parse(line);
        seen = std::max(seen, top_index(m));
        ideal.generators.push_back(m);
    }
    if (declared >= 0 && declared < seen) throw Error(ErrorCode::ParseError, "monomial uses a variable beyond n");
    ideal.n = declared >= 0 ? declared : seen;
    return ideal;
}

SquarefreeMonomialIdeal parse_ideal_string(const std::string& text) {
    std::istringstream in(text);
    return parse_ideal(in);
}

VariableSet parse_variable_set(std::string_view text) { return parse_variables(text); }

}  // namespace nureg
