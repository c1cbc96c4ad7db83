#include "nureg/regularity.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "detail/homology.hpp"
#include "nureg/error.hpp"

namespace nureg {

long BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
    int reg = 0;
    for (const auto& [ij, b] : entries)
        if (b != 0) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [ij, b] : entries)
        if (b != 0) pd = std::max(pd, ij.first);
    return pd;
}

bool is_supported_characteristic(int p) {
    if (p < 2 || p > 251) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

constexpr int kHardVariableLimit = 24;

int top_index(const SquarefreeMonomialIdeal& ideal) {
    int top = ideal.n;
    for (const auto& m : ideal.generators)
        top = std::max({top, 64 - std::countl_zero(m.x), 64 - std::countl_zero(m.y)});
    return top;
}

// The generators rewritten over the variables that occur in them.
struct Compressed {
    int n = 0;                   // x/y variables of the ambient ring
    std::vector<int> original;   // compressed variable -> ambient vertex (x_k -> k-1, y_k -> n+k-1)
    std::vector<std::uint32_t> gens;
    std::vector<char> has_gen;   // has_gen[mask]: mask contains a generator
    std::vector<std::uint32_t> gen_union;  // union of the generators inside mask

    int v() const { return static_cast<int>(original.size()); }
};

Compressed compress(const SquarefreeMonomialIdeal& ideal, int cap) {
    Compressed c;
    c.n = top_index(ideal);
    for (const auto& m : ideal.generators)
        if (m.degree() == 0) throw Error(ErrorCode::UnitIdeal, "the ideal contains 1");
    VariableSet support = ideal.support();
    std::vector<int> compressed_of(static_cast<std::size_t>(2 * c.n), -1);
    for (int k = 0; k < c.n; ++k)
        if ((support.x >> k) & 1U) {
            compressed_of[k] = c.v();
            c.original.push_back(k);
        }
    for (int k = 0; k < c.n; ++k)
        if ((support.y >> k) & 1U) {
            compressed_of[c.n + k] = c.v();
            c.original.push_back(c.n + k);
        }
    if (c.v() > std::min(cap, kHardVariableLimit))
        throw Error(ErrorCode::TooLarge, std::to_string(c.v()) + " variables exceed the limit of " +
                                             std::to_string(std::min(cap, kHardVariableLimit)));
    for (const auto& m : ideal.generators) {
        std::uint32_t g = 0;
        for (int k = 0; k < c.n; ++k) {
            if ((m.x >> k) & 1U) g |= 1U << compressed_of[k];
            if ((m.y >> k) & 1U) g |= 1U << compressed_of[c.n + k];
        }
        c.gens.push_back(g);
    }
    std::size_t size = std::size_t{1} << c.v();
    c.has_gen.assign(size, 0);
    c.gen_union.assign(size, 0);
    for (std::uint32_t g : c.gens) {
        c.has_gen[g] = 1;
        c.gen_union[g] = g;
    }
    for (int b = 0; b < c.v(); ++b) {
        std::uint32_t bit = 1U << b;
        for (std::uint32_t m = 0; m < size; ++m) {
            if (!(m & bit)) continue;
            c.has_gen[m] |= c.has_gen[m ^ bit];
            c.gen_union[m] |= c.gen_union[m ^ bit];
        }
    }
    return c;
}

// Faces of the Stanley-Reisner complex restricted to sigma.
class RestrictionHomology {
public:
    explicit RestrictionHomology(const Compressed& c) : c_(c), index_(std::size_t{1} << c.v(), -1) {}

    std::vector<long> betti(std::uint32_t sigma, const detail::PrimeField& field) {
        faces_.assign(1, {0U});
        index_[0] = 0;
        grow(0U, sigma, 0);
        return detail::reduced_betti(faces_, [&](std::uint32_t m) { return index_[m]; }, field);
    }

private:
    void grow(std::uint32_t face, std::uint32_t candidates, int size) {
        for (std::uint32_t rest = candidates; rest; rest &= rest - 1) {
            std::uint32_t bit = rest & (~rest + 1);
            std::uint32_t f = face | bit;
            if (c_.has_gen[f]) continue;
            if (static_cast<int>(faces_.size()) <= size + 1) faces_.emplace_back();
            index_[f] = static_cast<int>(faces_[size + 1].size());
            faces_[size + 1].push_back(f);
            grow(f, rest & ~(bit | (bit - 1)), size + 1);
        }
    }

    const Compressed& c_;
    std::vector<int> index_;
    std::vector<std::vector<std::uint32_t>> faces_;
};

}  // namespace

SimplicialComplex stanley_reisner(const SquarefreeMonomialIdeal& ideal) {
    Compressed c = compress(ideal, kHardVariableLimit);
    SimplicialComplex sc;
    sc.vertex_count = 2 * c.n;
    std::uint64_t free_vars = sc.vertex_count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sc.vertex_count) - 1;
    for (int orig : c.original) free_vars &= ~(std::uint64_t{1} << orig);
    std::uint32_t all = c.v() == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << c.v()) - 1);
    for (std::uint64_t m = 0; m <= all; ++m) {
        auto f = static_cast<std::uint32_t>(m);
        if (c.has_gen[f]) continue;
        bool maximal = true;
        for (int b = 0; b < c.v() && maximal; ++b)
            if (!(f >> b & 1U) && !c.has_gen[f | (1U << b)]) maximal = false;
        if (!maximal) continue;
        std::uint64_t facet = free_vars;
        for (int b = 0; b < c.v(); ++b)
            if (f >> b & 1U) facet |= std::uint64_t{1} << c.original[b];
        sc.facets.push_back(facet);
    }
    std::sort(sc.facets.begin(), sc.facets.end());
    return sc;
}

std::vector<long> reduced_homology(const SimplicialComplex& complex, int characteristic) {
    if (!is_supported_characteristic(characteristic))
        throw Error(ErrorCode::ConfigError, "characteristic must be a prime up to 251");
    if (complex.facets.empty()) return {};
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack(complex.facets.begin(), complex.facets.end());
    while (!stack.empty()) {
        std::uint64_t f = stack.back();
        stack.pop_back();
        if (!seen.insert(f).second) continue;
        for (std::uint64_t rest = f; rest; rest &= rest - 1) stack.push_back(f & ~(rest & (~rest + 1)));
    }
    int top = 0;
    for (std::uint64_t f : seen) top = std::max(top, std::popcount(f));
    std::vector<std::vector<std::uint64_t>> faces(static_cast<std::size_t>(top) + 1);
    for (std::uint64_t f : seen) faces[std::popcount(f)].push_back(f);
    std::unordered_map<std::uint64_t, int> index;
    for (auto& group : faces) {
        std::sort(group.begin(), group.end());
        for (std::size_t k = 0; k < group.size(); ++k) index[group[k]] = static_cast<int>(k);
    }
    detail::PrimeField field(characteristic);
    return detail::reduced_betti(faces, [&](std::uint64_t m) { return index.at(m); }, field);
}

BettiTable betti_table(const SquarefreeMonomialIdeal& ideal, const HochsterOptions& opts) {
    if (!is_supported_characteristic(opts.characteristic))
        throw Error(ErrorCode::ConfigError, "characteristic must be a prime up to 251");
    Compressed c = compress(ideal, opts.max_variables);
    detail::PrimeField field(opts.characteristic);
    RestrictionHomology homology(c);
    BettiTable table;
    table.characteristic = opts.characteristic;
    std::uint32_t all = c.v() == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << c.v()) - 1);
    for (std::uint64_t m = 0; m <= all; ++m) {
        auto sigma = static_cast<std::uint32_t>(m);
        if (opts.lcm_pruning && c.gen_union[sigma] != sigma) continue;
        std::vector<long> b = homology.betti(sigma, field);
        int j = std::popcount(sigma);
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (b[k] == 0) continue;
            // b[k] = dim H~_{k-1}, contributing to b_{i,j} with i = j - k.
            table.entries[{j - static_cast<int>(k), j}] += b[k];
        }
    }
    return table;
}

int regularity(const SquarefreeMonomialIdeal& ideal, const HochsterOptions& opts) {
    return betti_table(ideal, opts).regularity();
}

int reg_binomial_edge(const Graph& g, const Labeling& lab, const HochsterOptions& opts) {
    return regularity(initial_ideal(g, lab), opts);
}

int reg_binomial_edge(const Graph& g, const HochsterOptions& opts) {
    return reg_binomial_edge(g, identity_labeling(g.order()), opts);
}

}  // namespace nureg
