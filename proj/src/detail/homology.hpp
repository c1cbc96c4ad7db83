#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace nureg::detail {

// Arithmetic in GF(p) for a small prime p.
class PrimeField {
public:
    explicit PrimeField(int p) : p_(p), inv_(static_cast<std::size_t>(p), 0) {
        for (int a = 1; a < p; ++a) {
            int r = 1;
            for (int e = 0; e < p - 2; ++e) r = r * a % p;
            inv_[a] = r;
        }
    }
    int p() const { return p_; }
    int inv(int a) const { return inv_[a]; }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }

private:
    int p_;
    std::vector<int> inv_;
};

using SparseColumn = std::vector<std::pair<int, int>>;  // (row, coefficient), rows ascending

// target += factor * source
inline void axpy(SparseColumn& target, const SparseColumn& source, int factor, int p, SparseColumn& scratch) {
    scratch.clear();
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < target.size() || b < source.size()) {
        if (b == source.size() || (a < target.size() && target[a].first < source[b].first)) {
            scratch.push_back(target[a++]);
        } else if (a == target.size() || source[b].first < target[a].first) {
            scratch.emplace_back(source[b].first, source[b].second * factor % p);
            ++b;
        } else {
            int c = (target[a].second + source[b].second * factor) % p;
            if (c != 0) scratch.emplace_back(target[a].first, c);
            ++a;
            ++b;
        }
    }
    target.swap(scratch);
}

// Reduced Betti numbers of a simplicial complex given by its faces grouped by
// size (faces[k] lists the faces with k vertices, faces[0] = {empty set}).
// index_of(mask) must return the position of a face inside its size group.
// Result entry k is dim H~_{k-1}.
template <class Mask, class IndexOf>
std::vector<long> reduced_betti(const std::vector<std::vector<Mask>>& faces, IndexOf&& index_of, const PrimeField& field) {
    int top = static_cast<int>(faces.size()) - 1;
    int p = field.p();
    std::vector<long> rank(static_cast<std::size_t>(top) + 2, 0);
    std::vector<char> cleared;
    SparseColumn col;
    SparseColumn scratch;
    for (int k = top; k >= 1; --k) {
        const auto& cols = faces[k];
        std::vector<char> next_cleared(faces[k - 1].size(), 0);
        std::vector<int> pivot_of_row(faces[k - 1].size(), -1);
        std::vector<SparseColumn> reduced;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (!cleared.empty() && cleared[c]) continue;
            col.clear();
            Mask f = cols[c];
            int t = 0;
            for (Mask rest = f; rest; rest &= rest - 1, ++t) {
                Mask bit = rest & (~rest + 1);
                int coef = (t % 2 == 0) ? 1 : field.neg(1);
                col.emplace_back(index_of(static_cast<Mask>(f ^ bit)), coef);
            }
            std::sort(col.begin(), col.end());
            while (!col.empty()) {
                int low = col.back().first;
                int owner = pivot_of_row[low];
                if (owner < 0) break;
                const SparseColumn& other = reduced[owner];
                int factor = field.neg(col.back().second * field.inv(other.back().second) % p);
                axpy(col, other, factor, p, scratch);
            }
            if (!col.empty()) {
                pivot_of_row[col.back().first] = static_cast<int>(reduced.size());
                next_cleared[col.back().first] = 1;
                reduced.push_back(col);
                ++rank[k];
            }
        }
        cleared.swap(next_cleared);
    }
    std::vector<long> betti(static_cast<std::size_t>(top) + 1, 0);
    for (int k = 0; k <= top; ++k)
        betti[k] = static_cast<long>(faces[k].size()) - rank[k] - rank[k + 1];
    return betti;
}

}  // namespace nureg::detail
