#include "qmap/resolution.hpp"

#include <stdexcept>

#include "qmap/errors.hpp"
#include "qmap/ideal.hpp"

namespace qmap {

namespace {

/// Streaming RREF rows with recorded pivots; returns true when v was new.
struct Span {
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;

    BitVector reduce(BitVector v) const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (v.get(pivots[i])) v ^= rows[i];
        return v;
    }
    bool insert(BitVector v) {
        v = reduce(std::move(v));
        if (!v.any()) return false;
        pivots.push_back(static_cast<std::size_t>(v.lowest_set()));
        rows.push_back(std::move(v));
        return true;
    }
};

}  // namespace

std::vector<int> betti_numbers(const FiniteTwoGroup& g, int max_degree,
                               std::size_t order_cap, int degree_cap) {
    std::size_t order = g.order();
    if (order > order_cap) throw CapExceeded("betti_numbers: group order over cap");
    if (max_degree > degree_cap) throw CapExceeded("betti_numbers: degree over cap");

    std::vector<std::vector<unsigned>> mul(order, std::vector<unsigned>(order));
    for (unsigned a = 0; a < order; ++a)
        for (unsigned b = 0; b < order; ++b) mul[a][b] = g.mul(a, b);

    // V and W lifts generate G; radical K = sum over them of (gen - 1) K.
    std::vector<unsigned> group_gens;
    for (int i = 0; i < g.n(); ++i) group_gens.push_back(1u << i);
    for (int i = 0; i < g.m(); ++i) group_gens.push_back(1u << (g.n() + i));

    // Left translation by e on F2[G]^b: index (block, h) -> (block, e h).
    auto translate = [&](const BitVector& x, unsigned e, std::size_t blocks) {
        BitVector y(x.size());
        for (std::size_t blk = 0; blk < blocks; ++blk)
            for (unsigned h = 0; h < order; ++h)
                if (x.get(blk * order + h)) y.flip(blk * order + mul[e][h]);
        return y;
    };

    std::vector<int> betti{1};
    // Kernel of the augmentation F2[G] -> F2: spanned by g + 1.
    std::vector<BitVector> ker;
    for (unsigned h = 1; h < order; ++h) {
        BitVector v(order);
        v.set(0);
        v.set(h);
        ker.push_back(std::move(v));
    }
    std::size_t prev_blocks = 1;

    for (int stage = 1; stage <= max_degree; ++stage) {
        Span rad;
        for (unsigned e : group_gens)
            for (auto& k : ker) rad.insert(translate(k, e, prev_blocks) ^ k);
        // Minimal generators: kernel basis reduced modulo the radical part.
        std::vector<BitVector> gens;
        Span chosen = rad;
        for (auto& k : ker) {
            BitVector red = chosen.reduce(k);
            if (!red.any()) continue;
            chosen.pivots.push_back(static_cast<std::size_t>(red.lowest_set()));
            chosen.rows.push_back(red);
            gens.push_back(std::move(red));
        }
        betti.push_back(static_cast<int>(gens.size()));
        if (stage == max_degree) break;

        // Boundary F2[G]^{b} -> F2[G]^{prev_blocks}, columns (j, h) -> h * gen_j.
        std::size_t blocks = gens.size();
        BitMatrix d(prev_blocks * order, blocks * order);
        for (std::size_t j = 0; j < blocks; ++j)
            for (unsigned h = 0; h < order; ++h) {
                BitVector col = translate(gens[j], h, prev_blocks);
                for (std::size_t r = 0; r < col.size(); ++r)
                    if (col.get(r)) d.set(r, j * order + h);
            }
        ker = kernel_basis(d);
        prev_blocks = blocks;
    }
    return betti;
}

PoincareCheck poincare_check(const QuadraticMap& q, int max_degree) {
    FiniteTwoGroup g = FiniteTwoGroup::build(q);
    PoincareCheck out;
    out.betti = betti_numbers(g, max_degree);

    QuotientAlgebra a(q.extension_class(), q.dim_w(), max_degree);
    std::vector<int> hilb = a.hilbert_series();
    // Coefficients of 1/(1-t^2)^n: c_{2i} = C(n+i-1, i).
    int n = q.dim_v();
    out.predicted.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        long long acc = 0;
        for (int j = 0; j <= d && j < static_cast<int>(hilb.size()); ++j) {
            if ((d - j) % 2 != 0) continue;
            int i = (d - j) / 2;
            long long c = 1;
            for (int t = 1; t <= i; ++t) c = c * (n + t - 1) / t;
            acc += hilb[static_cast<std::size_t>(j)] * c;
        }
        out.predicted[static_cast<std::size_t>(d)] = static_cast<int>(acc);
    }
    out.match = true;
    for (int d = 0; d <= max_degree; ++d)
        if (out.betti[static_cast<std::size_t>(d)] != out.predicted[static_cast<std::size_t>(d)])
            out.match = false;
    return out;
}

}  // namespace qmap
