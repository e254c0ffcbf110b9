#include "bbk/ordering.hpp"

#include <queue>
#include <stdexcept>

namespace bbk {

BidegeneracyOrder bidegeneracy_order(const BipartiteGraph& g, Side side) {
    const Side t = other_side(side);
    const std::size_t n = g.vertex_count(side);
    BidegeneracyOrder ord;
    ord.side = side;
    if (n == 0) return ord;
    ord.sequence.reserve(n);
    ord.residual.reserve(n);

    // residual[u] starts at |N^P(u)| = deg(u) + |N2(u)|; N2 sizes via stamping
    std::vector<std::uint64_t> residual(n);
    std::vector<std::uint64_t> stamp(n, UINT64_MAX);
    std::uint64_t tick = 0;
    for (VertexId u = 0; u < n; ++u) {
        std::uint64_t n2 = 0;
        for (VertexId v : g.neighbors(side, u))
            for (VertexId w : g.neighbors(t, v))
                if (w != u && stamp[w] != tick) {
                    stamp[w] = tick;
                    ++n2;
                }
        residual[u] = g.degree(side, u) + n2;
        ++tick;
    }

    // lazy min-heap of (residual at push, id); stale entries skipped on pop.
    // Residuals only decrease, so the first fresh entry is the true minimum
    // and ties resolve toward the smaller id.
    using Entry = std::pair<std::uint64_t, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    std::vector<char> selected(n, 0);
    for (VertexId u = 0; u < n; ++u) heap.push({residual[u], u});

    std::uint64_t sum = 0;
    while (ord.sequence.size() < n) {
        auto [res, u] = heap.top();
        heap.pop();
        if (selected[u] || residual[u] != res) continue;
        selected[u] = 1;
        ord.sequence.push_back(u);
        ord.residual.push_back(res);
        ord.max_residual = std::max(ord.max_residual, res);
        sum += res;
        // selecting u removes it from N^P(w)\selected exactly for the
        // same-side vertices w in N2(u) (opposite-side members never leave)
        for (VertexId v : g.neighbors(side, u))
            for (VertexId w : g.neighbors(t, v))
                if (w != u && !selected[w] && stamp[w] != tick) {
                    stamp[w] = tick;
                    heap.push({--residual[w], w});
                }
        ++tick;
    }
    ord.mean_residual = n == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(n);
    return ord;
}

std::vector<std::uint64_t> vertex_bidegeneracy_bounds(const BidegeneracyOrder& order) {
    std::vector<std::uint64_t> bounds(order.sequence.size());
    for (std::size_t i = 0; i < order.sequence.size(); ++i)
        bounds[order.sequence[i]] = order.residual[i];
    return bounds;
}

double mean_bidegeneracy(const BipartiteGraph& g, Side side) {
    if (g.vertex_count(side) == 0)
        throw std::domain_error("mean bidegeneracy is undefined for an empty side");
    return bidegeneracy_order(g, side).mean_residual;
}

}  // namespace bbk
