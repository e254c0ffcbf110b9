#include "bbk/enumerate.hpp"

#include <numeric>

namespace bbk {

std::uint32_t emit_trivial_bicliques(const BipartiteGraph& g, const BicliqueSink& sink) {
    std::uint32_t emitted = 0;
    for (int si = 0; si < 2; ++si) {
        const Side s = static_cast<Side>(si);
        const Side t = other_side(s);
        const std::size_t n = g.vertex_count(s);
        if (n == 0) continue;
        // the full side is maximal iff no opposite vertex covers it entirely
        bool dominated = false;
        for (VertexId v = 0; v < g.vertex_count(t) && !dominated; ++v)
            dominated = g.degree(t, v) == n;
        if (dominated) continue;
        std::vector<VertexId> all(n);
        std::iota(all.begin(), all.end(), VertexId{0});
        if (s == Side::Left)
            sink(all, {});
        else
            sink({}, all);
        ++emitted;
    }
    return emitted;
}

}  // namespace bbk
