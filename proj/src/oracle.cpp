#include "bbk/oracle.hpp"

#include <algorithm>
#include <queue>

namespace bbk {

namespace {

// sorted intersection: out = a ∩ b
void intersect_into(std::span<const VertexId> a, std::span<const VertexId> b,
                    std::vector<VertexId>& out) {
    out.clear();
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

void append_trivial(const BipartiteGraph& g, std::vector<Biclique>& out) {
    emit_trivial_bicliques(g, [&](std::span<const VertexId> l, std::span<const VertexId> r) {
        out.push_back({{l.begin(), l.end()}, {r.begin(), r.end()}});
    });
}

}  // namespace

std::vector<Biclique> brute_force_maximal_bicliques(const BipartiteGraph& g, Side side,
                                                    bool include_trivial) {
    const std::size_t n = g.vertex_count(side);
    if (n > 20)
        throw CapacityError("brute force oracle: side has " + std::to_string(n) +
                            " vertices, limit is 20");
    const Side t = other_side(side);

    std::vector<Biclique> out;
    std::vector<VertexId> common, closure, tmp;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        // common neighborhood of A = {i : mask bit i}
        bool first = true;
        bool dead = false;
        for (std::uint32_t i = 0; i < n && !dead; ++i) {
            if (!(mask & (1u << i))) continue;
            auto nb = g.neighbors(side, i);
            if (first) {
                common.assign(nb.begin(), nb.end());
                first = false;
            } else {
                intersect_into(common, nb, tmp);
                common.swap(tmp);
            }
            dead = common.empty();
        }
        if (dead || common.empty()) continue;
        // Galois closure: common neighborhood of B must come back to exactly A
        first = true;
        for (VertexId v : common) {
            auto nb = g.neighbors(t, v);
            if (first) {
                closure.assign(nb.begin(), nb.end());
                first = false;
            } else {
                intersect_into(closure, nb, tmp);
                closure.swap(tmp);
            }
        }
        std::uint32_t closure_mask = 0;
        bool overflow = false;
        for (VertexId u : closure) {
            if (u >= 32) { overflow = true; break; }
            closure_mask |= 1u << u;
        }
        if (overflow || closure_mask != mask) continue;
        std::vector<VertexId> a;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i)) a.push_back(i);
        if (side == Side::Left)
            out.push_back({std::move(a), common});
        else
            out.push_back({common, std::move(a)});
    }
    if (include_trivial) append_trivial(g, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Pivoted maximal-clique search over the implicit clique-extended graph.
// Unified ids: [0, nl) left, [nl, nl+nr) right; same-side pairs are always
// adjacent, cross-side adjacency is the bipartite edge set.
class CliqueExtended {
public:
    CliqueExtended(const BipartiteGraph& g, const BicliqueSink& sink, RunStatistics& stats)
        : sink_(sink), stats_(stats) {
        nl_ = g.vertex_count(Side::Left);
        n_ = nl_ + g.vertex_count(Side::Right);
        adj_.resize(n_);
        for (VertexId u = 0; u < nl_; ++u) {
            auto nb = g.neighbors(Side::Left, u);
            adj_[u].reserve(nb.size());
            for (VertexId v : nb) adj_[u].push_back(v + static_cast<VertexId>(nl_));
        }
        for (std::size_t v = 0; v < n_ - nl_; ++v) {
            auto nb = g.neighbors(Side::Right, static_cast<VertexId>(v));
            adj_[nl_ + v].assign(nb.begin(), nb.end());
        }
    }

    bool left(VertexId x) const { return x < nl_; }
    bool bip_adjacent(VertexId x, VertexId y) const {
        return std::binary_search(adj_[x].begin(), adj_[x].end(), y);
    }
    // adjacency in the extended graph
    bool adjacent_c(VertexId x, VertexId y) const {
        if (x == y) return false;
        return left(x) == left(y) || bip_adjacent(x, y);
    }

    // min-degree peeling over extended degrees; deterministic: ties toward
    // the smaller (priority, unified id) pair, and left ids sort first.
    std::vector<VertexId> degeneracy_order() const {
        std::vector<std::size_t> bipdeg(n_);
        std::vector<char> alive(n_, 1);
        std::size_t side_alive[2] = {nl_, n_ - nl_};
        using Entry = std::pair<std::size_t, VertexId>;  // (bipdeg at push, id)
        auto cmp = [](const Entry& a, const Entry& b) { return a > b; };
        std::vector<std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)>> heap(
            2, std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)>(cmp));
        for (VertexId x = 0; x < n_; ++x) {
            bipdeg[x] = adj_[x].size();
            heap[left(x) ? 0 : 1].push({bipdeg[x], x});
        }
        auto prio = [&](int s, const Entry& e) {
            return e.first + side_alive[s] - 1;  // extended degree among remaining
        };
        std::vector<VertexId> order;
        order.reserve(n_);
        while (order.size() < n_) {
            for (int s = 0; s < 2; ++s)
                while (!heap[s].empty() &&
                       (!alive[heap[s].top().second] ||
                        bipdeg[heap[s].top().second] != heap[s].top().first))
                    heap[s].pop();
            int s;
            if (heap[0].empty())
                s = 1;
            else if (heap[1].empty())
                s = 0;
            else
                s = prio(0, heap[0].top()) <= prio(1, heap[1].top()) ? 0 : 1;
            const VertexId x = heap[s].top().second;
            heap[s].pop();
            alive[x] = 0;
            --side_alive[s];
            order.push_back(x);
            for (VertexId y : adj_[x])
                if (alive[y]) heap[left(y) ? 0 : 1].push({--bipdeg[y], y});
        }
        return order;
    }

    void run(const std::vector<VertexId>& order) {
        std::vector<std::size_t> pos(n_);
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
        std::vector<VertexId> r;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const VertexId x = order[i];
            if (adj_[x].empty()) continue;  // one-sided only; handled by the trivial rule
            std::vector<VertexId> p, xs;
            auto place = [&](VertexId y) {
                if (pos[y] > i)
                    p.push_back(y);
                else
                    xs.push_back(y);
            };
            const VertexId lo = left(x) ? 0 : static_cast<VertexId>(nl_);
            const VertexId hi = left(x) ? static_cast<VertexId>(nl_) : static_cast<VertexId>(n_);
            for (VertexId y = lo; y < hi; ++y)
                if (y != x) place(y);
            for (VertexId y : adj_[x]) place(y);
            std::sort(p.begin(), p.end());
            std::sort(xs.begin(), xs.end());
            stats_.max_root_candidates =
                std::max<std::uint64_t>(stats_.max_root_candidates, p.size());
            r.assign(1, x);
            bk(r, p, xs);
        }
    }

private:
    void emit(const std::vector<VertexId>& r) {
        emit_l_.clear();
        emit_r_.clear();
        for (VertexId x : r)
            (left(x) ? emit_l_ : emit_r_)
                .push_back(left(x) ? x : x - static_cast<VertexId>(nl_));
        if (emit_l_.empty() || emit_r_.empty()) return;  // full-side clique; trivial rule owns it
        std::sort(emit_l_.begin(), emit_l_.end());
        std::sort(emit_r_.begin(), emit_r_.end());
        ++stats_.maximal_count;
        stats_.q_observed = std::max<std::uint64_t>(stats_.q_observed, r.size());
        sink_(emit_l_, emit_r_);
    }

    void bk(std::vector<VertexId>& r, std::vector<VertexId>& p, std::vector<VertexId>& x) {
        if (p.empty() && x.empty()) {
            emit(r);
            ++stats_.leaf_count;
            return;
        }
        // pivot minimizing |P \ N_C(p)|, scanned P then X, ascending id
        std::size_t best = SIZE_MAX;
        VertexId pivot = 0;
        auto consider = [&](VertexId cand, bool in_p) {
            std::size_t cost = in_p ? 1 : 0;
            for (VertexId y : p)
                if (left(y) != left(cand) && !bip_adjacent(cand, y)) ++cost;
            if (cost < best) {
                best = cost;
                pivot = cand;
            }
        };
        for (VertexId cand : p) consider(cand, true);
        for (VertexId cand : x) consider(cand, false);

        std::vector<VertexId> q;
        for (VertexId y : p)
            if (!adjacent_c(pivot, y)) q.push_back(y);

        std::size_t children = 0;
        std::vector<VertexId> p2, x2;
        for (VertexId y : q) {
            p2.clear();
            x2.clear();
            for (VertexId z : p)
                if (adjacent_c(y, z)) p2.push_back(z);
            for (VertexId z : x)
                if (adjacent_c(y, z)) x2.push_back(z);
            r.push_back(y);
            bk(r, p2, x2);
            r.pop_back();
            ++children;
            p.erase(std::find(p.begin(), p.end(), y));
            auto it = std::lower_bound(x.begin(), x.end(), y);
            x.insert(it, y);
        }
        if (children == 0)
            ++stats_.leaf_count;
        else
            ++stats_.internal_count;
    }

    const BicliqueSink& sink_;
    RunStatistics& stats_;
    std::size_t nl_ = 0;
    std::size_t n_ = 0;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<VertexId> emit_l_, emit_r_;
};

}  // namespace

RunStatistics clique_extended_enumerate(const BipartiteGraph& g, const BicliqueSink& sink,
                                        bool include_trivial) {
    const std::size_t total = g.vertex_count(Side::Left) + g.vertex_count(Side::Right);
    if (total > 5000)
        throw CapacityError("clique-extended oracle: " + std::to_string(total) +
                            " vertices, limit is 5000");
    RunStatistics stats;
    CliqueExtended ce(g, sink, stats);
    ce.run(ce.degeneracy_order());
    if (include_trivial) stats.emitted_trivial = emit_trivial_bicliques(g, sink);
    return stats;
}

std::vector<Biclique> clique_extended_enumerate(const BipartiteGraph& g, bool include_trivial,
                                                RunStatistics* stats) {
    std::vector<Biclique> out;
    RunStatistics local = clique_extended_enumerate(
        g,
        [&](std::span<const VertexId> l, std::span<const VertexId> r) {
            out.push_back({{l.begin(), l.end()}, {r.begin(), r.end()}});
        },
        include_trivial);
    std::sort(out.begin(), out.end());
    if (stats) *stats = local;
    return out;
}

}  // namespace bbk
