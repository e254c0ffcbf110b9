#include "bbk/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace bbk {

namespace {

// Recursion engine.  Local side 0 is the initiating side (roots live there),
// local side 1 the other.  Each side has one working array holding a
// permutation of its vertices plus a position index; a frame sees two windows
//   X = [xl, xr)   P = [xr, pr)
// per side.  Child frames re-partition the opposite side around the X|P
// boundary so their windows stay contiguous.  Every swap stays inside the
// frame's live X-or-P window, so the union X∪P of any ancestor survives all
// descendant activity as a set.  The X|P split itself is not preserved for
// free: retiring a processed vertex (P -> X, xr moves up) makes the live X
// window straddle the entry boundary, and later child partitions may mix
// members across it.  Each branching frame therefore snapshots its entry X
// segments and re-places them before returning, which is O(|X|) and keeps
// every caller's windows exact.
class Engine {
public:
    Engine(const BipartiteGraph& g, Side init, const BidegeneracyOrder& order,
           const BicliqueSink& sink, const EnumerateOptions& opt)
        : g_(g), init_(init), order_(order), sink_(sink), opt_(opt) {
        n_[0] = static_cast<std::uint32_t>(g.vertex_count(init_));
        n_[1] = static_cast<std::uint32_t>(g.vertex_count(other_side(init_)));
        for (int s = 0; s < 2; ++s) {
            arr_[s].resize(n_[s]);
            pos_[s].resize(n_[s]);
            for (VertexId i = 0; i < n_[s]; ++i) arr_[s][i] = pos_[s][i] = i;
        }
        stamp_.assign(n_[0], 0);
        selected_.assign(n_[0], 0);
    }

    RunStatistics run() {
        for (std::size_t i = 0; i < order_.sequence.size(); ++i) {
            const VertexId u = order_.sequence[i];
            const std::uint64_t pi = root(u);
            if (opt_.root_candidate_sizes) opt_.root_candidate_sizes->push_back(pi);
            stats_.max_root_candidates = std::max(stats_.max_root_candidates, pi);
            selected_[u] = 1;
        }
        return stats_;
    }

private:
    struct Window {
        std::uint32_t xl, xr, pr;
        std::uint32_t px_size() const { return pr - xl; }
        std::uint32_t p_size() const { return pr - xr; }
        std::uint32_t x_size() const { return xr - xl; }
    };

    Side actual(int ls) const { return ls == 0 ? init_ : other_side(init_); }
    std::span<const VertexId> nbrs(int ls, VertexId v) const { return g_.neighbors(actual(ls), v); }

    void swap_to(int ls, VertexId v, std::uint32_t dst) {
        auto& arr = arr_[ls];
        auto& pos = pos_[ls];
        const std::uint32_t src = pos[v];
        if (src == dst) return;
        const VertexId w = arr[dst];
        arr[dst] = v;
        arr[src] = w;
        pos[v] = dst;
        pos[w] = src;
    }

    // Roots skipped for isolated vertices: their only maximal biclique would
    // be a one-sided set, which the trivial rule owns.  Returns |P_i|.
    std::uint64_t root(VertexId u) {
        if (g_.degree(init_, u) == 0) return 0;

        // N2(u) via stamping, split selected (-> X) / unselected (-> P)
        n2buf_.clear();
        ++tick_;
        for (VertexId v : nbrs(0, u))
            for (VertexId w : nbrs(1, v))
                if (w != u && stamp_[w] != tick_) {
                    stamp_[w] = tick_;
                    n2buf_.push_back(w);
                }
        std::uint32_t k = 0;
        for (VertexId w : n2buf_)
            if (selected_[w]) swap_to(0, w, k++);
        std::uint32_t e = k;
        for (VertexId w : n2buf_)
            if (!selected_[w]) swap_to(0, w, e++);

        auto nb = nbrs(0, u);
        for (std::uint32_t j = 0; j < nb.size(); ++j) swap_to(1, nb[j], j);

        Window w0{0, k, e};
        Window w1{0, 0, static_cast<std::uint32_t>(nb.size())};
        const std::uint64_t pi = w0.p_size() + w1.p_size();

        r_[0].assign(1, u);
        r_[1].clear();
        bkmbe(w0, w1, 0);
        return pi;
    }

    // Move members of window [lo, hi) that appear in nb to its tail; returns
    // the new low boundary of the moved block [ret, hi).
    std::uint32_t keep_right(int ls, std::uint32_t lo, std::uint32_t hi,
                             std::span<const VertexId> nb, std::size_t depth) {
        std::uint32_t ret = hi;
        if (nb.size() <= static_cast<std::size_t>(hi - lo)) {
            for (VertexId w : nb) {
                const std::uint32_t p = pos_[ls][w];
                if (p >= lo && p < ret) swap_to(ls, w, --ret);
            }
        } else {
            auto& tmp = tmpbuf(depth);
            tmp.assign(arr_[ls].begin() + lo, arr_[ls].begin() + hi);
            for (VertexId w : tmp)
                if (std::binary_search(nb.begin(), nb.end(), w))
                    swap_to(ls, w, --ret);
        }
        return ret;
    }

    // Mirror image: moved block becomes [lo, ret).
    std::uint32_t keep_left(int ls, std::uint32_t lo, std::uint32_t hi,
                            std::span<const VertexId> nb, std::size_t depth) {
        std::uint32_t ret = lo;
        if (nb.size() <= static_cast<std::size_t>(hi - lo)) {
            for (VertexId w : nb) {
                const std::uint32_t p = pos_[ls][w];
                if (p >= ret && p < hi) swap_to(ls, w, ret++);
            }
        } else {
            auto& tmp = tmpbuf(depth);
            tmp.assign(arr_[ls].begin() + lo, arr_[ls].begin() + hi);
            for (VertexId w : tmp)
                if (std::binary_search(nb.begin(), nb.end(), w))
                    swap_to(ls, w, ret++);
        }
        return ret;
    }

    std::uint64_t count_p_intersection(int ls, const Window& w, std::span<const VertexId> nb) {
        std::uint64_t c = 0;
        if (nb.size() <= w.p_size()) {
            for (VertexId v : nb) {
                const std::uint32_t p = pos_[ls][v];
                if (p >= w.xr && p < w.pr) ++c;
            }
        } else {
            for (std::uint32_t i = w.xr; i < w.pr; ++i)
                if (std::binary_search(nb.begin(), nb.end(), arr_[ls][i])) ++c;
        }
        return c;
    }

    void emit(const Window& w0, const Window& w1) {
        // suppress one-sided sets: the recursion only owns bicliques with
        // both parts populated, the trivial rule owns full sides
        if (r_[1].empty() && w1.p_size() == 0) return;
        for (int s = 0; s < 2; ++s) {
            auto& out = emitbuf_[s];
            const Window& w = s == 0 ? w0 : w1;
            out.assign(r_[s].begin(), r_[s].end());
            out.insert(out.end(), arr_[s].begin() + w.xr, arr_[s].begin() + w.pr);
            std::sort(out.begin(), out.end());
        }
        ++stats_.maximal_count;
        stats_.q_observed = std::max<std::uint64_t>(stats_.q_observed,
                                                    emitbuf_[0].size() + emitbuf_[1].size());
        if (init_ == Side::Left)
            sink_(emitbuf_[0], emitbuf_[1]);
        else
            sink_(emitbuf_[1], emitbuf_[0]);
    }

    void verify_frame(const Window& w0, const Window& w1) const {
        // R is a biclique
        for (VertexId a : r_[0])
            for (VertexId b : r_[1]) {
                auto nb = nbrs(0, a);
                if (!std::binary_search(nb.begin(), nb.end(), b))
                    throw std::logic_error("frame invariant: R is not a biclique");
            }
        // every candidate/excluded vertex extends R: adjacent to all of the
        // opposite part of R (same-side membership is unconstrained)
        for (int s = 0; s < 2; ++s) {
            const Window& w = s == 0 ? w0 : w1;
            for (std::uint32_t i = w.xl; i < w.pr; ++i) {
                const VertexId x = arr_[s][i];
                auto nb = nbrs(s, x);
                for (VertexId b : r_[1 - s])
                    if (!std::binary_search(nb.begin(), nb.end(), b))
                        throw std::logic_error("frame invariant: P/X member does not extend R");
                for (VertexId a : r_[s])
                    if (a == x) throw std::logic_error("frame invariant: P/X overlaps R");
            }
        }
    }

    void bkmbe(Window w0, Window w1, std::size_t depth) {
        const bool x_empty = w0.x_size() == 0 && w1.x_size() == 0;
        if ((w0.p_size() == 0 || w1.p_size() == 0) && x_empty) {
            emit(w0, w1);
            ++stats_.leaf_count;
            return;
        }
        if ((w0.p_size() == 0 && w1.x_size() != 0) || (w1.p_size() == 0 && w0.x_size() != 0)) {
            ++stats_.leaf_count;
            return;
        }
        if (opt_.verify_frames) verify_frame(w0, w1);

        // pivot: minimize |Q| = |P_opp \ N(p)| (+1 when p itself is a
        // candidate); ties prefer P over X, the initiating side, smaller id
        struct Key {
            std::uint64_t cost;
            int cls, ls;
            VertexId id;
            bool operator<(const Key& o) const {
                if (cost != o.cost) return cost < o.cost;
                if (cls != o.cls) return cls < o.cls;
                if (ls != o.ls) return ls < o.ls;
                return id < o.id;
            }
        };
        Key best{UINT64_MAX, 0, 0, 0};
        int pivot_ls = 0;
        for (int ls = 0; ls < 2; ++ls) {
            const Window& own = ls == 0 ? w0 : w1;
            const Window& opp = ls == 0 ? w1 : w0;
            for (std::uint32_t i = own.xl; i < own.pr; ++i) {
                const VertexId cand = arr_[ls][i];
                const int cls = i >= own.xr ? 0 : 1;
                const std::uint64_t qsize = opp.p_size() -
                                            count_p_intersection(1 - ls, opp, nbrs(ls, cand)) +
                                            (cls == 0 ? 1 : 0);
                Key key{qsize, cls, ls, cand};
                if (key < best) {
                    best = key;
                    pivot_ls = ls;
                }
            }
        }
        const VertexId pivot = best.id;
        const bool pivot_in_p = best.cls == 0;

        // Q = [pivot if in P] + (P of the opposite side) \ N(pivot), ascending
        auto& q = qbuf(depth);
        q.clear();
        {
            const int t = 1 - pivot_ls;
            const Window& opp = pivot_ls == 0 ? w1 : w0;
            auto nb = nbrs(pivot_ls, pivot);
            for (std::uint32_t i = opp.xr; i < opp.pr; ++i) {
                const VertexId w = arr_[t][i];
                if (!std::binary_search(nb.begin(), nb.end(), w)) q.push_back(w);
            }
            std::sort(q.begin(), q.end());
        }

        // Retiring a processed vertex grows this frame's X window across its
        // entry X|P boundary, and later child partitions mix members freely
        // within that merged window.  Mid-frame that is harmless (the live
        // window is one set), but the caller's windows are position ranges:
        // before returning, the entry X segments must hold the entry X sets
        // again.  Snapshot them now, re-place on the way out.
        auto& xsnap0 = xsnapbuf(depth, 0);
        auto& xsnap1 = xsnapbuf(depth, 1);
        xsnap0.assign(arr_[0].begin() + w0.xl, arr_[0].begin() + w0.xr);
        xsnap1.assign(arr_[1].begin() + w1.xl, arr_[1].begin() + w1.xr);

        std::uint64_t children = 0;
        auto step = [&](VertexId x, int ls) {
            const int t = 1 - ls;
            Window& own = ls == 0 ? w0 : w1;
            Window& opp = ls == 0 ? w1 : w0;
            assert(pos_[ls][x] >= own.xr && pos_[ls][x] < own.pr);

            auto nb = nbrs(ls, x);
            swap_to(ls, x, own.pr - 1);
            Window cown{own.xl, own.xr, own.pr - 1};
            Window copp{keep_right(t, opp.xl, opp.xr, nb, depth), opp.xr,
                        keep_left(t, opp.xr, opp.pr, nb, depth)};

            r_[ls].push_back(x);
            if (ls == 0)
                bkmbe(cown, copp, depth + 1);
            else
                bkmbe(copp, cown, depth + 1);
            r_[ls].pop_back();
            ++children;

            // retire x: P -> X on its own side
            swap_to(ls, x, own.xr);
            ++own.xr;
        };
        if (pivot_in_p) step(pivot, pivot_ls);
        for (VertexId x : q) step(x, 1 - pivot_ls);

        for (int s = 0; s < 2; ++s) {
            const auto& snap = s == 0 ? xsnap0 : xsnap1;
            std::uint32_t slot = s == 0 ? w0.xl : w1.xl;
            for (VertexId v : snap) swap_to(s, v, slot++);
        }

        if (children == 0)
            ++stats_.leaf_count;
        else
            ++stats_.internal_count;
    }

    std::vector<VertexId>& qbuf(std::size_t depth) {
        if (qbufs_.size() <= depth) qbufs_.resize(depth + 1);
        return qbufs_[depth];
    }
    std::vector<VertexId>& tmpbuf(std::size_t depth) {
        if (tmpbufs_.size() <= depth) tmpbufs_.resize(depth + 1);
        return tmpbufs_[depth];
    }
    std::vector<VertexId>& xsnapbuf(std::size_t depth, int s) {
        auto& bufs = xsnapbufs_[s];
        if (bufs.size() <= depth) bufs.resize(depth + 1);
        return bufs[depth];
    }

    const BipartiteGraph& g_;
    const Side init_;
    const BidegeneracyOrder& order_;
    const BicliqueSink& sink_;
    const EnumerateOptions& opt_;

    std::uint32_t n_[2];
    std::array<std::vector<VertexId>, 2> arr_, pos_;
    std::array<std::vector<VertexId>, 2> r_;
    std::array<std::vector<VertexId>, 2> emitbuf_;
    std::vector<VertexId> n2buf_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t tick_ = 0;
    std::vector<char> selected_;
    // deque: growth at the back must not invalidate references held
    // across recursive calls
    std::deque<std::vector<VertexId>> qbufs_, tmpbufs_;
    std::array<std::deque<std::vector<VertexId>>, 2> xsnapbufs_;
    RunStatistics stats_;
};

}  // namespace

RunStatistics enumerate(const BipartiteGraph& g, Side side, const BidegeneracyOrder& order,
                        const BicliqueSink& sink, const EnumerateOptions& opt) {
    if (order.side != side || order.sequence.size() != g.vertex_count(side) ||
        order.residual.size() != order.sequence.size())
        throw std::invalid_argument("enumerate: order does not match graph/side");
    Engine engine(g, side, order, sink, opt);
    RunStatistics stats = engine.run();
    if (opt.include_trivial) stats.emitted_trivial = emit_trivial_bicliques(g, sink);
    return stats;
}

std::vector<Biclique> collect_bicliques(const BipartiteGraph& g, Side side,
                                        const EnumerateOptions& opt, RunStatistics* stats) {
    std::vector<Biclique> out;
    auto order = bidegeneracy_order(g, side);
    RunStatistics st = enumerate(
        g, side, order,
        [&](std::span<const VertexId> l, std::span<const VertexId> r) {
            out.push_back({{l.begin(), l.end()}, {r.begin(), r.end()}});
        },
        opt);
    if (stats) *stats = st;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bbk
