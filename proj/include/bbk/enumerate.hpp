#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bbk/bipartite_graph.hpp"
#include "bbk/ordering.hpp"

namespace bbk {

// One biclique, in the graph's natural orientation; both parts sorted by
// dense id.  A one-sided biclique leaves the other part empty.
struct Biclique {
    std::vector<VertexId> left;
    std::vector<VertexId> right;

    friend bool operator==(const Biclique&, const Biclique&) = default;
    friend bool operator<(const Biclique& a, const Biclique& b) {
        return a.left != b.left ? a.left < b.left : a.right < b.right;
    }
};

// Call-tree instrumentation for one enumeration run.  maximal_count (B) and
// q_observed cover recursion-emitted (non-trivial) bicliques only; the
// one-sided emissions are tallied separately in emitted_trivial.
struct RunStatistics {
    std::uint64_t maximal_count = 0;        // B
    std::uint64_t leaf_count = 0;           // calls that made zero recursive calls
    std::uint64_t internal_count = 0;       // calls that made at least one
    std::uint64_t q_observed = 0;           // max |left|+|right| over non-trivial output
    std::uint64_t max_root_candidates = 0;  // max |P_i| over roots
    std::uint32_t emitted_trivial = 0;      // 0..2

    std::uint64_t call_count() const { return leaf_count + internal_count; }
    // B / leaf_count; empty when no call was ever made
    std::optional<double> ratio() const {
        if (leaf_count == 0) return std::nullopt;
        return static_cast<double>(maximal_count) / static_cast<double>(leaf_count);
    }
};

// Receives each biclique as (left, right) spans sorted by dense id, already
// mapped back to the graph's natural orientation whatever initiating side the
// run used.  The spans alias engine scratch: copy if you keep them.
// Exceptions thrown by the sink abort the run and propagate.
using BicliqueSink =
    std::function<void(std::span<const VertexId> left, std::span<const VertexId> right)>;

struct EnumerateOptions {
    bool include_trivial = true;
    // When set, one entry per order position is appended: |P_i| for the root
    // launched there (0 for roots skipped as isolated).
    std::vector<std::uint64_t>* root_candidate_sizes = nullptr;
    // O(|frame|^2) invariant checks on every recursion frame; test use only.
    bool verify_frames = false;
};

// Exhaustive maximal biclique enumeration: one pivoted recursion per
// initiating-side vertex, in bidegeneracy order, candidates restricted to the
// root's projection-extended neighborhood.  `order` must be for `side` on
// this graph.  Emits every maximal biclique with both parts non-empty exactly
// once, then (if include_trivial) the one-sided maximal sides.
RunStatistics enumerate(const BipartiteGraph& g, Side side, const BidegeneracyOrder& order,
                        const BicliqueSink& sink, const EnumerateOptions& opt = {});

// The one-sided rule: the full side S is maximal iff S is non-empty and no
// opposite vertex is adjacent to all of S (degree == |S|).  Emits 0..2
// bicliques, returns how many.
std::uint32_t emit_trivial_bicliques(const BipartiteGraph& g, const BicliqueSink& sink);

// Convenience: run with a collecting sink, return the sorted list.
std::vector<Biclique> collect_bicliques(const BipartiteGraph& g, Side side,
                                        const EnumerateOptions& opt = {},
                                        RunStatistics* stats = nullptr);

}  // namespace bbk
