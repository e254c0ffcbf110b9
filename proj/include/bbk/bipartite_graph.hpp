#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bbk {

using VertexId = std::uint32_t;

enum class Side : int { Left = 0, Right = 1 };

constexpr Side other_side(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
constexpr int side_index(Side s) { return static_cast<int>(s); }
constexpr const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

// Malformed input line.  line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Input exceeds a hard limit of an exhaustive baseline.
class CapacityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadOptions {
    bool strict = false;  // reject inputs with zero edges
};

struct LoadDiagnostics {
    std::size_t comment_lines = 0;
    std::size_t blank_lines = 0;
    std::size_t duplicate_edges = 0;  // input lines collapsed into an existing edge
};

// Degree statistics, in the graph's natural orientation (left plays U).
struct GraphStats {
    std::size_t d_left = 0;    // max degree on the left side
    std::size_t d_right = 0;   // max degree on the right side
    std::size_t d2_left = 0;   // max |N2(u)| over left vertices
    std::size_t d2_right = 0;  // max |N2(v)| over right vertices
    std::size_t d = 0;         // max(d_left, d_right)
};

// Unweighted bipartite graph over two disjoint vertex namespaces.  "Left" is
// column 1 of the edge list, "right" is column 2.  Dense ids are assigned per
// side in first-appearance order; adjacency is CSR in both directions with
// neighbor lists sorted ascending.  Immutable after construction, so const
// refs are safe to share across threads.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    // Programmatic constructor.  Vertex counts are explicit so isolated
    // vertices can exist; labels default to the decimal dense id.  Duplicate
    // edges are collapsed.  Throws std::invalid_argument on out-of-range ids.
    static BipartiteGraph from_edges(std::size_t n_left, std::size_t n_right,
                                     std::vector<std::pair<VertexId, VertexId>> edges);

    std::size_t vertex_count(Side s) const { return off_[side_index(s)].size() - 1; }
    std::size_t edge_count() const { return m_; }

    std::span<const VertexId> neighbors(Side s, VertexId v) const {
        const auto& off = off_[side_index(s)];
        const auto& adj = adj_[side_index(s)];
        return {adj.data() + off[v], adj.data() + off[v + 1]};
    }
    std::size_t degree(Side s, VertexId v) const {
        const auto& off = off_[side_index(s)];
        return off[v + 1] - off[v];
    }

    const std::string& label(Side s, VertexId v) const { return labels_[side_index(s)][v]; }

    // N2(v): same-side vertices sharing at least one neighbor with v, v itself
    // excluded.  Sorted ascending.  O(sum of neighbor degrees).
    std::vector<VertexId> second_neighbors(Side s, VertexId v) const;

    // Projection-extended neighborhood of v: (N2(v), N(v)).  The same-side
    // part never contains v; the union is what the initiating-side recursion
    // seeds candidate sets from.
    std::pair<std::vector<VertexId>, std::vector<VertexId>>
    projection_extended_neighborhood(Side s, VertexId v) const;

    // Same graph with the two sides exchanged.  Involution: g.swapped().swapped() == g.
    BipartiteGraph swapped() const;

private:
    friend BipartiteGraph load_edge_list(std::istream&, const LoadOptions&, LoadDiagnostics*);

    void build_csr(std::size_t n_left, std::size_t n_right,
                   std::vector<std::pair<VertexId, VertexId>>& edges,
                   std::size_t* duplicates);

    std::array<std::vector<std::size_t>, 2> off_ = {std::vector<std::size_t>{0},
                                                    std::vector<std::size_t>{0}};
    std::array<std::vector<VertexId>, 2> adj_;
    std::array<std::vector<std::string>, 2> labels_;
    std::size_t m_ = 0;
};

// Reads a whitespace-separated edge list: '%'/'#' lines are comments, blank
// lines are ignored, column 1 = left vertex, column 2 = right vertex, extra
// columns (weights, timestamps) are ignored.  Tokens are compared byte-wise.
// Throws ParseError on a non-comment line with exactly one token, and in
// strict mode on inputs with no edges at all.
BipartiteGraph load_edge_list(std::istream& in, const LoadOptions& opt = {},
                              LoadDiagnostics* diag = nullptr);
BipartiteGraph load_edge_list_file(const std::string& path, const LoadOptions& opt = {},
                                   LoadDiagnostics* diag = nullptr);

GraphStats compute_stats(const BipartiteGraph& g);

inline BipartiteGraph swap_sides(const BipartiteGraph& g) { return g.swapped(); }

}  // namespace bbk
