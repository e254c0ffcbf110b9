#include "bbk/bipartite_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <unordered_map>

namespace bbk {

void BipartiteGraph::build_csr(std::size_t n_left, std::size_t n_right,
                               std::vector<std::pair<VertexId, VertexId>>& edges,
                               std::size_t* duplicates) {
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    if (duplicates) *duplicates = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());
    m_ = edges.size();

    const std::size_t n[2] = {n_left, n_right};
    for (int s = 0; s < 2; ++s) {
        off_[s].assign(n[s] + 1, 0);
        adj_[s].clear();
        adj_[s].reserve(m_);
    }
    for (const auto& [u, v] : edges) {
        ++off_[0][u + 1];
        ++off_[1][v + 1];
    }
    for (int s = 0; s < 2; ++s)
        for (std::size_t i = 1; i <= n[s]; ++i) off_[s][i] += off_[s][i - 1];

    // edges are sorted by (u, v): left adjacency comes out sorted directly
    adj_[0].resize(m_);
    adj_[1].resize(m_);
    std::vector<std::size_t> cursor = off_[1];
    std::size_t k = 0;
    for (const auto& [u, v] : edges) {
        adj_[0][k++] = v;
        adj_[1][cursor[v]++] = u;  // u ascending per v, since edges are sorted
    }
}

BipartiteGraph BipartiteGraph::from_edges(std::size_t n_left, std::size_t n_right,
                                          std::vector<std::pair<VertexId, VertexId>> edges) {
    for (const auto& [u, v] : edges)
        if (u >= n_left || v >= n_right)
            throw std::invalid_argument("from_edges: vertex id out of range");
    BipartiteGraph g;
    g.build_csr(n_left, n_right, edges, nullptr);
    for (int s = 0; s < 2; ++s) {
        const std::size_t n = (s == 0) ? n_left : n_right;
        g.labels_[s].resize(n);
        for (std::size_t i = 0; i < n; ++i) g.labels_[s][i] = std::to_string(i);
    }
    return g;
}

std::vector<VertexId> BipartiteGraph::second_neighbors(Side s, VertexId v) const {
    std::vector<VertexId> out;
    const Side t = other_side(s);
    for (VertexId w : neighbors(s, v))
        for (VertexId x : neighbors(t, w))
            if (x != v) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::pair<std::vector<VertexId>, std::vector<VertexId>>
BipartiteGraph::projection_extended_neighborhood(Side s, VertexId v) const {
    auto n = neighbors(s, v);
    return {second_neighbors(s, v), std::vector<VertexId>(n.begin(), n.end())};
}

BipartiteGraph BipartiteGraph::swapped() const {
    BipartiteGraph g;
    g.off_ = {off_[1], off_[0]};
    g.adj_ = {adj_[1], adj_[0]};
    g.labels_ = {labels_[1], labels_[0]};
    g.m_ = m_;
    return g;
}

namespace {

// Splits on runs of spaces/tabs; '\r' already stripped by the caller.
void split_tokens(const std::string& line, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.emplace_back(line.data() + i, j - i);
        i = j;
    }
}

}  // namespace

BipartiteGraph load_edge_list(std::istream& in, const LoadOptions& opt, LoadDiagnostics* diag) {
    std::array<std::unordered_map<std::string, VertexId>, 2> ids;
    std::array<std::vector<std::string>, 2> labels;
    std::vector<std::pair<VertexId, VertexId>> edges;
    LoadDiagnostics local;

    auto intern = [&](int s, std::string_view tok) -> VertexId {
        auto it = ids[s].find(std::string(tok));
        if (it != ids[s].end()) return it->second;
        VertexId id = static_cast<VertexId>(labels[s].size());
        labels[s].emplace_back(tok);
        ids[s].emplace(labels[s].back(), id);
        return id;
    };

    std::string line;
    std::vector<std::string_view> tok;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && (line[0] == '%' || line[0] == '#')) {
            ++local.comment_lines;
            continue;
        }
        split_tokens(line, tok);
        if (tok.empty()) {
            ++local.blank_lines;
            continue;
        }
        if (tok.size() < 2) throw ParseError(lineno, "expected at least 2 tokens, got 1");
        edges.emplace_back(intern(0, tok[0]), intern(1, tok[1]));
    }
    if (in.bad()) throw std::runtime_error("I/O error while reading edge list");
    if (opt.strict && edges.empty())
        throw std::runtime_error("strict mode: input contains no edges");

    BipartiteGraph g;
    g.labels_ = std::move(labels);
    g.build_csr(g.labels_[0].size(), g.labels_[1].size(), edges, &local.duplicate_edges);
    if (diag) *diag = local;
    return g;
}

BipartiteGraph load_edge_list_file(const std::string& path, const LoadOptions& opt,
                                   LoadDiagnostics* diag) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return load_edge_list(in, opt, diag);
}

GraphStats compute_stats(const BipartiteGraph& g) {
    GraphStats st;
    std::size_t* const dmax[2] = {&st.d_left, &st.d_right};
    std::size_t* const d2max[2] = {&st.d2_left, &st.d2_right};
    for (int si = 0; si < 2; ++si) {
        const Side s = static_cast<Side>(si);
        const Side t = other_side(s);
        const std::size_t n = g.vertex_count(s);
        // stamp-based N2 size per vertex; one pass, no per-vertex allocation
        std::vector<VertexId> stamp(n, static_cast<VertexId>(-1));
        for (VertexId v = 0; v < n; ++v) {
            *dmax[si] = std::max(*dmax[si], g.degree(s, v));
            std::size_t n2 = 0;
            for (VertexId w : g.neighbors(s, v))
                for (VertexId x : g.neighbors(t, w))
                    if (x != v && stamp[x] != v) {
                        stamp[x] = v;
                        ++n2;
                    }
            *d2max[si] = std::max(*d2max[si], n2);
        }
    }
    st.d = std::max(st.d_left, st.d_right);
    return st;
}

}  // namespace bbk
