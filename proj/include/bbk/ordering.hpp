#pragma once

#include <cstdint>
#include <vector>

#include "bbk/bipartite_graph.hpp"

namespace bbk {

// Greedy peeling order of one side by residual projection-extended degree:
// repeatedly select the unselected vertex u minimizing |N^P(u) \ selected|,
// ties toward the smaller dense id.  residual[i] is that count at the moment
// sequence[i] was selected; it upper-bounds (and by construction equals) the
// root candidate-set size |P_i| the enumeration sees for that vertex.
struct BidegeneracyOrder {
    Side side = Side::Left;
    std::vector<VertexId> sequence;       // permutation of the side's vertices
    std::vector<std::uint64_t> residual;  // parallel to sequence
    std::uint64_t max_residual = 0;       // b_max, the side's bidegeneracy
    double mean_residual = 0.0;           // b_mean; 0 for an empty side
};

BidegeneracyOrder bidegeneracy_order(const BipartiteGraph& g, Side side);

// residual mapped back per vertex: bounds[v] = residual at v's selection.
std::vector<std::uint64_t> vertex_bidegeneracy_bounds(const BidegeneracyOrder& order);

// b_mean for the side; throws std::domain_error on an empty side (the mean is
// undefined there, while an edgeless non-empty side legitimately has mean 0).
double mean_bidegeneracy(const BipartiteGraph& g, Side side);

}  // namespace bbk
