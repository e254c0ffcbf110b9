#pragma once

#include <cstddef>

#include "bbk/enumerate.hpp"

namespace bbk {

// Exhaustive oracle: for every non-empty subset A of `side`, form the common
// neighborhood B and keep (A, B) iff B is non-empty and the common
// neighborhood of B is exactly A.  Independent of the recursion machinery.
// Hard capacity: |side| <= 20 (throws CapacityError).
std::vector<Biclique> brute_force_maximal_bicliques(const BipartiteGraph& g, Side side,
                                                    bool include_trivial = true);

// Baseline oracle: maximal cliques of the clique-extended graph, found by a
// pivoted clique search over a min-degree peeling order of all vertices.  The
// same-side clique edges are implicit (N_C(x) = N(x) + own side minus x), never
// materialized.  Output matches enumerate() with include_trivial on.
// Hard capacity: |left| + |right| <= 5000 (throws CapacityError).
// Streaming form; emission order is the search's, not sorted.
RunStatistics clique_extended_enumerate(const BipartiteGraph& g, const BicliqueSink& sink,
                                        bool include_trivial = true);
// Collecting form: sorted vector, stats by request.
std::vector<Biclique> clique_extended_enumerate(const BipartiteGraph& g,
                                                bool include_trivial = true,
                                                RunStatistics* stats = nullptr);

}  // namespace bbk
