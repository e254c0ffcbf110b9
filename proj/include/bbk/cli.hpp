#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "bbk/bipartite_graph.hpp"

namespace bbk::cli {

enum class SideChoice { Left, Right, Smaller, MeanBidegen };
enum class EngineChoice { Bbk, Extended, Brute };
enum class OutputMode { List, Count };

struct RunConfig {
    std::string input_path;
    SideChoice side = SideChoice::Smaller;
    EngineChoice engine = EngineChoice::Bbk;
    OutputMode output_mode = OutputMode::List;
    std::string output_path;  // empty: standard output
    std::string stats_path;   // empty: no stats document
    bool sort_output = false;
    bool include_trivial = true;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;     // bad flags, unreadable input, parse failure
inline constexpr int kExitCapacity = 2;  // oracle capacity exceeded

// One output line: left labels sorted by dense id, space separated, one tab,
// right labels likewise.  A one-sided biclique leaves its empty part blank.
std::string format_biclique(const BipartiteGraph& g, std::span<const VertexId> left,
                            std::span<const VertexId> right);

// Load, enumerate, write output and (optionally) the stats document.
// Diagnostics go to `err`.  Returns one of the exit codes above.
int run(const RunConfig& config, std::ostream& err);

}  // namespace bbk::cli
