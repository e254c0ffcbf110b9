#include "bbk/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <utility>

#include "bbk/enumerate.hpp"
#include "bbk/oracle.hpp"
#include "bbk/ordering.hpp"

namespace bbk::cli {

namespace {

const char* side_name_of(Side s) { return s == Side::Left ? "left" : "right"; }

const char* engine_name_of(EngineChoice e) {
    switch (e) {
        case EngineChoice::Bbk: return "bbk";
        case EngineChoice::Extended: return "extended";
        case EngineChoice::Brute: return "brute";
    }
    return "?";
}

// smaller side wins; ties go left.  mean-bidegen pays for both orders and
// takes the smaller mean, ties again left (a graph with an empty side is
// edgeless, where the choice cannot change the output).
Side resolve_side(const BipartiteGraph& g, SideChoice choice) {
    switch (choice) {
        case SideChoice::Left: return Side::Left;
        case SideChoice::Right: return Side::Right;
        case SideChoice::Smaller:
            return g.vertex_count(Side::Right) < g.vertex_count(Side::Left) ? Side::Right
                                                                            : Side::Left;
        case SideChoice::MeanBidegen: {
            const double ml = bidegeneracy_order(g, Side::Left).mean_residual;
            const double mr = bidegeneracy_order(g, Side::Right).mean_residual;
            return mr < ml ? Side::Right : Side::Left;
        }
    }
    return Side::Left;
}

void append_labels(std::string& line, const BipartiteGraph& g, Side s,
                   std::span<const VertexId> part) {
    bool first = true;
    for (VertexId v : part) {
        if (!first) line += ' ';
        first = false;
        line += g.label(s, v);
    }
}

struct StatsDoc {
    RunStatistics run;
    std::uint64_t b_max = 0;
    double b_mean = 0.0;
    GraphStats graph{};
    double elapsed_ms = 0.0;
    Side side_used = Side::Left;
    EngineChoice engine = EngineChoice::Bbk;
    bool include_trivial = true;
};

// One JSON token, serialized by the library (escaping, shortest round-trip
// doubles, exact integers).
template <typename T>
std::string tok(const T& v) {
    return nlohmann::json(v).dump();
}

// ratio_r carries at least six significant digits in its printed form, which
// the shortest-round-trip dump ("0.8") would not; 0 < r <= 1 always holds, so
// fixed notation covers everything but vanishing ratios.
std::string ratio_token(double r) {
    char buf[48];
    if (r >= 1e-3)
        std::snprintf(buf, sizeof buf, "%.12f", r);
    else
        std::snprintf(buf, sizeof buf, "%.9e", r);
    return buf;
}

void write_stats(std::ostream& os, const StatsDoc& d) {
    // the initiating side plays U
    const bool lu = d.side_used == Side::Left;
    const auto r = d.run.ratio();
    const std::pair<const char*, std::string> kv[] = {
        {"biclique_count", tok(d.run.maximal_count + d.run.emitted_trivial)},
        {"leaf_count", tok(d.run.leaf_count)},
        {"internal_count", tok(d.run.internal_count)},
        {"ratio_r", r ? ratio_token(*r) : "null"},
        {"q_observed", tok(d.run.q_observed)},
        {"b_max", tok(d.b_max)},
        {"b_mean", tok(d.b_mean)},
        {"d_U", tok(lu ? d.graph.d_left : d.graph.d_right)},
        {"d_V", tok(lu ? d.graph.d_right : d.graph.d_left)},
        {"d2_U", tok(lu ? d.graph.d2_left : d.graph.d2_right)},
        {"d2_V", tok(lu ? d.graph.d2_right : d.graph.d2_left)},
        {"elapsed_ms", tok(d.elapsed_ms)},
        {"side_used", tok(side_name_of(d.side_used))},
        {"engine", tok(engine_name_of(d.engine))},
        {"include_trivial", tok(d.include_trivial)},
    };
    os << "{\n";
    bool first = true;
    for (const auto& [key, val] : kv) {
        if (!first) os << ",\n";
        first = false;
        os << "  \"" << key << "\": " << val;
    }
    os << "\n}\n";
}

}  // namespace

std::string format_biclique(const BipartiteGraph& g, std::span<const VertexId> left,
                            std::span<const VertexId> right) {
    std::string line;
    append_labels(line, g, Side::Left, left);
    line += '\t';
    append_labels(line, g, Side::Right, right);
    return line;
}

int run(const RunConfig& config, std::ostream& err) {
    if (config.sort_output && config.output_mode == OutputMode::Count) {
        err << "error: --sort-output requires --output-mode list\n";
        return kExitUsage;
    }

    BipartiteGraph g;
    try {
        g = load_edge_list_file(config.input_path);
    } catch (const ParseError& e) {
        err << "error: " << config.input_path << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!config.output_path.empty()) {
        out_file.open(config.output_path);
        if (!out_file) {
            err << "error: cannot open output file " << config.output_path << '\n';
            return kExitUsage;
        }
        out = &out_file;
    }

    const Side side = resolve_side(g, config.side);
    const auto order = bidegeneracy_order(g, side);

    // One sink path for all engines.  List mode streams lines (or collects
    // for sorting); count mode only counts, so memory stays flat in B.
    std::uint64_t emitted = 0;
    std::vector<std::string> lines;
    const bool sorting = config.sort_output;
    BicliqueSink sink = [&](std::span<const VertexId> l, std::span<const VertexId> r) {
        ++emitted;
        if (config.output_mode == OutputMode::Count) return;
        if (sorting)
            lines.push_back(format_biclique(g, l, r));
        else
            *out << format_biclique(g, l, r) << '\n';
    };

    StatsDoc doc;
    doc.side_used = side;
    doc.engine = config.engine;
    doc.include_trivial = config.include_trivial;
    doc.b_max = order.max_residual;
    doc.b_mean = order.mean_residual;
    doc.graph = compute_stats(g);

    const auto t0 = std::chrono::steady_clock::now();
    try {
        switch (config.engine) {
            case EngineChoice::Bbk: {
                EnumerateOptions opt;
                opt.include_trivial = config.include_trivial;
                doc.run = enumerate(g, side, order, sink, opt);
                break;
            }
            case EngineChoice::Extended:
                doc.run = clique_extended_enumerate(g, sink, config.include_trivial);
                break;
            case EngineChoice::Brute: {
                auto all = brute_force_maximal_bicliques(g, side, config.include_trivial);
                for (const auto& b : all) {
                    sink(b.left, b.right);
                    if (b.left.empty() || b.right.empty())
                        ++doc.run.emitted_trivial;
                    else {
                        ++doc.run.maximal_count;
                        doc.run.q_observed = std::max<std::uint64_t>(
                            doc.run.q_observed, b.left.size() + b.right.size());
                    }
                }
                break;
            }
        }
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapacity;
    }
    const auto t1 = std::chrono::steady_clock::now();
    doc.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (config.output_mode == OutputMode::Count) {
        *out << emitted << '\n';
    } else if (sorting) {
        std::sort(lines.begin(), lines.end());
        for (const auto& line : lines) *out << line << '\n';
    }
    out->flush();
    if (!*out) {
        err << "error: writing output failed\n";
        return kExitUsage;
    }

    if (!config.stats_path.empty()) {
        std::ofstream sf(config.stats_path);
        if (!sf) {
            err << "error: cannot open stats file " << config.stats_path << '\n';
            return kExitUsage;
        }
        write_stats(sf, doc);
        if (!sf) {
            err << "error: writing stats failed\n";
            return kExitUsage;
        }
    }
    return kExitOk;
}

}  // namespace bbk::cli
