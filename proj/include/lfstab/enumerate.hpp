#ifndef LFSTAB_ENUMERATE_HPP
#define LFSTAB_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lfstab/graph.hpp"

namespace lfstab {

/// Built-in generation stops here; larger universes must be ingested.
inline constexpr int kMaxEnumOrder = 11;

enum class Connectivity { Any, Connected, TwoConnected, HasCutVertex };

std::string_view to_string(Connectivity c);
Connectivity parse_connectivity(std::string_view text);

struct EnumFilter {
    int n = 0;
    int min_degree = 0;
    Connectivity connectivity = Connectivity::Any;
};

bool passes(const EnumFilter& f, const Graph& g);

using GraphSink = std::function<void(const Graph&)>;

/// One representative per isomorphism class meeting the filter, in a fixed
/// order that does not depend on `jobs`. Vertex-by-vertex canonical
/// augmentation: a graph is accepted only from the parent obtained by
/// deleting its designated vertex (largest degree, then largest neighbour
/// degree sum, then latest canonical position). Throws OrderCap for n > 11.
void enumerate_graphs(const EnumFilter& f, const GraphSink& sink, int jobs = 1);

/// Like enumerate_graphs but the sink runs concurrently on `jobs` threads
/// and in no particular order; `worker` identifies the calling thread.
using ParallelSink = std::function<void(const Graph&, int worker)>;
void enumerate_graphs_parallel(const EnumFilter& f, const ParallelSink& sink, int jobs);

std::uint64_t count_graphs(const EnumFilter& f, int jobs = 1);
std::vector<Graph> collect_graphs(const EnumFilter& f);

struct IngestOptions {
    bool dedup = false;
    int min_degree = 0;
    Connectivity connectivity = Connectivity::Any;
};

struct IngestError {
    std::size_t line = 0;
    std::string message;
};

struct IngestResult {
    std::size_t lines = 0;
    std::size_t accepted = 0;
    std::size_t duplicates = 0;
    std::size_t filtered = 0;
    std::vector<IngestError> errors;
};

/// Reads graph6 lines; malformed lines are collected, not fatal.
IngestResult ingest_graph6_stream(std::istream& in, const IngestOptions& opt, const GraphSink& sink);
/// "-" reads standard input. Throws IoError if the file cannot be opened.
IngestResult ingest_graph6_file(const std::string& path, const IngestOptions& opt, const GraphSink& sink);

}  // namespace lfstab

#endif
