#include "lfstab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_set>

#include "canon.hpp"
#include "lfstab/error.hpp"

namespace lfstab {

namespace {

struct Node {
    std::uint64_t code = 0;
    bool asym = true;
};

/// Children of one parent. Emit receives (rows, order, canonical code or 0,
/// has_automorphism); the code and flag are only computed when `need_code`.
class Extender {
public:
    Extender(int target, int min_degree) : target_(target), min_degree_(min_degree) {}

    template <typename Emit>
    void children(int m, const Node& parent, bool need_code, Emit&& emit) {
        std::array<VertexSet, 64> rows{};
        detail::unpack_upper(m, parent.code, rows.data());
        std::array<int, 64> deg{};
        int maxdeg = 0;
        for (int u = 0; u < m; ++u) {
            deg[u] = popcount(rows[u]);
            maxdeg = std::max(maxdeg, deg[u]);
        }
        // Every vertex of level m+1 needs degree >= lb to reach min_degree.
        const int lb = min_degree_ - (target_ - (m + 1));
        VertexSet forced = 0;
        for (int u = 0; u < m; ++u) {
            if (deg[u] < lb - 1) return;
            if (deg[u] < lb) forced |= bit(u);
        }
        const int dmin = std::max(lb, maxdeg);
        seen_.clear();
        const VertexSet full = all_vertices(m);
        std::array<VertexSet, 64> child{};
        std::array<int, 64> cdeg{};
        for (VertexSet s = 0; s <= full; ++s) {
            if ((s & forced) != forced) continue;
            const int d = popcount(s);
            if (d < dmin) continue;
            bool ok = true;
            for_each_vertex(s, [&](int u) { ok = ok && deg[u] + 1 <= d; });
            if (!ok) continue;
            for (int u = 0; u < m; ++u) {
                child[u] = rows[u] | ((s >> u) & 1U ? bit(m) : 0);
                cdeg[u] = deg[u] + static_cast<int>((s >> u) & 1U);
            }
            child[m] = s;
            cdeg[m] = d;
            int vsum = 0;
            for_each_vertex(s, [&](int u) { vsum += cdeg[u]; });
            VertexSet ties = 0;
            for (int u = 0; u < m && ok; ++u) {
                if (cdeg[u] != d) continue;
                int sum = 0;
                for_each_vertex(child[u], [&](int x) { sum += cdeg[x]; });
                if (sum > vsum) ok = false;
                else if (sum == vsum) ties |= bit(u);
            }
            if (!ok) continue;
            const int n = m + 1;
            if (!ties && parent.asym) {
                if (!need_code) {
                    emit(child.data(), n, std::uint64_t{0}, false);
                } else {
                    detail::Labelling lab;
                    const std::uint64_t code = detail::canonical_code(n, child.data(), &lab);
                    emit(child.data(), n, code, lab.has_automorphism);
                }
                continue;
            }
            detail::Labelling lab;
            detail::canonical_order(n, child.data(), lab);
            std::array<int, 64> pos{};
            for (int i = 0; i < n; ++i) pos[lab.order[i]] = i;
            int w = m;
            for_each_vertex(ties, [&](int u) {
                if (pos[u] > pos[w]) w = u;
            });
            if (w != m) {
                std::array<VertexSet, 64> minus{};
                const VertexSet low = all_vertices(w);
                for (int u = 0, k = 0; u < n; ++u) {
                    if (u == w) continue;
                    const VertexSet r = child[u];
                    minus[k++] = (r & low) | ((r >> 1) & ~low);
                }
                if (detail::canonical_code(m, minus.data()) != parent.code) continue;
            }
            std::array<VertexSet, 64> canon{};
            detail::relabel(n, child.data(), lab.order.data(), canon.data());
            const std::uint64_t code = detail::pack_upper(n, canon.data());
            if (!seen_.insert(code).second) continue;
            emit(child.data(), n, code, lab.has_automorphism);
        }
    }

private:
    int target_;
    int min_degree_;
    std::unordered_set<std::uint64_t> seen_;
};

void check_filter(const EnumFilter& f) {
    if (f.n > kMaxEnumOrder)
        throw Error(ErrorCode::OrderCap, "built-in generation is capped at n = " + std::to_string(kMaxEnumOrder) +
                                             "; ingest larger universes from a graph6 stream");
    if (f.n < 0) throw Error(ErrorCode::BadParams, "order must be non-negative");
}

/// Parents of the final level, i.e. all surviving graphs of order n-1.
std::vector<Node> parents_of_final(const EnumFilter& f) {
    std::vector<Node> level{Node{0, true}};  // K_1
    Extender ext(f.n, f.min_degree);
    for (int m = 1; m + 1 < f.n; ++m) {
        std::vector<Node> next;
        for (const Node& p : level)
            ext.children(m, p, true, [&](const VertexSet*, int, std::uint64_t code, bool aut) {
                next.push_back(Node{code, !aut});
            });
        level = std::move(next);
    }
    return level;
}

Graph to_graph(const VertexSet* rows, int n) { return Graph::from_rows(std::span<const VertexSet>(rows, n)); }

/// Runs the final level over blocks of parents. Ordered mode hands each
/// block's output to the sink in block order from the calling thread.
void final_level(const EnumFilter& f, const std::vector<Node>& parents, int jobs, bool ordered,
                 const std::function<void(const Graph&, int)>& sink) {
    const int m = f.n - 1;
    auto run_block = [&](std::size_t begin, std::size_t end, Extender& ext, auto&& out) {
        for (std::size_t i = begin; i < end; ++i)
            ext.children(m, parents[i], false, [&](const VertexSet* rows, int n, std::uint64_t, bool) {
                Graph g = to_graph(rows, n);
                if (passes(f, g)) out(std::move(g));
            });
    };
    if (jobs <= 1) {
        Extender ext(f.n, f.min_degree);
        run_block(0, parents.size(), ext, [&](Graph&& g) { sink(g, 0); });
        return;
    }
    constexpr std::size_t kBlock = 64;
    const std::size_t blocks = (parents.size() + kBlock - 1) / kBlock;
    const std::size_t window = static_cast<std::size_t>(jobs) * 4;
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;
    std::vector<std::optional<std::vector<Graph>>> slots(ordered ? blocks : 0);
    std::size_t emitted = 0;
    std::exception_ptr failure;

    auto worker = [&](int id) {
        Extender ext(f.n, f.min_degree);
        try {
            for (;;) {
                const std::size_t b = next.fetch_add(1);
                if (b >= blocks) return;
                const std::size_t begin = b * kBlock, end = std::min(parents.size(), begin + kBlock);
                if (ordered) {
                    {
                        std::unique_lock lock(mu);
                        cv.wait(lock, [&] { return b < emitted + window || failure; });
                        if (failure) return;
                    }
                    std::vector<Graph> out;
                    run_block(begin, end, ext, [&](Graph&& g) { out.push_back(std::move(g)); });
                    std::lock_guard lock(mu);
                    slots[b] = std::move(out);
                    cv.notify_all();
                } else {
                    run_block(begin, end, ext, [&](Graph&& g) { sink(g, id); });
                }
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker, i);
    if (ordered) {
        try {
            for (std::size_t b = 0; b < blocks; ++b) {
                std::vector<Graph> out;
                {
                    std::unique_lock lock(mu);
                    cv.wait(lock, [&] { return slots[b].has_value() || failure; });
                    if (failure) break;
                    out = std::move(*slots[b]);
                    slots[b].reset();
                }
                for (const Graph& g : out) sink(g, 0);
                std::lock_guard lock(mu);
                ++emitted;
                cv.notify_all();
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
            cv.notify_all();
        }
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

void run(const EnumFilter& f, int jobs, bool ordered, const std::function<void(const Graph&, int)>& sink) {
    check_filter(f);
    if (f.n <= 1) {
        const Graph g(f.n);
        if (passes(f, g)) sink(g, 0);
        return;
    }
    const std::vector<Node> parents = parents_of_final(f);
    final_level(f, parents, std::max(1, jobs), ordered, sink);
}

}  // namespace

std::string_view to_string(Connectivity c) {
    switch (c) {
    case Connectivity::Any: return "any";
    case Connectivity::Connected: return "connected";
    case Connectivity::TwoConnected: return "two_connected";
    case Connectivity::HasCutVertex: return "has_cut_vertex";
    }
    return "any";
}

Connectivity parse_connectivity(std::string_view text) {
    for (Connectivity c : {Connectivity::Any, Connectivity::Connected, Connectivity::TwoConnected, Connectivity::HasCutVertex})
        if (to_string(c) == text) return c;
    if (text == "2conn" || text == "biconnected") return Connectivity::TwoConnected;
    if (text == "cut") return Connectivity::HasCutVertex;
    throw Error(ErrorCode::BadParams, "unknown connectivity '" + std::string(text) + "'");
}

bool passes(const EnumFilter& f, const Graph& g) {
    if (g.order() > 0 && min_degree(g) < f.min_degree) return false;
    switch (f.connectivity) {
    case Connectivity::Any: return true;
    case Connectivity::Connected: return is_connected(g);
    case Connectivity::TwoConnected: return is_two_connected(g);
    case Connectivity::HasCutVertex: return is_connected(g) && has_cut_vertex(g);
    }
    return true;
}

void enumerate_graphs(const EnumFilter& f, const GraphSink& sink, int jobs) {
    run(f, jobs, true, [&](const Graph& g, int) { sink(g); });
}

void enumerate_graphs_parallel(const EnumFilter& f, const ParallelSink& sink, int jobs) { run(f, jobs, false, sink); }

std::uint64_t count_graphs(const EnumFilter& f, int jobs) {
    std::atomic<std::uint64_t> count{0};
    enumerate_graphs_parallel(f, [&](const Graph&, int) { count.fetch_add(1, std::memory_order_relaxed); }, jobs);
    return count.load();
}

std::vector<Graph> collect_graphs(const EnumFilter& f) {
    std::vector<Graph> out;
    enumerate_graphs(f, [&](const Graph& g) { out.push_back(g); });
    return out;
}

IngestResult ingest_graph6_stream(std::istream& in, const IngestOptions& opt, const GraphSink& sink) {
    IngestResult r;
    std::unordered_set<std::string> seen;
    std::string line;
    const EnumFilter filter{0, opt.min_degree, opt.connectivity};
    while (std::getline(in, line)) {
        ++r.lines;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const Error& e) {
            r.errors.push_back(IngestError{r.lines, e.what()});
            continue;
        }
        if (!passes(filter, g)) {
            ++r.filtered;
            continue;
        }
        if (opt.dedup && !seen.insert(canonical_label(g)).second) {
            ++r.duplicates;
            continue;
        }
        ++r.accepted;
        sink(g);
    }
    if (in.bad()) throw Error(ErrorCode::IoError, "read error after line " + std::to_string(r.lines));
    return r;
}

IngestResult ingest_graph6_file(const std::string& path, const IngestOptions& opt, const GraphSink& sink) {
    if (path == "-") return ingest_graph6_stream(std::cin, opt, sink);
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    return ingest_graph6_stream(in, opt, sink);
}

}  // namespace lfstab
