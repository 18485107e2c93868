#include "lfstab/embed.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "lfstab/error.hpp"

namespace lfstab {

namespace {

/// Vertices that can still be reached from `from` through `free`.
VertexSet reach(const Graph& g, int from, VertexSet free) {
    VertexSet seen = bit(from), frontier = bit(from);
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= free & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

class ForestSearch {
public:
    ForestSearch(const Graph& g, const std::vector<int>& orders) : g_(g), orders_(orders), n_(g.order()) {
        std::vector<int> vs(n_);
        std::iota(vs.begin(), vs.end(), 0);
        std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        for (int r = 0; r < n_; ++r) {
            by_rank_[r] = vs[r];
            rank_[vs[r]] = r;
        }
        paths_.resize(orders.size());
        suffix_.assign(orders.size() + 1, 0);
        for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) suffix_[i] = suffix_[i + 1] + orders[i];
    }

    std::optional<EmbeddingCertificate> run() {
        if (suffix_[0] > n_) return std::nullopt;
        if (!place(0)) return std::nullopt;
        return EmbeddingCertificate{paths_};
    }

private:
    bool feasible(std::size_t comp) const {
        const VertexSet free = g_.vertices() & ~used_;
        if (popcount(free) < suffix_[comp]) return false;
        // Each remaining path lives inside one component of the free graph.
        const int smallest = orders_.back();
        int usable = 0, largest = 0;
        VertexSet rest = free;
        while (rest) {
            const VertexSet c = reach(g_, lowest(rest), free);
            rest &= ~c;
            const int size = popcount(c);
            largest = std::max(largest, size);
            if (size >= smallest) usable += size;
        }
        return largest >= orders_[comp] && usable >= suffix_[comp];
    }

    bool place(std::size_t comp) {
        if (comp == orders_.size()) return true;
        if (!feasible(comp)) return false;
        int first_rank = 0;
        if (comp > 0 && orders_[comp] == orders_[comp - 1]) first_rank = rank_[paths_[comp - 1].front()] + 1;
        for (int r = first_rank; r < n_; ++r) {
            const int v = by_rank_[r];
            if (used_ & bit(v)) continue;
            paths_[comp].assign(1, v);
            used_ |= bit(v);
            const bool ok = extend(comp, orders_[comp] - 1);
            used_ &= ~bit(v);
            if (ok) return true;
        }
        paths_[comp].clear();
        return false;
    }

    bool extend(std::size_t comp, int need) {
        std::vector<int>& path = paths_[comp];
        if (need == 0) return place(comp + 1);
        const int end = path.back();
        const VertexSet free = g_.vertices() & ~used_;
        if (popcount(reach(g_, end, free)) - 1 < need) return false;
        VertexSet cand = g_.neighbors(end) & free;
        if (need == 1) {
            // Orientation: the first vertex outranks the last one.
            const int fr = rank_[path.front()];
            VertexSet allowed = 0;
            for_each_vertex(cand, [&](int w) {
                if (rank_[w] > fr) allowed |= bit(w);
            });
            cand = allowed;
        }
        while (cand) {
            const int w = lowest(cand);
            cand &= cand - 1;
            path.push_back(w);
            used_ |= bit(w);
            const bool ok = extend(comp, need - 1);
            used_ &= ~bit(w);
            if (ok) return true;
            path.pop_back();
        }
        return false;
    }

    const Graph& g_;
    const std::vector<int>& orders_;
    int n_;
    std::array<int, 64> rank_{};
    std::array<int, 64> by_rank_{};
    std::vector<std::vector<int>> paths_;
    std::vector<int> suffix_;
    VertexSet used_ = 0;
};

/// ends[S] = endpoints of Hamiltonian paths of G[S].
std::vector<std::uint32_t> traceable_ends(const Graph& g) {
    const int n = g.order();
    if (n > kDpMaxOrder) throw Error(ErrorCode::OrderCap, "subset DP limited to " + std::to_string(kDpMaxOrder) + " vertices");
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) ends[bit(v)] = static_cast<std::uint32_t>(bit(v));
    for (std::size_t s = 1; s < ends.size(); ++s) {
        const std::uint32_t e = ends[s];
        if (!e) continue;
        for_each_vertex(e, [&](int v) {
            for_each_vertex(g.neighbors(v) & ~VertexSet{s}, [&](int w) { ends[s | bit(w)] |= static_cast<std::uint32_t>(bit(w)); });
        });
    }
    return ends;
}

bool pack(const std::vector<std::uint32_t>& ends, const std::vector<int>& orders, std::size_t i, VertexSet free,
          int prev_low) {
    if (i == orders.size()) return true;
    const int o = orders[i];
    const bool tie = i > 0 && orders[i - 1] == o;
    for (VertexSet t = free; t; t = (t - 1) & free) {
        if (popcount(t) != o || !ends[t]) continue;
        if (tie && lowest(t) <= prev_low) continue;
        if (pack(ends, orders, i + 1, free & ~t, lowest(t))) return true;
    }
    return false;
}

class PathSearch {
public:
    PathSearch(const Graph& g) : g_(g), n_(g.order()) {}

    PathResult run(std::optional<int> anchor) {
        if (n_ == 0) return {};
        if (anchor) {
            start(*anchor);
        } else {
            for (int v = 0; v < n_ && best_ < n_; ++v) start(v);
        }
        PathResult r;
        r.order = best_;
        r.path = best_path_;
        if (anchor) std::reverse(r.path.begin(), r.path.end());
        return r;
    }

private:
    void start(int v) {
        if (best_ < n_) {
            cur_.assign(1, v);
            dfs(v, bit(v));
        }
    }

    void dfs(int end, VertexSet used) {
        const int len = static_cast<int>(cur_.size());
        if (len > best_) {
            best_ = len;
            best_path_ = cur_;
        }
        if (best_ == n_) return;
        if (len + popcount(reach(g_, end, ~used & g_.vertices())) - 1 <= best_) return;
        if (n_ <= 57) {
            const std::uint64_t key = (used << 6) | static_cast<std::uint64_t>(end);
            if (memo_.size() < kMemoCap && !memo_.insert(key).second) return;
        }
        for_each_vertex(g_.neighbors(end) & ~used, [&](int w) {
            if (best_ == n_) return;
            cur_.push_back(w);
            dfs(w, used | bit(w));
            cur_.pop_back();
        });
    }

    static constexpr std::size_t kMemoCap = std::size_t{1} << 22;
    const Graph& g_;
    int n_;
    int best_ = 0;
    std::vector<int> best_path_, cur_;
    std::unordered_set<std::uint64_t> memo_;
};

class CycleSearch {
public:
    CycleSearch(const Graph& g, int stop_at) : g_(g), n_(g.order()), stop_at_(stop_at) {}

    CycleResult run() {
        for (int s = 0; s < n_; ++s) {
            if (n_ - s <= best_ || done()) break;
            root_ = s;
            allowed_ = g_.vertices() & ~all_vertices(s);
            memo_.clear();
            cur_.assign(1, s);
            dfs(s, bit(s));
        }
        return CycleResult{best_, best_cycle_};
    }

private:
    bool done() const { return stop_at_ > 0 && best_ >= stop_at_; }

    void dfs(int end, VertexSet used) {
        const int len = static_cast<int>(cur_.size());
        if (len >= 3 && g_.adjacent(end, root_) && len > best_) {
            best_ = len;
            best_cycle_ = cur_;
        }
        if (done() || best_ == n_ - root_) return;
        const VertexSet free = allowed_ & ~used;
        if (len + popcount(reach(g_, end, free)) - 1 <= best_) return;
        if (n_ <= 57) {
            const std::uint64_t key = (used << 6) | static_cast<std::uint64_t>(end);
            if (memo_.size() < (std::size_t{1} << 22) && !memo_.insert(key).second) return;
        }
        for_each_vertex(g_.neighbors(end) & free, [&](int w) {
            if (done()) return;
            cur_.push_back(w);
            dfs(w, used | bit(w));
            cur_.pop_back();
        });
    }

    const Graph& g_;
    int n_;
    int stop_at_;
    int root_ = 0;
    VertexSet allowed_ = 0;
    int best_ = 0;
    std::vector<int> best_cycle_, cur_;
    std::unordered_set<std::uint64_t> memo_;
};

class MonoSearch {
public:
    MonoSearch(const Graph& small, const Graph& big) : s_(small), b_(big), m_(small.order()) {
        order_.reserve(m_);
        VertexSet placed = 0;
        while (static_cast<int>(order_.size()) < m_) {
            int pick = -1, pick_links = -1, pick_deg = -1;
            for (int u = 0; u < m_; ++u) {
                if (placed & bit(u)) continue;
                const int links = popcount(s_.neighbors(u) & placed);
                const int deg = s_.degree(u);
                if (links > pick_links || (links == pick_links && deg > pick_deg)) {
                    pick = u;
                    pick_links = links;
                    pick_deg = deg;
                }
            }
            order_.push_back(pick);
            placed |= bit(pick);
        }
        for (int u = 0; u < m_; ++u) {
            VertexSet ok = 0;
            for (int v = 0; v < b_.order(); ++v)
                if (b_.degree(v) >= s_.degree(u)) ok |= bit(v);
            degree_ok_[u] = ok;
        }
        image_.assign(m_, -1);
    }

    std::optional<std::vector<int>> run() {
        if (s_.edge_count() > b_.edge_count()) return std::nullopt;
        if (assign(0)) return image_;
        return std::nullopt;
    }

private:
    bool assign(int i) {
        if (i == m_) return true;
        const int u = order_[i];
        VertexSet cand = degree_ok_[u] & ~used_;
        for_each_vertex(s_.neighbors(u), [&](int x) {
            if (image_[x] >= 0) cand &= b_.neighbors(image_[x]);
        });
        while (cand) {
            const int v = lowest(cand);
            cand &= cand - 1;
            image_[u] = v;
            used_ |= bit(v);
            if (assign(i + 1)) return true;
            used_ &= ~bit(v);
            image_[u] = -1;
        }
        return false;
    }

    const Graph& s_;
    const Graph& b_;
    int m_;
    std::vector<int> order_;
    std::array<VertexSet, 64> degree_ok_{};
    std::vector<int> image_;
    VertexSet used_ = 0;
};

}  // namespace

std::optional<EmbeddingCertificate> contains_linear_forest(const Graph& g, const LinearForest& f) {
    return ForestSearch(g, f.orders).run();
}

bool validate_certificate(const Graph& g, const LinearForest& f, const EmbeddingCertificate& c) {
    if (c.paths.size() != f.orders.size()) return false;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (std::size_t i = 0; i < c.paths.size(); ++i) {
        const auto& p = c.paths[i];
        if (static_cast<int>(p.size()) != f.orders[i]) return false;
        for (std::size_t j = 0; j < p.size(); ++j) {
            const int v = p[j];
            if (v < 0 || v >= g.order() || seen[v]) return false;
            seen[v] = true;
            if (j > 0 && !g.adjacent(p[j - 1], v)) return false;
        }
    }
    return true;
}

bool contains_linear_forest_dp(const Graph& g, const LinearForest& f) {
    int total = 0;
    for (int o : f.orders) total += o;
    if (total > g.order()) return false;
    const auto ends = traceable_ends(g);
    return pack(ends, f.orders, 0, g.vertices(), -1);
}

PathResult longest_path(const Graph& g, std::optional<int> anchor) {
    if (anchor && (*anchor < 0 || *anchor >= g.order()))
        throw Error(ErrorCode::BadParams, "anchor vertex out of range");
    return PathSearch(g).run(anchor);
}

CycleResult longest_cycle(const Graph& g, int stop_at) { return CycleSearch(g, stop_at).run(); }

CycleSets longest_cycle_sets(const Graph& g) {
    const int n = g.order();
    if (n > kDpMaxOrder) throw Error(ErrorCode::OrderCap, "subset DP limited to " + std::to_string(kDpMaxOrder) + " vertices");
    // ends[S]: endpoints of paths spanning S that start at min(S).
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) ends[bit(v)] = static_cast<std::uint32_t>(bit(v));
    CycleSets out;
    for (std::size_t s = 1; s < ends.size(); ++s) {
        const std::uint32_t e = ends[s];
        if (!e) continue;
        const int m = lowest(s);
        const int size = popcount(s);
        if (size >= 3 && (e & g.neighbors(m))) {
            if (size > out.length) {
                out.length = size;
                out.sets.clear();
            }
            if (size == out.length) out.sets.push_back(s);
        }
        const VertexSet above = ~all_vertices(m + 1) & ~VertexSet{s};
        for_each_vertex(e, [&](int v) {
            for_each_vertex(g.neighbors(v) & above, [&](int w) { ends[s | bit(w)] |= static_cast<std::uint32_t>(bit(w)); });
        });
    }
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

std::optional<std::vector<int>> find_monomorphism(const Graph& small, const Graph& big) {
    if (small.order() > big.order())
        throw Error(ErrorCode::OrderMismatch, "pattern has " + std::to_string(small.order()) + " vertices, host has " +
                                                  std::to_string(big.order()));
    return MonoSearch(small, big).run();
}

bool monomorphism_exists(const Graph& small, const Graph& big) { return find_monomorphism(small, big).has_value(); }

std::optional<VertexSet> common_neighborhood_find(const Graph& g, VertexSet p, int s, int m) {
    if (p & ~g.vertices()) throw Error(ErrorCode::BadParams, "P is not a subset of V(G)");
    if (s < 0 || s > popcount(p)) throw Error(ErrorCode::BadParams, "s must lie in 0..|P|");
    const std::vector<int> pool = to_vector(p);
    std::optional<VertexSet> found;
    auto rec = [&](auto&& self, std::size_t from, int left, VertexSet chosen, VertexSet common) -> void {
        if (found) return;
        if (left == 0) {
            if (popcount(common & ~p) >= m) found = chosen;
            return;
        }
        if (popcount(common & ~p) < m) return;
        for (std::size_t i = from; i + left <= pool.size() && !found; ++i)
            self(self, i + 1, left - 1, chosen | bit(pool[i]), common & g.neighbors(pool[i]));
    };
    rec(rec, 0, s, 0, g.vertices());
    return found;
}

}  // namespace lfstab
