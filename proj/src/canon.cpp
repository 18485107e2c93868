#include "canon.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "lfstab/error.hpp"

namespace lfstab::detail {

namespace {

using Perm = std::array<std::int8_t, 64>;

/// Ordered partition of the vertex set. Cells are identified by their start
/// position in `lab`, which never moves once the cell exists.
struct Partition {
    std::array<std::int8_t, 64> lab{};
    std::array<std::int8_t, 64> len{};
    std::array<VertexSet, 64> mask{};
    VertexSet starts = 0;
    bool discrete(int n) const { return popcount(starts) == n; }
};

void refine(int n, const VertexSet* rows, Partition& p, VertexSet queue) {
    (void)n;
    while (queue) {
        const int w = lowest(queue);
        queue &= queue - 1;
        const VertexSet splitter = p.mask[w];
        VertexSet cells = p.starts;
        while (cells) {
            const int s = lowest(cells);
            cells &= cells - 1;
            const int size = p.len[s];
            if (size == 1) continue;
            std::array<std::int8_t, 64> cnt;
            int lo = 64, hi = -1;
            for (int i = 0; i < size; ++i) {
                const int c = popcount(rows[p.lab[s + i]] & splitter);
                cnt[i] = static_cast<std::int8_t>(c);
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
            if (lo == hi) continue;
            // Counting sort of the cell by neighbour count, ascending.
            std::array<int, 65> hist{};
            for (int i = 0; i < size; ++i) ++hist[cnt[i] - lo];
            std::array<int, 65> first{};
            int acc = 0;
            for (int v = 0; v <= hi - lo; ++v) {
                first[v] = acc;
                acc += hist[v];
            }
            std::array<std::int8_t, 64> sorted;
            {
                std::array<int, 65> fill = first;
                for (int i = 0; i < size; ++i) sorted[fill[cnt[i] - lo]++] = p.lab[s + i];
            }
            for (int i = 0; i < size; ++i) p.lab[s + i] = sorted[i];
            const bool was_queued = (queue >> s) & 1U;
            int largest_start = -1, largest_size = 0;
            VertexSet new_starts = 0;
            for (int v = 0; v <= hi - lo; ++v) {
                if (hist[v] == 0) continue;
                const int start = s + first[v];
                VertexSet m = 0;
                for (int i = 0; i < hist[v]; ++i) m |= bit(p.lab[start + i]);
                p.len[start] = static_cast<std::int8_t>(hist[v]);
                p.mask[start] = m;
                new_starts |= bit(start);
                if (hist[v] > largest_size) {
                    largest_size = hist[v];
                    largest_start = start;
                }
            }
            p.starts |= new_starts;
            if (was_queued)
                queue |= new_starts;
            else
                queue |= new_starts & ~bit(largest_start);
        }
    }
}

void individualise(Partition& p, int v, VertexSet& queue) {
    int pos = 0;
    while (p.lab[pos] != v) ++pos;
    int s = pos;
    while (!((p.starts >> s) & 1U)) --s;
    std::swap(p.lab[s], p.lab[pos]);
    const int size = p.len[s];
    p.len[s] = 1;
    p.len[s + 1] = static_cast<std::int8_t>(size - 1);
    p.mask[s + 1] = p.mask[s] & ~bit(v);
    p.mask[s] = bit(v);
    p.starts |= bit(s + 1);
    queue = bit(s);
}

struct Search {
    Search(int order, const VertexSet* adjacency) : n(order), rows(adjacency) {}

    int n;
    const VertexSet* rows;
    bool have_best = false;
    std::array<VertexSet, 64> best_rows{};
    Perm best_lab{};
    Perm best_path{};
    Perm path{};
    std::vector<Perm> automorphisms;
    bool found_automorphism = false;

    // Returns the depth to resume at; equal to `depth` means carry on here.
    int run(const Partition& p, int depth) {
        if (p.discrete(n)) return leaf(p, depth);
        int target = -1;
        for (VertexSet st = p.starts; st; st &= st - 1) {
            const int s = lowest(st);
            if (p.len[s] > 1) {
                target = s;
                break;
            }
        }
        const int size = p.len[target];
        std::array<std::int8_t, 64> members;
        for (int i = 0; i < size; ++i) members[i] = p.lab[target + i];
        std::sort(members.begin(), members.begin() + size);
        VertexSet tried = 0;
        for (int i = 0; i < size; ++i) {
            const int y = members[i];
            if (tried && pruned_by_orbit(y, tried, depth)) continue;
            tried |= bit(y);
            Partition child = p;
            VertexSet queue = 0;
            individualise(child, y, queue);
            refine(n, rows, child, queue);
            path[depth] = static_cast<std::int8_t>(y);
            const int jump = run(child, depth + 1);
            if (jump < depth) return jump;
        }
        return depth;
    }

    // y is skipped when an automorphism fixing the current prefix maps an
    // already explored sibling onto it.
    bool pruned_by_orbit(int y, VertexSet tried, int depth) const {
        if (automorphisms.empty()) return false;
        std::array<std::int8_t, 64> parent;
        for (int v = 0; v < n; ++v) parent[v] = static_cast<std::int8_t>(v);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool any = false;
        for (const Perm& g : automorphisms) {
            bool fixes = true;
            for (int d = 0; d < depth && fixes; ++d) fixes = g[path[d]] == path[d];
            if (!fixes) continue;
            any = true;
            for (int v = 0; v < n; ++v) {
                const int a = find(v), b = find(g[v]);
                if (a != b) parent[std::max(a, b)] = static_cast<std::int8_t>(std::min(a, b));
            }
        }
        if (!any) return false;
        const int ry = find(y);
        bool hit = false;
        for_each_vertex(tried, [&](int x) { hit = hit || find(x) == ry; });
        return hit;
    }

    int leaf(const Partition& p, int depth) {
        std::array<std::int8_t, 64> pos;
        for (int i = 0; i < n; ++i) pos[p.lab[i]] = static_cast<std::int8_t>(i);
        std::array<VertexSet, 64> cur;
        int cmp = have_best ? 0 : 1;
        for (int i = 0; i < n; ++i) {
            VertexSet r = 0;
            for_each_vertex(rows[p.lab[i]], [&](int u) { r |= bit(pos[u]); });
            cur[i] = r;
            if (cmp == 0) {
                if (r < best_rows[i]) return depth;  // worse leaf
                if (r > best_rows[i]) cmp = 1;
            }
        }
        if (cmp > 0) {
            have_best = true;
            best_rows = cur;
            best_lab = p.lab;
            best_path = path;
            return depth;
        }
        // Equal code: lab composed with best_lab^-1 is an automorphism.
        Perm g{};
        for (int i = 0; i < n; ++i) g[best_lab[i]] = p.lab[i];
        found_automorphism = true;
        if (automorphisms.size() < 64) automorphisms.push_back(g);
        int common = 0;
        while (common < depth && path[common] == best_path[common]) ++common;
        return common;
    }
};

}  // namespace

void canonical_order(int n, const VertexSet* rows, Labelling& out) {
    out.has_automorphism = false;
    if (n == 0) return;
    Partition p;
    for (int i = 0; i < n; ++i) p.lab[i] = static_cast<std::int8_t>(i);
    p.len[0] = static_cast<std::int8_t>(n);
    p.mask[0] = all_vertices(n);
    p.starts = 1;
    refine(n, rows, p, 1);
    Search s(n, rows);
    s.run(p, 0);
    out.order = s.best_lab;
    out.has_automorphism = s.found_automorphism;
}

void relabel(int n, const VertexSet* rows, const std::int8_t* order, VertexSet* out) {
    std::array<std::int8_t, 64> pos;
    for (int i = 0; i < n; ++i) pos[order[i]] = static_cast<std::int8_t>(i);
    for (int i = 0; i < n; ++i) {
        VertexSet r = 0;
        for_each_vertex(rows[order[i]], [&](int u) { r |= bit(pos[u]); });
        out[i] = r;
    }
}

std::uint64_t pack_upper(int n, const VertexSet* rows) {
    std::uint64_t code = 0;
    int k = 0;
    for (int j = 1; j < n; ++j) {
        code |= (rows[j] & all_vertices(j)) << k;
        k += j;
    }
    return code;
}

void unpack_upper(int n, std::uint64_t code, VertexSet* rows) {
    for (int v = 0; v < n; ++v) rows[v] = 0;
    int k = 0;
    for (int j = 1; j < n; ++j) {
        const VertexSet col = (code >> k) & all_vertices(j);
        rows[j] |= col;
        for_each_vertex(col, [&](int i) { rows[i] |= bit(j); });
        k += j;
    }
}

std::uint64_t canonical_code(int n, const VertexSet* rows, Labelling* labelling) {
    Labelling local;
    Labelling& l = labelling ? *labelling : local;
    canonical_order(n, rows, l);
    std::array<VertexSet, 64> canon;
    relabel(n, rows, l.order.data(), canon.data());
    return pack_upper(n, canon.data());
}

}  // namespace lfstab::detail

namespace lfstab {

CanonicalLabelling canonical_labelling(const Graph& g) {
    detail::Labelling l;
    detail::canonical_order(g.order(), g.rows().data(), l);
    CanonicalLabelling out;
    out.order.resize(static_cast<std::size_t>(g.order()));
    out.position.resize(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) {
        out.order[i] = l.order[i];
        out.position[l.order[i]] = i;
    }
    out.has_automorphism = l.has_automorphism;
    return out;
}

Graph canonical_form(const Graph& g) {
    const CanonicalLabelling l = canonical_labelling(g);
    return g.permuted(l.position);
}

std::string canonical_label(const Graph& g) { return write_graph6(canonical_form(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    auto da = degree_profile(a).degrees, db = degree_profile(b).degrees;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace lfstab
