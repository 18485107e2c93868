#include "lfstab/recognize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

#include "lfstab/embed.hpp"
#include "lfstab/error.hpp"

namespace lfstab {

namespace {

bool cover_rec(const Graph& g, VertexSet removed, int k, VertexSet& chosen) {
    const VertexSet alive = g.vertices() & ~removed;
    int best = -1, best_deg = 0, edges2 = 0;
    for_each_vertex(alive, [&](int v) {
        const int d = popcount(g.neighbors(v) & alive);
        edges2 += d;
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    });
    if (best_deg == 0) return true;
    if (k == 0 || edges2 / 2 > k * best_deg) return false;
    const VertexSet nb = g.neighbors(best) & alive;
    if (best_deg == 1) {
        // Taking the neighbour of a leaf is never worse.
        const int u = lowest(nb);
        chosen |= bit(u);
        if (cover_rec(g, removed | bit(u), k - 1, chosen)) return true;
        chosen &= ~bit(u);
        return false;
    }
    chosen |= bit(best);
    if (cover_rec(g, removed | bit(best), k - 1, chosen)) return true;
    chosen &= ~bit(best);
    if (best_deg <= k) {
        chosen |= nb;
        if (cover_rec(g, removed | nb, k - best_deg, chosen)) return true;
        chosen &= ~nb;
    }
    return false;
}

int edges_outside(const Graph& g, VertexSet a) {
    const VertexSet rest = g.vertices() & ~a;
    int twice = 0;
    for_each_vertex(rest, [&](int v) { twice += popcount(g.neighbors(v) & rest); });
    return twice / 2;
}

int max_degree_outside(const Graph& g, VertexSet a) {
    const VertexSet rest = g.vertices() & ~a;
    int d = 0;
    for_each_vertex(rest, [&](int v) { d = std::max(d, popcount(g.neighbors(v) & rest)); });
    return d;
}

/// Vertices of `hub_set` go to 0..|hub_set|-1 in order; the ordered list
/// `rest` fills the following template positions.
std::vector<int> layout(int n, const std::vector<int>& front, const std::vector<int>& rest) {
    std::vector<int> mapping(n, -1);
    int pos = 0;
    for (int v : front) mapping[v] = pos++;
    for (int v : rest) mapping[v] = pos++;
    return mapping;
}

/// Pads the cover `a` to exactly `size` vertices, avoiding `avoid`.
VertexSet pad(const Graph& g, VertexSet a, int size, VertexSet avoid) {
    for (int v = 0; v < g.order() && popcount(a) < size; ++v)
        if (!(a & bit(v)) && !(avoid & bit(v))) a |= bit(v);
    return a;
}

/// Hub layout for K_c joined with a matching: A first, then matched pairs,
/// then the unmatched leftovers paired arbitrarily.
std::vector<int> matching_layout(const Graph& g, VertexSet a) {
    std::vector<int> front = to_vector(a), rest;
    const VertexSet others = g.vertices() & ~a;
    VertexSet done = 0;
    for_each_vertex(others, [&](int v) {
        if (done & bit(v)) return;
        const VertexSet nb = g.neighbors(v) & others & ~done;
        if (nb) {
            const int u = lowest(nb);
            rest.push_back(v);
            rest.push_back(u);
            done |= bit(v) | bit(u);
        }
    });
    for_each_vertex(others & ~done, [&](int v) { rest.push_back(v); });
    return layout(g.order(), front, rest);
}

std::optional<FamilyMatch> match_cover(const Graph& g, int h) {
    const int n = g.order();
    if (h < 0 || n < h) return std::nullopt;
    auto a = vertex_cover_at_most(g, h);
    if (!a) return std::nullopt;
    FamilyMatch m;
    m.spec = FamilySpec{FamilyKind::S, n, h};
    m.witness = *a;
    const VertexSet hubs = pad(g, *a, h, 0);
    m.mapping = layout(n, to_vector(hubs), to_vector(g.vertices() & ~hubs));
    return m;
}

std::optional<FamilyMatch> match_splus(const Graph& g, int h) {
    const int n = g.order();
    if (h < 1 || n < h + 2) return std::nullopt;
    std::optional<VertexSet> a;
    Edge extra{-1, -1};
    a = vertex_cover_at_most(g, h);
    if (!a) {
        for (auto [u, v] : g.edges()) {
            a = vertex_cover_at_most(g.without_edge(u, v), h);
            if (a) {
                extra = {u, v};
                break;
            }
        }
    }
    if (!a) return std::nullopt;
    if (extra.first < 0) {
        // Any two vertices outside the padded cover can play the K_2.
        const VertexSet rest = g.vertices() & ~pad(g, *a, h, 0);
        extra = {lowest(rest), lowest(rest & (rest - 1))};
    }
    const VertexSet e = bit(extra.first) | bit(extra.second);
    const VertexSet hubs = pad(g, *a, h, e);
    std::vector<int> rest{extra.first, extra.second};
    for_each_vertex(g.vertices() & ~hubs & ~e, [&](int v) { rest.push_back(v); });
    FamilyMatch m;
    m.spec = FamilySpec{FamilyKind::SPlus, n, h};
    m.witness = *a;
    m.mapping = layout(n, to_vector(hubs), rest);
    return m;
}

std::optional<FamilyMatch> match_kmatch(const Graph& g, int c) {
    const int n = g.order();
    if (n < c || (n - c) % 2 != 0) return std::nullopt;
    std::optional<VertexSet> found;
    auto rec = [&](auto&& self, int from, int left, VertexSet a) -> void {
        if (found) return;
        if (left == 0) {
            if (max_degree_outside(g, a) <= 1) found = a;
            return;
        }
        for (int v = from; v + left <= n && !found; ++v) self(self, v + 1, left - 1, a | bit(v));
    };
    rec(rec, 0, c, 0);
    if (!found) return std::nullopt;
    FamilyMatch m;
    m.spec = FamilySpec{c == 2 ? FamilyKind::K2Match : FamilyKind::K3Match, n};
    m.witness = *found;
    m.mapping = matching_layout(g, *found);
    return m;
}

/// Assigns item sizes (descending) to bins; fills `bin_of`.
bool pack_bins(const std::vector<int>& items, std::size_t i, std::vector<int>& room, std::vector<int>& bin_of) {
    if (i == items.size()) return true;
    for (std::size_t b = 0; b < room.size(); ++b) {
        if (room[b] < items[i]) continue;
        bool seen = false;
        for (std::size_t c = 0; c < b && !seen; ++c) seen = room[c] == room[b];
        if (seen) continue;
        room[b] -= items[i];
        bin_of[i] = static_cast<int>(b);
        if (pack_bins(items, i + 1, room, bin_of)) return true;
        room[b] += items[i];
    }
    return false;
}

std::optional<FamilyMatch> match_lgen(const Graph& g, int h) {
    const int n = g.order();
    if (h < 1 || n < 1) return std::nullopt;
    for (int apex = 0; apex < n; ++apex) {
        const Graph rest = g.induced(g.vertices() & ~bit(apex));
        std::vector<VertexSet> comps;
        for (VertexSet c : components(rest)) {
            VertexSet orig = 0;
            // induced() renumbers; map back to G's labels.
            for_each_vertex(c, [&](int v) { orig |= bit(v < apex ? v : v + 1); });
            comps.push_back(orig);
        }
        std::sort(comps.begin(), comps.end(), [](VertexSet a, VertexSet b) {
            return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
        });
        if (!comps.empty() && popcount(comps.front()) > h + 1) continue;
        std::vector<int> items;
        for (VertexSet c : comps) items.push_back(popcount(c));
        for (int t2 = 0; t2 * (h + 1) <= n - 1; ++t2) {
            const int left = n - 1 - t2 * (h + 1);
            if (left % h != 0) continue;
            const int t1 = left / h;
            std::vector<int> room(t1, h);
            room.insert(room.end(), t2, h + 1);
            std::vector<int> bin_of(items.size(), -1);
            if (!pack_bins(items, 0, room, bin_of)) continue;
            // Template blocks: t1 blocks of h, then t2 blocks of h+1.
            std::vector<std::vector<int>> bins(room.size());
            for (std::size_t i = 0; i < comps.size(); ++i)
                for_each_vertex(comps[i], [&](int v) { bins[bin_of[i]].push_back(v); });
            std::vector<int> order;
            for (const auto& b : bins) order.insert(order.end(), b.begin(), b.end());
            FamilyMatch m;
            m.spec = FamilySpec{FamilyKind::LGen, n, h, 0, t1, t2};
            m.witness = bit(apex);
            m.mapping = layout(n, {apex}, order);
            return m;
        }
    }
    return std::nullopt;
}

bool degree_dominated(const Graph& g, const Graph& t) {
    std::vector<int> a, b;
    for (int v = 0; v < g.order(); ++v) a.push_back(g.degree(v));
    for (int v = 0; v < t.order(); ++v) b.push_back(t.degree(v));
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::optional<std::vector<int>> iso_mapping(const Graph& g, const Graph& t) {
    if (g.order() != t.order() || g.edge_count() != t.edge_count()) return std::nullopt;
    const CanonicalLabelling lg = canonical_labelling(g), lt = canonical_labelling(t);
    if (g.permuted(lg.position) != t.permuted(lt.position)) return std::nullopt;
    std::vector<int> mapping(g.order());
    for (int v = 0; v < g.order(); ++v) mapping[v] = lt.order[lg.position[v]];
    return mapping;
}

std::optional<FamilyMatch> match_template(const Graph& g, const FamilySpec& s) {
    const Graph& t = family_template(s);
    if (t.order() != g.order()) return std::nullopt;
    std::optional<std::vector<int>> mapping;
    if (is_isomorphism_kind(s.kind)) {
        mapping = iso_mapping(g, t);
    } else {
        if (g.edge_count() > t.edge_count() || !degree_dominated(g, t)) return std::nullopt;
        mapping = find_monomorphism(g, t);
    }
    if (!mapping) return std::nullopt;
    FamilyMatch m;
    m.spec = s;
    m.route = is_isomorphism_kind(s.kind) ? MatchRoute::Isomorphism : MatchRoute::Monomorphism;
    m.mapping = std::move(*mapping);
    // The witness is the preimage of the template's hubs.
    int hubs = 0;
    switch (s.kind) {
    case FamilyKind::S:
    case FamilyKind::SPlus: hubs = s.h; break;
    case FamilyKind::K2Match: hubs = 2; break;
    case FamilyKind::K3Match: hubs = 3; break;
    case FamilyKind::LGen: hubs = 1; break;
    default: break;
    }
    for (int v = 0; v < g.order(); ++v)
        if (m.mapping[v] < hubs) m.witness |= bit(v);
    return m;
}

using TemplateKey = std::tuple<int, int, int, int, int, int, int, int>;

TemplateKey key_of(const FamilySpec& s) {
    return {static_cast<int>(s.kind), family_order(s), s.h, s.t, s.t1, s.t2, s.l, s.a};
}

}  // namespace

std::optional<VertexSet> vertex_cover_at_most(const Graph& g, int h) {
    if (h < 0) return std::nullopt;
    VertexSet chosen = 0;
    if (cover_rec(g, 0, h, chosen)) return chosen;
    return std::nullopt;
}

std::string_view to_string(MatchRoute r) {
    switch (r) {
    case MatchRoute::Structural: return "structural";
    case MatchRoute::Isomorphism: return "isomorphism";
    case MatchRoute::Monomorphism: return "monomorphism";
    }
    return "?";
}

bool is_isomorphism_kind(FamilyKind kind) {
    return kind == FamilyKind::L || kind == FamilyKind::U3 || kind == FamilyKind::Hnla;
}

std::vector<FamilySpec> family_candidates(FamilyKind kind, int n, int h) {
    std::vector<FamilySpec> out;
    auto add = [&](FamilySpec s) {
        s.kind = kind;
        try {
            validate(s);
        } catch (const Error&) {
            return;
        }
        if (family_order(s) == n) out.push_back(s);
    };
    switch (kind) {
    case FamilyKind::S:
    case FamilyKind::SPlus: add(FamilySpec{kind, n, h}); break;
    case FamilyKind::L:
        if (h >= 1 && (n - 1) % h == 0) add(FamilySpec{kind, n, h, (n - 1) / h});
        break;
    case FamilyKind::LGen:
    case FamilyKind::FGlue:
    case FamilyKind::TGlue:
        if (h >= 1)
            for (int t2 = 0; t2 * (h + 1) <= n; ++t2)
                for (int t1 = 0; t1 * h <= n; ++t1) add(FamilySpec{kind, n, h, 0, t1, t2});
        break;
    case FamilyKind::U3: add(FamilySpec{kind, n, h}); break;
    case FamilyKind::H1:
    case FamilyKind::H2:
    case FamilyKind::K2Match:
    case FamilyKind::K3Match: add(FamilySpec{kind, n}); break;
    case FamilyKind::Hnla:
        for (int l = 1; l <= n + n / 2; ++l)
            for (int a = 0; a <= l / 2; ++a) add(FamilySpec{kind, n, 0, 0, 0, 0, l, a});
        break;
    }
    return out;
}

const Graph& family_template(const FamilySpec& spec) {
    static std::shared_mutex mutex;
    static std::map<TemplateKey, std::unique_ptr<Graph>> cache;
    const TemplateKey key = key_of(spec);
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto g = std::make_unique<Graph>(generate_family(spec));
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(g));
    return *it->second;
}

std::optional<FamilyMatch> recognize_by_template(const Graph& g, FamilyKind kind, int h) {
    for (const FamilySpec& s : family_candidates(kind, g.order(), h))
        if (auto m = match_template(g, s)) return m;
    return std::nullopt;
}

std::vector<FamilySpec> all_matching_specs(const Graph& g, FamilyKind kind, int h) {
    std::vector<FamilySpec> out;
    for (const FamilySpec& s : family_candidates(kind, g.order(), h))
        if (match_template(g, s)) out.push_back(s);
    return out;
}

std::optional<FamilyMatch> recognize_exception(const Graph& g, FamilyKind kind, int h) {
    switch (kind) {
    case FamilyKind::S: return match_cover(g, h);
    case FamilyKind::SPlus: return match_splus(g, h);
    case FamilyKind::K2Match: return match_kmatch(g, 2);
    case FamilyKind::K3Match: return match_kmatch(g, 3);
    case FamilyKind::LGen: return match_lgen(g, h);
    default: return recognize_by_template(g, kind, h);
    }
}

bool validate_match(const Graph& g, const FamilyMatch& m) {
    try {
        validate(m.spec);
    } catch (const Error&) {
        return false;
    }
    const Graph t = generate_family(m.spec);
    const int n = g.order();
    if (t.order() != n || static_cast<int>(m.mapping.size()) != n) return false;
    std::vector<bool> hit(n, false);
    for (int v = 0; v < n; ++v) {
        const int x = m.mapping[v];
        if (x < 0 || x >= n || hit[x]) return false;
        hit[x] = true;
    }
    for (auto [u, v] : g.edges())
        if (!t.adjacent(m.mapping[u], m.mapping[v])) return false;
    if (is_isomorphism_kind(m.spec.kind) && g.edge_count() != t.edge_count()) return false;
    const VertexSet w = m.witness;
    switch (m.spec.kind) {
    case FamilyKind::S: return popcount(w) <= m.spec.h && edges_outside(g, w) == 0;
    case FamilyKind::SPlus: return popcount(w) <= m.spec.h && edges_outside(g, w) <= 1;
    case FamilyKind::K2Match: return popcount(w) == 2 && max_degree_outside(g, w) <= 1;
    case FamilyKind::K3Match: return popcount(w) == 3 && max_degree_outside(g, w) <= 1;
    case FamilyKind::LGen:
        if (popcount(w) != 1) return false;
        for (VertexSet c : components(g.induced(g.vertices() & ~w)))
            if (popcount(c) > m.spec.h + 1) return false;
        return true;
    default: return true;
    }
}

}  // namespace lfstab
