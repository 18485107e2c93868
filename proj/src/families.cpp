#include "lfstab/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "lfstab/error.hpp"

namespace lfstab {

namespace {

int choose2(int x) { return x * (x - 1) / 2; }

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::BadParams, what);
}

/// K_1 joined with t1 copies of K_h and t2 copies of K_{h+1}; centre is 0.
void add_lgen(GraphBuilder& b, int t1, int t2, int h, int& next) {
    const int centre = 0;
    next = 1;
    auto block = [&](int size) {
        std::vector<int> vs{centre};
        for (int i = 0; i < size; ++i) vs.push_back(next++);
        b.add_clique(vs);
    };
    for (int i = 0; i < t1; ++i) block(h);
    for (int i = 0; i < t2; ++i) block(h + 1);
}

/// K_{h+1} on fresh vertices, one of which is joined to `anchor`.
void add_pendant_clique(GraphBuilder& b, int anchor, int h, int& next) {
    std::vector<int> vs;
    for (int i = 0; i <= h; ++i) vs.push_back(next++);
    b.add_clique(vs);
    b.add_edge(anchor, vs.front());
}

Graph h1_graph(int n) {
    GraphBuilder b(n);
    // S_{n-2,2}: hubs 0 and 1, independent vertices 2..n-3.
    b.add_edge(0, 1);
    for (int v = 2; v < n - 2; ++v) b.add_edge(0, v).add_edge(1, v);
    const int tri[] = {0, n - 2, n - 1};
    b.add_clique(tri);
    return b.build();
}

Graph h2_graph(int n) {
    const Graph base = h1_graph(n - 2);
    // Lowest-index vertex carrying the second largest distinct degree.
    std::vector<int> degs;
    for (int v = 0; v < base.order(); ++v) degs.push_back(base.degree(v));
    std::vector<int> distinct = degs;
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const int target = distinct.size() > 1 ? distinct[1] : distinct[0];
    int hub = 0;
    while (degs[hub] != target) ++hub;
    GraphBuilder b(n);
    for (auto [u, v] : base.edges()) b.add_edge(u, v);
    const int tri[] = {hub, n - 2, n - 1};
    b.add_clique(tri);
    return b.build();
}

Graph matching_join(int n, int hubs) {
    GraphBuilder b(n);
    std::vector<int> core;
    for (int i = 0; i < hubs; ++i) core.push_back(i);
    b.add_clique(core);
    for (int v = hubs; v < n; ++v)
        for (int c = 0; c < hubs; ++c) b.add_edge(c, v);
    for (int v = hubs; v + 1 < n; v += 2) b.add_edge(v, v + 1);
    return b.build();
}

}  // namespace

std::string_view to_string(FamilyKind k) {
    switch (k) {
    case FamilyKind::S: return "S";
    case FamilyKind::SPlus: return "SPLUS";
    case FamilyKind::L: return "L";
    case FamilyKind::LGen: return "LGEN";
    case FamilyKind::FGlue: return "FGLUE";
    case FamilyKind::TGlue: return "TGLUE";
    case FamilyKind::U3: return "U3";
    case FamilyKind::H1: return "H1";
    case FamilyKind::H2: return "H2";
    case FamilyKind::K2Match: return "K2MATCH";
    case FamilyKind::K3Match: return "K3MATCH";
    case FamilyKind::Hnla: return "HNLA";
    }
    return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
    std::string up;
    for (char c : name)
        if (c != '_' && c != '-') up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (FamilyKind k : kAllFamilies)
        if (to_string(k) == up) return k;
    throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

std::map<std::string, int> parse_params(std::string_view text) {
    std::map<std::string, int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view item = text.substr(pos, comma - pos);
        pos = comma + 1;
        if (item.empty()) continue;
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw Error(ErrorCode::BadParams, "expected key=value, got '" + std::string(item) + "'");
        std::string key(item.substr(0, eq));
        const std::string_view val = item.substr(eq + 1);
        int v = 0;
        auto [end, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc{} || end != val.data() + val.size())
            throw Error(ErrorCode::BadParams, "bad integer for '" + key + "'");
        out[key] = v;
    }
    return out;
}

int hnla_edges(int n, int l, int a) { return choose2(l - a) + a * (n - l + a); }

int family_order(const FamilySpec& s) {
    switch (s.kind) {
    case FamilyKind::S:
    case FamilyKind::SPlus:
    case FamilyKind::H1:
    case FamilyKind::H2:
    case FamilyKind::K2Match:
    case FamilyKind::K3Match:
    case FamilyKind::Hnla: return s.n;
    case FamilyKind::L: return s.t * s.h + 1;
    case FamilyKind::LGen: return s.t1 * s.h + s.t2 * (s.h + 1) + 1;
    case FamilyKind::FGlue: return s.t1 * s.h + (s.t2 + 1) * (s.h + 1) + 1;
    case FamilyKind::TGlue: return s.t1 * s.h + (s.t2 + 2) * (s.h + 1) + 1;
    case FamilyKind::U3: return 3 * s.h + 3;
    }
    return 0;
}

void validate(const FamilySpec& s) {
    const std::string name(to_string(s.kind));
    switch (s.kind) {
    case FamilyKind::S:
        require(s.h >= 1, name + ": h >= 1");
        require(s.n >= s.h, name + ": n >= h");
        break;
    case FamilyKind::SPlus:
        require(s.h >= 1, name + ": h >= 1");
        require(s.n >= s.h + 2, name + ": n >= h + 2");
        break;
    case FamilyKind::L:
        require(s.h >= 1, name + ": h >= 1");
        require(s.t >= 0, name + ": t >= 0");
        break;
    case FamilyKind::LGen:
        require(s.h >= 1, name + ": h >= 1");
        require(s.t1 >= 0 && s.t2 >= 0, name + ": t1, t2 >= 0");
        break;
    case FamilyKind::FGlue:
    case FamilyKind::TGlue:
        require(s.h >= 2, name + ": h >= 2");
        require(s.t1 >= 0 && s.t2 >= 0, name + ": t1, t2 >= 0");
        break;
    case FamilyKind::U3: require(s.h >= 1, name + ": h >= 1"); break;
    case FamilyKind::H1: require(s.n >= 7, name + ": n >= 7"); break;
    case FamilyKind::H2: require(s.n >= 8, name + ": n >= 8"); break;  // base H1 of order n-2 >= 6
    case FamilyKind::K2Match:
        require(s.n >= 2 && s.n % 2 == 0, name + ": n even and n >= 2");
        break;
    case FamilyKind::K3Match:
        require(s.n >= 3 && s.n % 2 == 1, name + ": n odd and n >= 3");
        break;
    case FamilyKind::Hnla:
        require(s.l >= 1, name + ": l >= 1");
        require(s.a >= 0 && s.a <= s.l / 2, name + ": 0 <= a <= floor(l/2)");
        require(s.n >= s.l - s.a, name + ": n >= l - a");
        break;
    }
    const int order = family_order(s);
    require(order <= kMaxOrder, name + ": order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
    if (s.n != 0 || order == 0) require(s.n == order, name + ": n must equal " + std::to_string(order));
}

FamilySpec make_family_spec(FamilyKind kind, const std::map<std::string, int>& params) {
    FamilySpec s;
    s.kind = kind;
    std::vector<std::string> allowed;
    switch (kind) {
    case FamilyKind::S:
    case FamilyKind::SPlus: allowed = {"n", "h"}; break;
    case FamilyKind::L: allowed = {"n", "t", "h"}; break;
    case FamilyKind::LGen:
    case FamilyKind::FGlue:
    case FamilyKind::TGlue: allowed = {"n", "t1", "t2", "h"}; break;
    case FamilyKind::U3: allowed = {"n", "h"}; break;
    case FamilyKind::H1:
    case FamilyKind::H2:
    case FamilyKind::K2Match:
    case FamilyKind::K3Match: allowed = {"n"}; break;
    case FamilyKind::Hnla: allowed = {"n", "l", "a"}; break;
    }
    for (const auto& [k, v] : params) {
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw Error(ErrorCode::BadParams, std::string(to_string(kind)) + ": unexpected parameter '" + k + "'");
        if (k == "n") s.n = v;
        else if (k == "h") s.h = v;
        else if (k == "t") s.t = v;
        else if (k == "t1") s.t1 = v;
        else if (k == "t2") s.t2 = v;
        else if (k == "l") s.l = v;
        else if (k == "a") s.a = v;
    }
    for (const std::string& k : allowed)
        if (k != "n" && !params.contains(k))
            throw Error(ErrorCode::BadParams, std::string(to_string(kind)) + ": missing parameter '" + k + "'");
    const bool n_derived = kind == FamilyKind::L || kind == FamilyKind::LGen || kind == FamilyKind::FGlue ||
                           kind == FamilyKind::TGlue || kind == FamilyKind::U3;
    if (!n_derived && !params.contains("n"))
        throw Error(ErrorCode::BadParams, std::string(to_string(kind)) + ": missing parameter 'n'");
    if (n_derived && !params.contains("n")) s.n = family_order(s);
    validate(s);
    return s;
}

FamilySize family_size(const FamilySpec& s) {
    validate(s);
    FamilySize z;
    z.order = family_order(s);
    const int h = s.h;
    switch (s.kind) {
    case FamilyKind::S:
        z.edges = choose2(h) + h * (s.n - h);
        z.min_degree = s.n == h ? h - 1 : h;
        break;
    case FamilyKind::SPlus:
        z.edges = choose2(h) + h * (s.n - h) + 1;
        z.min_degree = s.n >= h + 3 ? h : h + 1;
        break;
    case FamilyKind::L:
        z.edges = s.t * choose2(h + 1);
        z.min_degree = s.t >= 1 ? h : 0;
        break;
    case FamilyKind::LGen:
        z.edges = s.t1 * choose2(h + 1) + s.t2 * choose2(h + 2);
        z.min_degree = s.t1 >= 1 ? h : (s.t2 >= 1 ? h + 1 : 0);
        break;
    case FamilyKind::FGlue:
        z.edges = s.t1 * choose2(h + 1) + s.t2 * choose2(h + 2) + choose2(h + 1) + 1;
        z.min_degree = std::min(h, s.t1 * h + s.t2 * (h + 1) + 1);
        break;
    case FamilyKind::TGlue:
        z.edges = s.t1 * choose2(h + 1) + s.t2 * choose2(h + 2) + 2 * choose2(h + 1) + 2;
        z.min_degree = std::min(h, s.t1 * h + s.t2 * (h + 1) + 2);
        break;
    case FamilyKind::U3:
        z.edges = 3 * choose2(h + 1) + 3;
        z.min_degree = h;
        break;
    case FamilyKind::H1:
        z.edges = 2 * s.n - 4;
        z.min_degree = 2;
        break;
    case FamilyKind::H2:
        z.edges = 2 * s.n - 5;
        z.min_degree = 2;
        break;
    case FamilyKind::K2Match:
        z.edges = 1 + 2 * (s.n - 2) + (s.n - 2) / 2;
        z.min_degree = s.n == 2 ? 1 : 3;
        break;
    case FamilyKind::K3Match:
        z.edges = 3 + 3 * (s.n - 3) + (s.n - 3) / 2;
        z.min_degree = s.n == 3 ? 2 : 4;
        break;
    case FamilyKind::Hnla: {
        z.edges = hnla_edges(s.n, s.l, s.a);
        const int independent = s.n - s.l + s.a;
        const int clique = s.l - 2 * s.a;
        z.min_degree = independent > 0 ? s.a : (clique > 0 ? s.l - s.a - 1 : s.a - 1);
        break;
    }
    }
    return z;
}

Graph generate_family(const FamilySpec& s) {
    validate(s);
    const int n = family_order(s);
    const int h = s.h;
    switch (s.kind) {
    case FamilyKind::S: return join(complete_graph(h), empty_graph(s.n - h));
    case FamilyKind::SPlus: return join(complete_graph(h), disjoint_union({complete_graph(2), empty_graph(s.n - h - 2)}));
    case FamilyKind::L:
    case FamilyKind::LGen:
    case FamilyKind::FGlue:
    case FamilyKind::TGlue: {
        GraphBuilder b(n);
        int next = 0;
        if (s.kind == FamilyKind::L)
            add_lgen(b, s.t, 0, h, next);
        else
            add_lgen(b, s.t1, s.t2, h, next);
        if (s.kind == FamilyKind::FGlue || s.kind == FamilyKind::TGlue) add_pendant_clique(b, 0, h, next);
        if (s.kind == FamilyKind::TGlue) add_pendant_clique(b, 0, h, next);
        return b.build();
    }
    case FamilyKind::U3: {
        GraphBuilder b(n);
        const int tri[] = {0, 1, 2};
        b.add_clique(tri);
        int next = 3;
        for (int i = 0; i < 3; ++i) {
            std::vector<int> vs{i};
            for (int j = 0; j < h; ++j) vs.push_back(next++);
            b.add_clique(vs);
        }
        return b.build();
    }
    case FamilyKind::H1: return h1_graph(n);
    case FamilyKind::H2: return h2_graph(n);
    case FamilyKind::K2Match: return matching_join(n, 2);
    case FamilyKind::K3Match: return matching_join(n, 3);
    case FamilyKind::Hnla:
        return join(complete_graph(s.a), disjoint_union({complete_graph(s.l - 2 * s.a), empty_graph(s.n - s.l + s.a)}));
    }
    return Graph();
}

std::map<std::string, int> spec_params(const FamilySpec& s) {
    switch (s.kind) {
    case FamilyKind::S:
    case FamilyKind::SPlus: return {{"n", s.n}, {"h", s.h}};
    case FamilyKind::L: return {{"n", family_order(s)}, {"t", s.t}, {"h", s.h}};
    case FamilyKind::LGen:
    case FamilyKind::FGlue:
    case FamilyKind::TGlue: return {{"n", family_order(s)}, {"t1", s.t1}, {"t2", s.t2}, {"h", s.h}};
    case FamilyKind::U3: return {{"n", family_order(s)}, {"h", s.h}};
    case FamilyKind::H1:
    case FamilyKind::H2:
    case FamilyKind::K2Match:
    case FamilyKind::K3Match: return {{"n", s.n}};
    case FamilyKind::Hnla: return {{"n", s.n}, {"l", s.l}, {"a", s.a}};
    }
    return {};
}

std::string describe(const FamilySpec& s) {
    std::string out(to_string(s.kind));
    out += '(';
    bool first = true;
    // Fixed key order keeps the text stable: n first, then the rest.
    const auto params = spec_params(s);
    for (const char* key : {"n", "t", "t1", "t2", "h", "l", "a"}) {
        auto it = params.find(key);
        if (it == params.end()) continue;
        if (!first) out += ',';
        first = false;
        out += it->first + "=" + std::to_string(it->second);
    }
    out += ')';
    return out;
}

}  // namespace lfstab
