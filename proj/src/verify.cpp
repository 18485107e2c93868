#include "lfstab/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <iostream>
#include <memory>
#include <set>

#include "lfstab/error.hpp"
#include "lfstab/families.hpp"

namespace lfstab {

namespace {

std::string normalise(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (c == '-' || c == ' ') c = '_';
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

struct Facts {
    int n = 0;
    int delta = 0;
    int edges = 0;
    bool connected = false;
    bool two_connected = false;
    bool cut = false;
};

Facts facts_of(const Graph& g) {
    Facts f;
    f.n = g.order();
    const DegreeProfile d = degree_profile(g);
    f.delta = f.n ? d.min_degree : 0;
    f.edges = d.edges;
    f.connected = is_connected(g);
    f.two_connected = f.connected && is_two_connected(g);
    f.cut = f.connected && !f.two_connected && f.n >= 3;
    return f;
}

bool meets(const Facts& f, Connectivity c) {
    switch (c) {
    case Connectivity::Any: return true;
    case Connectivity::Connected: return f.connected;
    case Connectivity::TwoConnected: return f.two_connected;
    case Connectivity::HasCutVertex: return f.cut;
    }
    return false;
}

int rank(Connectivity c) { return c == Connectivity::Any ? 0 : 1; }

bool is_path_in(const Graph& g, const std::vector<int>& p) {
    VertexSet seen = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const int v = p[i];
        if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
        seen |= bit(v);
        if (i && !g.adjacent(p[i - 1], v)) return false;
    }
    return true;
}

bool is_cycle_in(const Graph& g, const std::vector<int>& c) {
    return c.size() >= 3 && is_path_in(g, c) && g.adjacent(c.front(), c.back());
}

Verdict classify_with(const LinearForest& f, const ForestParams& p, const Graph& g, const Facts& facts) {
    auto not_met = [](std::optional<TheoremId> t, std::string why) {
        return Verdict{t, HypothesisNotMet{std::move(why)}};
    };
    if (!facts.connected) return not_met(std::nullopt, "graph is not connected");
    const TheoremId t = theorem_for(p, facts.two_connected);
    if (t == TheoremId::TwoOdd2Conn && p.h < 2) return not_met(t, "2-connected two-odd case needs h >= 2");
    const int lo = theorem_min_order(t, p);
    if (facts.n < lo) return not_met(t, "order " + std::to_string(facts.n) + " below " + std::to_string(lo));
    if (facts.delta < p.h)
        return not_met(t, "minimum degree " + std::to_string(facts.delta) + " below h = " + std::to_string(p.h));
    if (auto cert = contains_linear_forest(g, f)) return Verdict{t, Contains{std::move(*cert)}};
    for (FamilyKind k : exception_families(t, p))
        if (auto m = recognize_exception(g, k, p.h)) return Verdict{t, Exception{std::move(*m)}};
    Violation v;
    v.below_threshold = t == TheoremId::TwoOdd2Conn && static_cast<std::uint64_t>(facts.n) < two_odd_threshold(p.h);
    if (facts.n <= kDpMaxOrder) v.oracle_confirmed = !contains_linear_forest_dp(g, f);
    return Verdict{t, v};
}

// Forests with exactly two odd paths and the given h, descending orders.
std::vector<LinearForest> two_odd_forests(int h, bool even_parts_allowed) {
    std::vector<LinearForest> out;
    const int total = h + 1;  // sum a + b1 + b2
    std::vector<int> parts;
    std::function<void(int, int, int, int)> rec = [&](int rest, int max_part, int b1, int b2) {
        if (rest == 0) {
            std::vector<int> orders;
            for (int a : parts) orders.push_back(2 * a);
            orders.push_back(2 * b1 + 1);
            orders.push_back(2 * b2 + 1);
            out.push_back(make_forest(orders));
            return;
        }
        for (int a = std::min(rest, max_part); a >= 1; --a) {
            parts.push_back(a);
            rec(rest - a, a, b1, b2);
            parts.pop_back();
        }
    };
    for (int b1 = total - 1; b1 >= 1; --b1)
        for (int b2 = std::min(b1, total - b1); b2 >= 1; --b2) {
            const int rest = total - b1 - b2;
            if (rest > 0 && !even_parts_allowed) continue;
            rec(rest, rest, b1, b2);
        }
    std::sort(out.begin(), out.end(), [](const LinearForest& x, const LinearForest& y) { return x.orders > y.orders; });
    return out;
}

Graph glue_path(const Graph& h, int u, int extra) {
    const int n = h.order();
    GraphBuilder b(n + extra);
    for (auto [x, y] : h.edges()) b.add_edge(x, y);
    int prev = u;
    for (int i = 0; i < extra; ++i) {
        b.add_edge(prev, n + i);
        prev = n + i;
    }
    return b.build();
}

VertexSet nbhd_in(const Graph& g, int v, VertexSet c) { return g.neighbors(v) & c; }

// ---------------------------------------------------------------------------
// accumulation

struct Accum {
    SweepCounts totals;
    std::map<int, SweepCounts> per_n;
    std::uint64_t witness_failures = 0;
    std::set<Finding> violations;
    std::set<Finding> anomalies;
    std::map<std::string, std::set<std::string>> examples;

    SweepCounts& at(int n) { return per_n[n]; }

    void checked(int n) {
        ++totals.checked;
        ++at(n).checked;
    }
    void contains(int n) {
        checked(n);
        ++totals.contains;
        ++at(n).contains;
    }
    void exception(int n, const std::string& family, const Graph& g) {
        checked(n);
        ++totals.exceptions[family];
        ++at(n).exceptions[family];
        auto& ex = examples[family];
        ex.insert(canonical_label(g));
        if (ex.size() > kExampleCap) ex.erase(std::prev(ex.end()));
    }
    void violation(int n, const Graph& g, std::string detail) {
        checked(n);
        ++totals.violations;
        ++at(n).violations;
        violations.insert(Finding{canonical_label(g), std::move(detail)});
    }
    void anomaly(int n, const Graph& g, std::string detail) {
        checked(n);
        ++totals.below_threshold_anomalies;
        ++at(n).below_threshold_anomalies;
        anomalies.insert(Finding{canonical_label(g), std::move(detail)});
        if (anomalies.size() > kExampleCap) anomalies.erase(std::prev(anomalies.end()));
    }
    void skipped(int n) {
        ++totals.skipped;
        ++at(n).skipped;
    }

    void merge(const Accum& o) {
        totals.merge(o.totals);
        for (const auto& [n, c] : o.per_n) per_n[n].merge(c);
        witness_failures += o.witness_failures;
        violations.insert(o.violations.begin(), o.violations.end());
        anomalies.insert(o.anomalies.begin(), o.anomalies.end());
        while (anomalies.size() > kExampleCap) anomalies.erase(std::prev(anomalies.end()));
        for (const auto& [fam, ex] : o.examples) {
            auto& mine = examples[fam];
            mine.insert(ex.begin(), ex.end());
            while (mine.size() > kExampleCap) mine.erase(std::prev(mine.end()));
        }
    }
};

struct Plan {
    SweepReport header;
    int min_degree = 0;
    Connectivity connectivity = Connectivity::Any;
    /// Graph-driven check; graphs reaching it satisfy range, degree and connectivity.
    std::function<void(const Graph&, const Facts&, Accum&)> check;
    /// Constructive check that needs no graph source.
    std::function<void(Accum&)> direct;
    /// Theorem plans see every ingested graph and decide skips themselves.
    bool self_filtering = false;
};

std::string forest_detail(const LinearForest& f) { return "F=" + describe(f); }

// ---------------------------------------------------------------------------
// theorem plans

Plan theorem_plan(TheoremId t, const LinearForest& f, NRange range) {
    const ForestParams p = forest_params(f);
    if (p.theorem_class == TheoremClass::OutOfScope)
        throw Error(ErrorCode::OutOfTheoremScope, describe(f) + " has no applicable theorem");
    const bool ok = (t == TheoremId::Even && p.theorem_class == TheoremClass::Even) ||
                    (t == TheoremId::OneOdd && p.theorem_class == TheoremClass::OneOdd) ||
                    ((t == TheoremId::TwoOdd2Conn || t == TheoremId::TwoOddCut) &&
                     p.theorem_class == TheoremClass::TwoOdd);
    if (!ok)
        throw Error(ErrorCode::BadParams,
                    describe(f) + " is in class " + std::string(to_string(p.theorem_class)) + ", not " +
                        std::string(to_string(t)));
    Plan plan;
    plan.header.kind = "theorem";
    plan.header.id = std::string(to_string(t));
    plan.header.forests = {f};
    plan.header.range = range;
    plan.header.min_degree = p.h;
    plan.min_degree = p.h;
    plan.self_filtering = true;
    switch (t) {
    case TheoremId::Even:
    case TheoremId::OneOdd: plan.connectivity = Connectivity::Connected; break;
    case TheoremId::TwoOdd2Conn: plan.connectivity = Connectivity::TwoConnected; break;
    case TheoremId::TwoOddCut: plan.connectivity = Connectivity::HasCutVertex; break;
    }
    plan.header.connectivity = plan.connectivity;
    auto& notes = plan.header.notes;
    notes.push_back("h = " + std::to_string(p.h) + "; universe: connectivity " +
                    std::string(to_string(plan.connectivity)) + ", minimum degree >= h, order >= " +
                    std::to_string(theorem_min_order(t, p)));
    std::string fams;
    for (FamilyKind k : exception_families(t, p)) fams += (fams.empty() ? "" : ", ") + std::string(to_string(k));
    notes.push_back("exception families checked: " + (fams.empty() ? std::string("none") : fams));
    notes.push_back(
        "S, SPLUS, LGEN, FGLUE, TGLUE, H1, H2, K2MATCH, K3MATCH match spanning subgraphs; L and U3 match up to "
        "isomorphism");
    notes.push_back("every violation is re-checked with the subset dynamic-programming oracle");
    if (t == TheoremId::TwoOdd2Conn) {
        notes.push_back("stated order bound 4(2h+1)^2 C(2h+1,h) = " + std::to_string(two_odd_threshold(p.h)) +
                        "; below it non-matching graphs are counted as below_threshold_anomalies");
        notes.push_back("K2MATCH is K2 join ((n-2)/2)K2 for even n");
    }
    if (t == TheoremId::TwoOddCut && p.h == 1)
        notes.push_back("h = 1: exceptions follow the small-forest list U3(h=1) and LGEN(h=1)");

    plan.check = [f, p, t](const Graph& g, const Facts& facts, Accum& acc) {
        const Verdict v = classify_with(f, p, g, facts);
        const int n = facts.n;
        if (v.hypothesis_not_met() || v.theorem != t) {
            acc.skipped(n);
            return;
        }
        if (const auto* c = std::get_if<Contains>(&v.value)) {
            if (!validate_certificate(g, f, c->certificate)) ++acc.witness_failures;
            acc.contains(n);
        } else if (const auto* e = std::get_if<Exception>(&v.value)) {
            if (!validate_match(g, e->match)) ++acc.witness_failures;
            acc.exception(n, std::string(to_string(e->match.spec.kind)), g);
        } else {
            const auto& viol = std::get<Violation>(v.value);
            if (viol.oracle_confirmed == false) ++acc.witness_failures;
            if (viol.below_threshold)
                acc.anomaly(n, g, forest_detail(f));
            else
                acc.violation(n, g, forest_detail(f));
        }
    };
    return plan;
}

// ---------------------------------------------------------------------------
// lemma plans

Plan lemma_header(LemmaId id, NRange range, int min_degree, Connectivity c) {
    Plan plan;
    plan.header.kind = "lemma";
    plan.header.id = std::string(to_string(id));
    plan.header.range = range;
    plan.header.min_degree = min_degree;
    plan.header.connectivity = c;
    plan.min_degree = min_degree;
    plan.connectivity = c;
    return plan;
}

void exception_lemma(Plan& plan, const LinearForest& f, int h, std::vector<FamilyKind> families, int n_min) {
    plan.header.forests = {f};
    std::string fams;
    for (FamilyKind k : families) fams += (fams.empty() ? "" : ", ") + std::string(to_string(k));
    plan.header.notes.push_back("order >= " + std::to_string(n_min) + "; exceptions " + fams + " with h = " +
                                std::to_string(h));
    plan.check = [f, h, families, n_min](const Graph& g, const Facts& facts, Accum& acc) {
        if (facts.n < n_min) return;
        if (auto cert = contains_linear_forest(g, f)) {
            if (!validate_certificate(g, f, *cert)) ++acc.witness_failures;
            acc.contains(facts.n);
            return;
        }
        for (FamilyKind k : families)
            if (auto m = recognize_exception(g, k, h)) {
                if (!validate_match(g, *m)) ++acc.witness_failures;
                acc.exception(facts.n, std::string(to_string(k)), g);
                return;
            }
        if (facts.n <= kDpMaxOrder && contains_linear_forest_dp(g, f)) ++acc.witness_failures;
        acc.violation(facts.n, g, forest_detail(f));
    };
}

Plan lemma_plan(LemmaId id, NRange range, std::vector<int> hs) {
    if (hs.empty()) hs = {3};
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    for (int h : hs)
        if (h < 1) throw Error(ErrorCode::BadParams, "h must be positive");
    switch (id) {
    case LemmaId::EgPath: {
        Plan plan = lemma_header(id, range, 0, Connectivity::TwoConnected);
        plan.header.notes.push_back(
            "instances (G, u1) with d(u) >= h >= 2 for u != u1, h taken maximal; conclusion: a path on "
            "min(n, 2h) vertices ends at u1");
        plan.check = [](const Graph& g, const Facts& facts, Accum& acc) {
            const int n = facts.n;
            for (int u1 = 0; u1 < n; ++u1) {
                int h = n;
                for (int u = 0; u < n; ++u)
                    if (u != u1) h = std::min(h, g.degree(u));
                if (h < 2) continue;
                const PathResult r = longest_path(g, u1);
                const int need = std::min(n, 2 * h);
                if (r.order >= need) {
                    if (!is_path_in(g, r.path) || r.path.back() != u1) ++acc.witness_failures;
                    acc.contains(n);
                } else {
                    acc.violation(n, g, "u1=" + std::to_string(u1) + " h=" + std::to_string(h));
                }
            }
        };
        return plan;
    }
    case LemmaId::Dirac: {
        Plan plan = lemma_header(id, range, 2, Connectivity::TwoConnected);
        plan.header.notes.push_back("h = min(delta, floor(n/2)) >= 2; conclusion: a cycle of length >= 2h");
        plan.check = [](const Graph& g, const Facts& facts, Accum& acc) {
            const int h = std::min(facts.delta, facts.n / 2);
            if (h < 2) return;
            const CycleResult c = longest_cycle(g, 2 * h);
            if (c.length >= 2 * h) {
                if (!is_cycle_in(g, c.cycle) || static_cast<int>(c.cycle.size()) != c.length) ++acc.witness_failures;
                acc.contains(facts.n);
            } else {
                acc.violation(facts.n, g, "h=" + std::to_string(h) + " circumference=" + std::to_string(c.length));
            }
        };
        return plan;
    }
    case LemmaId::LcStruct: {
        Plan plan = lemma_header(id, range, 2, Connectivity::Connected);
        plan.header.notes.push_back(
            "instances (G, case) with U = V - V(C) nonempty: l = 2h, U independent => G in S_{n,h}; l = 2h+1, "
            "no P_{2h+3} => G in S+_{n,h}; l = 2h+2, no P_{2h+4} => equal N_C over U with h <= d_C <= h+1");
        plan.check = [](const Graph& g, const Facts& facts, Accum& acc) {
            const int n = facts.n;
            const CycleSets cs = longest_cycle_sets(g);
            const int l = cs.length;
            if (l == 0 || l >= n) return;
            const VertexSet all = g.vertices();
            int longest = -1;
            auto path_order = [&] {
                if (longest < 0) longest = longest_path(g).order;
                return longest;
            };
            if (l % 2 == 0 && l / 2 >= 2 && facts.delta >= l / 2) {
                const int h = l / 2;
                bool premise = false;
                for (VertexSet c : cs.sets) {
                    const VertexSet u = all & ~c;
                    bool independent = true;
                    for_each_vertex(u, [&](int v) { independent = independent && !(g.neighbors(v) & u); });
                    premise = premise || independent;
                }
                if (premise) {
                    if (auto m = recognize_exception(g, FamilyKind::S, h)) {
                        if (!validate_match(g, *m)) ++acc.witness_failures;
                        acc.contains(n);
                    } else {
                        acc.violation(n, g, "case l=2h h=" + std::to_string(h));
                    }
                }
            }
            if (l % 2 == 1 && (l - 1) / 2 >= 2 && facts.delta >= (l - 1) / 2) {
                const int h = (l - 1) / 2;
                if (path_order() < 2 * h + 3) {
                    if (auto m = recognize_exception(g, FamilyKind::SPlus, h)) {
                        if (!validate_match(g, *m)) ++acc.witness_failures;
                        acc.contains(n);
                    } else {
                        acc.violation(n, g, "case l=2h+1 h=" + std::to_string(h));
                    }
                }
            }
            if (l % 2 == 0 && (l - 2) / 2 >= 2 && facts.delta >= (l - 2) / 2) {
                const int h = (l - 2) / 2;
                if (path_order() < 2 * h + 4) {
                    bool ok = true;
                    for (VertexSet c : cs.sets) {
                        const VertexSet u = all & ~c;
                        const VertexSet ref = nbhd_in(g, lowest(u), c);
                        for_each_vertex(u, [&](int v) {
                            const VertexSet nc = nbhd_in(g, v, c);
                            ok = ok && nc == ref && popcount(nc) >= h && popcount(nc) <= h + 1;
                        });
                    }
                    if (ok)
                        acc.contains(n);
                    else
                        acc.violation(n, g, "case l=2h+2 h=" + std::to_string(h));
                }
            }
        };
        return plan;
    }
    case LemmaId::NbhdEq: {
        Plan plan = lemma_header(id, range, 2, Connectivity::Connected);
        plan.header.notes.push_back(
            "premise: 2 <= h <= delta with l <= 2h+1; instances (G, C, part) with U nonempty: G[U] P3-free => "
            "equal N_C along edges of U; G[U] P4-free => equal N_C at the ends of every P3 in U");
        plan.check = [](const Graph& g, const Facts& facts, Accum& acc) {
            const int n = facts.n;
            const CycleSets cs = longest_cycle_sets(g);
            const int l = cs.length;
            if (l == 0 || l >= n) return;
            if (facts.delta < std::max(2, l / 2)) return;  // needs some h with (l-1)/2 <= h <= delta
            const VertexSet all = g.vertices();
            for (VertexSet c : cs.sets) {
                const VertexSet u = all & ~c;
                bool p3_free = true;
                for_each_vertex(u, [&](int v) { p3_free = p3_free && popcount(g.neighbors(v) & u) <= 1; });
                if (p3_free) {
                    bool ok = true;
                    for_each_vertex(u, [&](int v) {
                        for_each_vertex(g.neighbors(v) & u,
                                        [&](int w) { ok = ok && nbhd_in(g, v, c) == nbhd_in(g, w, c); });
                    });
                    if (ok)
                        acc.contains(n);
                    else
                        acc.violation(n, g, "part P3-free");
                }
                const Graph gu = g.induced(u);
                if (longest_path(gu).order < 4) {
                    const std::vector<int> uv = to_vector(u);
                    bool ok = true;
                    for (int mid : uv) {
                        const VertexSet nb = g.neighbors(mid) & u;
                        for_each_vertex(nb, [&](int x) {
                            for_each_vertex(nb & ~bit(x),
                                            [&](int y) { ok = ok && nbhd_in(g, x, c) == nbhd_in(g, y, c); });
                        });
                    }
                    if (ok)
                        acc.contains(n);
                    else
                        acc.violation(n, g, "part P4-free");
                }
            }
        };
        return plan;
    }
    case LemmaId::BipartiteGlue: {
        Plan plan = lemma_header(id, range, 0, Connectivity::Connected);
        plan.header.notes.push_back(
            "constructions on K_{h,h+2} (|X| = h): P3 glued at u in X (k >= 1, order 2h+4), P4 glued at u "
            "(order 2h+5), X minus one other vertex plus P6 glued at u (order 2h+6); every forest with two odd "
            "paths and parameter h must embed");
        plan.direct = [range](Accum& acc) {
            for (int h = 2; 2 * h + 4 <= range.hi; ++h) {
                auto base = [h](bool drop) {
                    const int n = 2 * h + 2;
                    GraphBuilder b(n);
                    for (int x = 0; x < h; ++x)
                        for (int y = h; y < n; ++y) b.add_edge(x, y);
                    Graph g = b.build();
                    if (drop) g = g.induced(g.vertices() & ~bit(1));
                    return g;
                };
                struct Shape {
                    const char* name;
                    Graph g;
                    bool needs_even;
                };
                const Shape shapes[] = {{"P3 at X", glue_path(base(false), 0, 2), true},
                                        {"P4 at X", glue_path(base(false), 0, 3), false},
                                        {"P6 at X minus one", glue_path(base(true), 0, 5), false}};
                for (const Shape& s : shapes) {
                    const int n = s.g.order();
                    if (n < range.lo || n > range.hi) continue;
                    for (const LinearForest& f : two_odd_forests(h, true)) {
                        if (s.needs_even && forest_params(f).k == 0) continue;
                        if (auto cert = contains_linear_forest(s.g, f)) {
                            if (!validate_certificate(s.g, f, *cert)) ++acc.witness_failures;
                            acc.contains(n);
                        } else {
                            acc.violation(n, s.g, std::string(s.name) + " h=" + std::to_string(h) + " " +
                                                      forest_detail(f));
                        }
                    }
                }
            }
        };
        return plan;
    }
    case LemmaId::GluedSmall: {
        Plan plan = lemma_header(id, range, 2, Connectivity::TwoConnected);
        plan.header.notes.push_back(
            "range is the order of H; instances (H, u1, h, t): h=2,t=3 => 2P2uP3, P4uP3, P2uP5; h=2,t=4 => "
            "P5uP3; h=3,t=4 => P7uP3, 2P5");
        plan.check = [](const Graph& g, const Facts& facts, Accum& acc) {
            const int n = facts.n;
            struct Case {
                int h, t;
                std::vector<LinearForest> forests;
            };
            static const std::vector<Case> cases = {
                {2, 3, {make_forest({2, 2, 3}), make_forest({4, 3}), make_forest({2, 5})}},
                {2, 4, {make_forest({5, 3})}},
                {3, 4, {make_forest({7, 3}), make_forest({5, 5})}}};
            for (int u1 = 0; u1 < n; ++u1) {
                int others = n;
                for (int u = 0; u < n; ++u)
                    if (u != u1) others = std::min(others, g.degree(u));
                for (const Case& c : cases) {
                    if (others < c.h || n < 2 * c.h + 1) continue;
                    const Graph glued = glue_path(g, u1, c.t - 1);
                    std::string missing;
                    for (const LinearForest& f : c.forests) {
                        auto cert = contains_linear_forest(glued, f);
                        if (!cert)
                            missing += " " + describe(f);
                        else if (!validate_certificate(glued, f, *cert))
                            ++acc.witness_failures;
                    }
                    if (missing.empty())
                        acc.contains(n);
                    else
                        acc.violation(n, g,
                                      "u1=" + std::to_string(u1) + " h=" + std::to_string(c.h) +
                                          " t=" + std::to_string(c.t) + " missing" + missing);
                }
            }
        };
        return plan;
    }
    case LemmaId::GluedP3: {
        Plan plan = lemma_header(id, range, 2, Connectivity::TwoConnected);
        plan.header.forests = {make_forest({5, 3})};
        plan.header.notes.push_back(
            "range is the order of H (>= 6); H not in S_{n,2}; instances (H, u1) with P3 glued at an end to u1");
        plan.check = [](const Graph& g, const Facts& facts, Accum& acc) {
            const int n = facts.n;
            if (n < 6 || vertex_cover_at_most(g, 2)) return;
            static const LinearForest f = make_forest({5, 3});
            for (int u1 = 0; u1 < n; ++u1) {
                const Graph glued = glue_path(g, u1, 2);
                if (auto cert = contains_linear_forest(glued, f)) {
                    if (!validate_certificate(glued, f, *cert)) ++acc.witness_failures;
                    acc.contains(n);
                } else {
                    acc.violation(n, g, "u1=" + std::to_string(u1));
                }
            }
        };
        return plan;
    }
    case LemmaId::Small2P3: {
        Plan plan = lemma_header(id, range, 1, Connectivity::Connected);
        exception_lemma(plan, make_forest({3, 3}), 1, {FamilyKind::U3, FamilyKind::LGen}, 6);
        return plan;
    }
    case LemmaId::SmallP5P3: {
        Plan plan = lemma_header(id, range, 2, Connectivity::Connected);
        exception_lemma(plan, make_forest({5, 3}), 2,
                        {FamilyKind::SPlus, FamilyKind::H1, FamilyKind::H2, FamilyKind::L}, 8);
        return plan;
    }
    case LemmaId::SmallP2_2P3: {
        Plan plan = lemma_header(id, range, 2, Connectivity::Connected);
        exception_lemma(plan, make_forest({3, 3, 2}), 2, {FamilyKind::S, FamilyKind::L}, 8);
        return plan;
    }
    case LemmaId::LcRange:
    case LemmaId::NoP3Out: {
        const bool range_lemma = id == LemmaId::LcRange;
        for (int h : hs)
            if (h < 3) throw Error(ErrorCode::BadParams, "this lemma needs h >= 3");
        // the range statement leans on the Dirac bound, so it only holds for 2-connected G
        Plan plan = lemma_header(id, range, hs.front(),
                                 range_lemma ? Connectivity::TwoConnected : Connectivity::Connected);
        std::vector<std::pair<int, std::vector<LinearForest>>> work;
        for (int h : hs) {
            work.emplace_back(h, two_odd_forests(h, range_lemma));
            for (const LinearForest& f : work.back().second) plan.header.forests.push_back(f);
        }
        plan.header.notes.push_back(
            range_lemma ? "instances (G, F) with G 2-connected, n >= 2h+4, delta >= h and F not in G; "
                          "conclusion: 2h <= circumference <= 2h+1 (fails for connected G, e.g. L_{3,3} with 2P5)"
                        : "instances (G, F) with k = 0, n >= 2h+4, delta >= h, circumference 2h and F not in G; "
                          "conclusion: G[V - V(C)] is P3-free for every longest cycle C");
        plan.header.notes.push_back("instances with F contained are vacuous and not counted");
        plan.check = [work, range_lemma](const Graph& g, const Facts& facts, Accum& acc) {
            const int n = facts.n;
            std::optional<CycleSets> cs;
            for (const auto& [h, forests] : work) {
                if (n < 2 * h + 4 || facts.delta < h) continue;
                for (const LinearForest& f : forests) {
                    if (!range_lemma) {
                        if (!cs) cs = longest_cycle_sets(g);
                        if (cs->length != 2 * h) continue;
                    }
                    if (contains_linear_forest(g, f)) continue;
                    if (facts.n <= kDpMaxOrder && contains_linear_forest_dp(g, f)) ++acc.witness_failures;
                    if (!cs) cs = longest_cycle_sets(g);
                    bool ok = true;
                    if (range_lemma) {
                        ok = cs->length >= 2 * h && cs->length <= 2 * h + 1;
                    } else {
                        for (VertexSet c : cs->sets) {
                            const VertexSet u = g.vertices() & ~c;
                            for_each_vertex(u, [&](int v) { ok = ok && popcount(g.neighbors(v) & u) <= 1; });
                        }
                    }
                    if (ok)
                        acc.contains(n);
                    else
                        acc.violation(n, g,
                                      forest_detail(f) + " h=" + std::to_string(h) +
                                          " circumference=" + std::to_string(cs->length));
                }
            }
        };
        return plan;
    }
    }
    throw Error(ErrorCode::UnknownLemma, "unhandled lemma");
}

Plan eg_plan(NRange range) {
    Plan plan;
    plan.header.kind = "eg_edge_bound";
    plan.header.id = "EG_EDGE_BOUND";
    plan.header.range = range;
    plan.header.connectivity = Connectivity::Any;
    plan.header.notes.push_back(
        "per graph: l_max = largest l with 2e > (l-2)n; conclusion: longest path has >= l_max vertices; edgeless "
        "graphs are skipped");
    plan.check = [](const Graph& g, const Facts& facts, Accum& acc) {
        const int n = facts.n;
        if (facts.edges == 0) {
            acc.skipped(n);
            return;
        }
        const int l_max = (2 * facts.edges - 1) / n + 2;
        const PathResult r = longest_path(g);
        if (r.order >= l_max) {
            if (!is_path_in(g, r.path) || static_cast<int>(r.path.size()) != r.order) ++acc.witness_failures;
            acc.contains(n);
        } else {
            acc.violation(n, g, "l=" + std::to_string(l_max) + " longest=" + std::to_string(r.order));
        }
    };
    return plan;
}

Plan compile(const SweepRequest& r) {
    if (r.range.lo > r.range.hi || r.range.hi < 0) throw Error(ErrorCode::BadParams, "empty order range");
    switch (r.kind) {
    case SweepRequest::Kind::Theorem:
        if (!r.forest) throw Error(ErrorCode::BadParams, "theorem sweep needs a forest");
        return theorem_plan(r.theorem, *r.forest, r.range);
    case SweepRequest::Kind::Lemma: return lemma_plan(r.lemma, r.range, r.hs);
    case SweepRequest::Kind::EgBound: return eg_plan(r.range);
    }
    throw Error(ErrorCode::BadParams, "unknown request kind");
}

SweepReport finish(const Plan& plan, const Accum& acc, const std::string& source, double seconds) {
    SweepReport r = plan.header;
    r.source = source;
    r.totals = acc.totals;
    r.per_n = acc.per_n;
    r.witness_failures = acc.witness_failures;
    r.violations.assign(acc.violations.begin(), acc.violations.end());
    r.anomalies.assign(acc.anomalies.begin(), acc.anomalies.end());
    for (const auto& [fam, ex] : acc.examples) r.exception_examples[fam].assign(ex.begin(), ex.end());
    r.wall_seconds = seconds;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// public

std::string_view to_string(TheoremId t) {
    switch (t) {
    case TheoremId::Even: return "EVEN";
    case TheoremId::OneOdd: return "ONE_ODD";
    case TheoremId::TwoOdd2Conn: return "TWO_ODD_2CONN";
    case TheoremId::TwoOddCut: return "TWO_ODD_CUT";
    }
    return "?";
}

TheoremId parse_theorem(std::string_view text) {
    const std::string s = normalise(text);
    if (s == "even") return TheoremId::Even;
    if (s == "one_odd") return TheoremId::OneOdd;
    if (s == "two_odd_2conn" || s == "two_odd_two_connected") return TheoremId::TwoOdd2Conn;
    if (s == "two_odd_cut" || s == "two_odd_cut_vertex") return TheoremId::TwoOddCut;
    throw Error(ErrorCode::BadParams, "unknown theorem '" + std::string(text) + "'");
}

TheoremId theorem_for(const ForestParams& p, bool two_connected) {
    switch (p.theorem_class) {
    case TheoremClass::Even: return TheoremId::Even;
    case TheoremClass::OneOdd: return TheoremId::OneOdd;
    case TheoremClass::TwoOdd: return two_connected ? TheoremId::TwoOdd2Conn : TheoremId::TwoOddCut;
    case TheoremClass::OutOfScope: break;
    }
    throw Error(ErrorCode::OutOfTheoremScope, "forest has three or more odd paths or fewer than two paths");
}

std::vector<FamilyKind> exception_families(TheoremId t, const ForestParams& p) {
    const std::vector<int>& a = p.a;
    const std::vector<int>& b = p.b;
    std::vector<FamilyKind> out;
    switch (t) {
    case TheoremId::Even:
        out.push_back(FamilyKind::S);
        if (p.k == 2 && a[0] == a[1]) out.push_back(FamilyKind::L);
        break;
    case TheoremId::OneOdd:
        out.push_back(FamilyKind::S);
        if (p.k == 1 && a[0] == 3 && b[0] == 1) out.push_back(FamilyKind::K2Match);
        if (p.k == 1 && (a[0] == b[0] || a[0] == b[0] + 1)) out.push_back(FamilyKind::L);
        break;
    case TheoremId::TwoOdd2Conn:
        if (p.k == 0) {
            out.push_back(FamilyKind::SPlus);
            if (b[0] == 3 && b[1] == 1) out.push_back(FamilyKind::K2Match);
            if (b[0] == 4 && b[1] == 1) out.push_back(FamilyKind::K3Match);
        } else {
            out.push_back(FamilyKind::S);
            if (p.k == 1 && b[0] == 1 && b[1] == 1 && a[0] == 2) out.push_back(FamilyKind::K2Match);
            if (p.k == 1 && b[0] == 1 && b[1] == 1 && a[0] == 3) out.push_back(FamilyKind::K3Match);
        }
        break;
    case TheoremId::TwoOddCut:
        if (p.k == 0) {
            if (b[0] == 2 && b[1] == 1) {
                out.push_back(FamilyKind::H1);
                out.push_back(FamilyKind::H2);
            }
            if (b[1] == b[0] - 1) out.push_back(FamilyKind::L);
            if (b[0] == b[1]) {
                out.push_back(FamilyKind::U3);
                out.push_back(FamilyKind::LGen);
                if (p.h >= 2) {
                    out.push_back(FamilyKind::FGlue);
                    out.push_back(FamilyKind::TGlue);
                }
            }
        } else if (p.k == 1 && a[0] == 1 && b[0] == b[1]) {
            out.push_back(FamilyKind::L);
        }
        break;
    }
    return out;
}

int theorem_min_order(TheoremId t, const ForestParams& p) {
    switch (t) {
    case TheoremId::Even: return 2 * p.h + 2;
    case TheoremId::OneOdd: return 2 * p.h + 3;
    case TheoremId::TwoOdd2Conn:
    case TheoremId::TwoOddCut: return 2 * p.h + 4;
    }
    return 0;
}

std::uint64_t two_odd_threshold(int h) {
    const int m = 2 * h + 1;
    std::uint64_t c = 1;
    for (int i = 1; i <= h; ++i) c = c * static_cast<std::uint64_t>(m - h + i) / static_cast<std::uint64_t>(i);
    return 4ULL * static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m) * c;
}

Verdict classify(const LinearForest& f, const Graph& g) {
    const ForestParams p = forest_params(f);
    if (p.theorem_class == TheoremClass::OutOfScope)
        throw Error(ErrorCode::OutOfTheoremScope, describe(f) + " has no applicable theorem");
    return classify_with(f, p, g, facts_of(g));
}

bool validate_verdict(const LinearForest& f, const Graph& g, const Verdict& v) {
    if (const auto* c = std::get_if<Contains>(&v.value)) return validate_certificate(g, f, c->certificate);
    if (const auto* e = std::get_if<Exception>(&v.value)) return validate_match(g, e->match);
    if (const auto* x = std::get_if<Violation>(&v.value)) return x->oracle_confirmed.value_or(true);
    return true;
}

std::uint64_t SweepCounts::exception_total() const {
    std::uint64_t s = 0;
    for (const auto& [k, v] : exceptions) s += v;
    return s;
}

void SweepCounts::merge(const SweepCounts& o) {
    checked += o.checked;
    contains += o.contains;
    for (const auto& [k, v] : o.exceptions) exceptions[k] += v;
    violations += o.violations;
    below_threshold_anomalies += o.below_threshold_anomalies;
    skipped += o.skipped;
}

bool SweepReport::balanced() const {
    auto ok = [](const SweepCounts& c) {
        return c.checked == c.contains + c.exception_total() + c.violations + c.below_threshold_anomalies;
    };
    if (!ok(totals)) return false;
    SweepCounts sum;
    for (const auto& [n, c] : per_n) {
        if (!ok(c)) return false;
        sum.merge(c);
    }
    return sum.checked == totals.checked && sum.skipped == totals.skipped;
}

std::string_view to_string(LemmaId id) {
    switch (id) {
    case LemmaId::EgPath: return "EG_PATH";
    case LemmaId::Dirac: return "DIRAC";
    case LemmaId::LcStruct: return "LC_STRUCT";
    case LemmaId::NbhdEq: return "NBHD_EQ";
    case LemmaId::BipartiteGlue: return "BIPARTITE_GLUE";
    case LemmaId::GluedSmall: return "GLUED_SMALL";
    case LemmaId::GluedP3: return "GLUED_P3";
    case LemmaId::Small2P3: return "SMALL_2P3";
    case LemmaId::SmallP5P3: return "SMALL_P5P3";
    case LemmaId::SmallP2_2P3: return "SMALL_P2_2P3";
    case LemmaId::LcRange: return "LC_RANGE";
    case LemmaId::NoP3Out: return "NO_P3_OUT";
    }
    return "?";
}

LemmaId parse_lemma(std::string_view text) {
    const std::string s = normalise(text);
    for (LemmaId id : kAllLemmas)
        if (normalise(to_string(id)) == s) return id;
    throw Error(ErrorCode::UnknownLemma, "unknown lemma '" + std::string(text) + "'");
}

std::vector<SweepReport> sweep_batch(const std::vector<SweepRequest>& requests, const SweepOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Plan> plans;
    for (const SweepRequest& r : requests) plans.push_back(compile(r));
    std::vector<Accum> acc(plans.size());
    const int jobs = std::max(1, opt.jobs);

    for (std::size_t i = 0; i < plans.size(); ++i)
        if (plans[i].direct) plans[i].direct(acc[i]);

    auto run = [&](const std::vector<std::size_t>& active, const Graph& g, std::vector<Accum>& out, bool ingest) {
        const Facts facts = facts_of(g);
        for (std::size_t j = 0; j < active.size(); ++j) {
            const Plan& p = plans[active[j]];
            if (facts.n < p.header.range.lo || facts.n > p.header.range.hi) continue;
            const bool fits = facts.delta >= p.min_degree && meets(facts, p.connectivity);
            if (fits || (ingest && p.self_filtering))
                p.check(g, facts, out[j]);
            else if (ingest)
                out[j].skipped(facts.n);
        }
    };

    std::string source = "enumerate";
    if (opt.input) {
        source = *opt.input;
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < plans.size(); ++i)
            if (plans[i].check) active.push_back(i);
        std::vector<Accum> local(active.size());
        const IngestResult res = ingest_graph6_file(*opt.input, IngestOptions{}, [&](const Graph& g) {
            run(active, g, local, true);
        });
        if (!res.errors.empty())
            throw Error(ErrorCode::SourceError, "line " + std::to_string(res.errors.front().line) + ": " +
                                                    res.errors.front().message);
        for (std::size_t j = 0; j < active.size(); ++j) acc[active[j]].merge(local[j]);
    } else {
        int lo = kMaxEnumOrder + 1, hi = -1;
        for (const Plan& p : plans)
            if (p.check) {
                lo = std::min(lo, std::max(1, p.header.range.lo));
                hi = std::max(hi, p.header.range.hi);
            }
        if (hi > kMaxEnumOrder)
            throw Error(ErrorCode::OrderCap, "enumeration is limited to order " + std::to_string(kMaxEnumOrder));
        for (int n = lo; n <= hi; ++n) {
            std::vector<std::size_t> active;
            int min_degree = n;
            int conn = 1;
            for (std::size_t i = 0; i < plans.size(); ++i) {
                const Plan& p = plans[i];
                if (!p.check || n < p.header.range.lo || n > p.header.range.hi) continue;
                active.push_back(i);
                min_degree = std::min(min_degree, p.min_degree);
                conn = std::min(conn, rank(p.connectivity));
            }
            if (active.empty()) continue;
            const auto t0 = std::chrono::steady_clock::now();
            std::vector<std::vector<Accum>> local(static_cast<std::size_t>(jobs), std::vector<Accum>(active.size()));
            const EnumFilter filter{n, min_degree, conn ? Connectivity::Connected : Connectivity::Any};
            enumerate_graphs_parallel(
                filter, [&](const Graph& g, int worker) { run(active, g, local[worker], false); }, jobs);
            for (auto& w : local)
                for (std::size_t j = 0; j < active.size(); ++j) acc[active[j]].merge(w[j]);
            if (opt.progress) {
                const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                std::cerr << "n=" << n << " plans=" << active.size() << " " << s << "s\n";
            }
        }
    }

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::vector<SweepReport> out;
    for (std::size_t i = 0; i < plans.size(); ++i) out.push_back(finish(plans[i], acc[i], source, seconds));
    return out;
}

SweepReport sweep_theorem(TheoremId t, const LinearForest& f, NRange range, const SweepOptions& opt) {
    SweepRequest r;
    r.kind = SweepRequest::Kind::Theorem;
    r.theorem = t;
    r.forest = f;
    r.range = range;
    return sweep_batch({r}, opt).front();
}

SweepReport verify_lemma(LemmaId id, NRange range, const SweepOptions& opt, std::vector<int> hs) {
    SweepRequest r;
    r.kind = SweepRequest::Kind::Lemma;
    r.lemma = id;
    r.range = range;
    r.hs = std::move(hs);
    return sweep_batch({r}, opt).front();
}

SweepReport eg_edge_bound_check(NRange range, const SweepOptions& opt) {
    SweepRequest r;
    r.kind = SweepRequest::Kind::EgBound;
    r.range = range;
    return sweep_batch({r}, opt).front();
}

// ---------------------------------------------------------------------------
// extremal search

TuranResult turan_search(const LinearForest& f, int n, bool connected, int jobs) {
    if (n < 1) throw Error(ErrorCode::BadParams, "order must be positive");
    if (n > kMaxEnumOrder) throw Error(ErrorCode::OrderCap, "order above " + std::to_string(kMaxEnumOrder));
    if (f.orders.empty()) throw Error(ErrorCode::Empty, "empty forest");
    const ForestParams p = forest_params(f);
    TuranResult r;
    r.forest = f;
    r.n = n;
    r.h = p.h;
    jobs = std::max(1, jobs);
    struct Best {
        int all = -1;
        std::set<std::string> all_graphs;
        int conn = -1;
        std::set<std::string> conn_graphs;
    };
    std::vector<Best> best(static_cast<std::size_t>(jobs));
    auto offer = [](int e, const Graph& g, int& top, std::set<std::string>& graphs) {
        if (e > top) {
            top = e;
            graphs.clear();
        }
        graphs.insert(canonical_label(g));
    };
    enumerate_graphs_parallel(
        EnumFilter{n, 0, Connectivity::Any},
        [&](const Graph& g, int worker) {
            Best& b = best[worker];
            const int e = g.edge_count();
            const bool want_all = e >= b.all;
            const bool want_conn = connected && e >= b.conn;
            if (!want_all && !want_conn) return;
            if (contains_linear_forest(g, f)) return;
            if (want_all) offer(e, g, b.all, b.all_graphs);
            if (want_conn && is_connected(g)) offer(e, g, b.conn, b.conn_graphs);
        },
        jobs);
    std::set<std::string> all, conn;
    int top = -1, ctop = -1;
    for (const Best& b : best) {
        if (b.all > top) {
            top = b.all;
            all.clear();
        }
        if (b.all == top) all.insert(b.all_graphs.begin(), b.all_graphs.end());
        if (b.conn > ctop) {
            ctop = b.conn;
            conn.clear();
        }
        if (b.conn == ctop) conn.insert(b.conn_graphs.begin(), b.conn_graphs.end());
    }
    r.max_edges = top;
    r.maximizers.assign(all.begin(), all.end());
    if (connected) {
        if (ctop >= 0) r.max_edges_connected = ctop;
        r.maximizers_connected.assign(conn.begin(), conn.end());
    }
    if (p.theorem_class != TheoremClass::OutOfScope && p.h >= 1) {
        if (n >= p.h) r.e_s = family_size(FamilySpec{FamilyKind::S, n, p.h}).edges;
        if (n >= p.h + 2) r.e_splus = family_size(FamilySpec{FamilyKind::SPlus, n, p.h}).edges;
    }
    return r;
}

// ---------------------------------------------------------------------------
// sharpness

std::string_view to_string(SharpnessCase c) {
    switch (c) {
    case SharpnessCase::Remark1a: return "remark1a";
    case SharpnessCase::Remark1b: return "remark1b";
    case SharpnessCase::Remark2a: return "remark2a";
    case SharpnessCase::Remark2b: return "remark2b";
    }
    return "?";
}

SharpnessCase parse_sharpness(std::string_view text) {
    const std::string s = normalise(text);
    for (SharpnessCase c : {SharpnessCase::Remark1a, SharpnessCase::Remark1b, SharpnessCase::Remark2a,
                            SharpnessCase::Remark2b})
        if (s == to_string(c)) return c;
    throw Error(ErrorCode::BadParams, "unknown sharpness case '" + std::string(text) + "'");
}

SharpnessReport sharpness_demo(SharpnessCase c, std::optional<int> param, std::optional<int> n) {
    SharpnessReport r;
    r.which = c;
    TheoremId theorem = TheoremId::Even;
    switch (c) {
    case SharpnessCase::Remark1a: {
        const int a1 = param.value_or(2);
        if (a1 < 2) throw Error(ErrorCode::BadParams, "a_1 must be at least 2");
        r.forest = make_forest({2 * a1, 2 * a1});
        break;
    }
    case SharpnessCase::Remark1b:
        if (param) throw Error(ErrorCode::BadParams, "this case has no parameter");
        r.forest = make_forest({4, 4, 2});
        break;
    case SharpnessCase::Remark2a: {
        const int b1 = param.value_or(2);
        if (b1 < 1) throw Error(ErrorCode::BadParams, "b_1 must be positive");
        r.forest = make_forest({2 * b1 + 2, 2 * b1 + 1});
        theorem = TheoremId::OneOdd;
        break;
    }
    case SharpnessCase::Remark2b:
        if (param) throw Error(ErrorCode::BadParams, "this case has no parameter");
        r.forest = make_forest({4, 3, 2});
        theorem = TheoremId::OneOdd;
        break;
    }
    const ForestParams p = forest_params(r.forest);
    r.h = p.h;
    const int hm = r.h - 1;
    if (hm < 1) throw Error(ErrorCode::BadParams, "h must be at least 2");
    const int step = r.h * hm;  // n = step * q + 1
    const int bound = theorem_min_order(theorem, p);
    if (n) {
        if (*n < bound || (*n - 1) % hm != 0)
            throw Error(ErrorCode::BadParams, "order must satisfy n >= " + std::to_string(bound) + " and (n-1) % " +
                                                  std::to_string(hm) + " == 0");
        r.n = *n;
    } else {
        int q = 1;
        while (step * q + 1 < bound) ++q;
        r.n = step * q + 1;
    }
    if (r.n > kMaxOrder) throw Error(ErrorCode::OrderCap, "order above " + std::to_string(kMaxOrder));
    r.construction = FamilySpec{FamilyKind::L, r.n, hm, (r.n - 1) / hm};
    const Graph g = generate_family(r.construction);
    r.graph6 = write_graph6(g);
    r.min_degree = min_degree(g);
    r.forest_contained = contains_linear_forest(g, r.forest).has_value();
    const std::vector<FamilyKind> listed = theorem == TheoremId::Even
                                               ? std::vector<FamilyKind>{FamilyKind::S, FamilyKind::L}
                                               : std::vector<FamilyKind>{FamilyKind::S, FamilyKind::K2Match, FamilyKind::L};
    bool any = false;
    for (FamilyKind k : listed) {
        const bool member = recognize_exception(g, k, r.h).has_value();
        any = any || member;
        r.families.push_back(FamilyCheck{std::string(to_string(k)), member});
    }
    r.certified = r.min_degree == r.h - 1 && !r.forest_contained && !any;
    return r;
}

}  // namespace lfstab
