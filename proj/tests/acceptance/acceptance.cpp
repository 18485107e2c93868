// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lfstab/embed.hpp"
#include "lfstab/enumerate.hpp"
#include "lfstab/error.hpp"
#include "lfstab/families.hpp"
#include "lfstab/recognize.hpp"
#include "lfstab/verify.hpp"
#include "support/oracles.hpp"

using namespace lfstab;

namespace {

// Largest order enumerated exhaustively by the theorem sweeps.
constexpr int kSweepMax = 10;
// Agreement required of the oracle comparisons (criterion 7): exact.
constexpr double kOracleAgreement = 1.0;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (!pass) detail << "; ";
        else detail.str("");
        pass = false;
        detail << why;
    }
};

int jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string counts_text(const SweepCounts& c) {
    std::ostringstream os;
    os << "checked=" << c.checked << " contains=" << c.contains << " exceptions={";
    bool first = true;
    for (const auto& [k, v] : c.exceptions) {
        os << (first ? "" : ",") << k << ":" << v;
        first = false;
    }
    os << "} violations=" << c.violations << " anomalies=" << c.below_threshold_anomalies;
    return os.str();
}

std::string label(const SweepReport& r) {
    std::string s = r.id;
    for (const auto& f : r.forests) s += " [" + describe(f) + "]";
    return s;
}

/// Common gate for every sweep: no violations, no failed witnesses, counts add up.
void require_clean(const SweepReport& r, Outcome& out) {
    if (r.totals.violations != 0)
        out.fail(label(r) + ": " + std::to_string(r.totals.violations) + " violations, first " +
                 r.violations.front().graph6 + " " + r.violations.front().detail);
    if (r.witness_failures != 0) out.fail(label(r) + ": " + std::to_string(r.witness_failures) + " witness failures");
    if (!r.balanced()) out.fail(label(r) + ": counts do not balance");
}

/// Re-classifies every recorded exception example and re-checks its witness.
int revalidate_examples(const SweepReport& r, Outcome& out) {
    int n = 0;
    for (const auto& [family, graphs] : r.exception_examples)
        for (const std::string& g6 : graphs) {
            const Graph g = parse_graph6(g6);
            const Verdict v = classify(r.forests.front(), g);
            ++n;
            if (!v.exception() || to_string(std::get<Exception>(v.value).match.spec.kind) != family ||
                !validate_verdict(r.forests.front(), g, v))
                out.fail(label(r) + ": example " + g6 + " does not re-validate as " + family);
        }
    return n;
}

SweepRequest theorem_request(TheoremId t, std::vector<int> orders, int lo, int hi = kSweepMax) {
    SweepRequest q;
    q.kind = SweepRequest::Kind::Theorem;
    q.theorem = t;
    q.forest = make_forest(std::move(orders));
    q.range = {lo, hi};
    return q;
}

SweepRequest lemma_request(LemmaId id, int lo, int hi, std::vector<int> hs = {}) {
    SweepRequest q;
    q.kind = SweepRequest::Kind::Lemma;
    q.lemma = id;
    q.range = {lo, hi};
    q.hs = std::move(hs);
    return q;
}

int lo_for(TheoremId t, const std::vector<int>& orders) {
    const ForestParams p = forest_params(make_forest(orders));
    return theorem_min_order(t, p);
}

// ---------------------------------------------------------------------------
// shared batch for criteria 2 to 6

const std::vector<std::vector<int>> kEven = {{2, 2}, {4, 2}, {2, 2, 2}, {4, 4}, {6, 2}, {4, 2, 2}};
const std::vector<std::vector<int>> kOneOdd = {{3, 2}, {4, 3}, {5, 2}, {3, 2, 2}, {6, 3}, {5, 4}, {7, 2}};
const std::vector<std::vector<int>> kTwoOddCut = {{3, 3}, {5, 3}, {3, 3, 2}};
const std::vector<std::vector<int>> kTwoOdd2Conn = {{5, 3}, {3, 3, 2}, {7, 3}, {5, 5}};

struct Batch {
    std::vector<SweepReport> even, one_odd, two_odd_cut, two_odd_2conn;
    SweepReport dirac, small_p5p3, small_p2_2p3, lc_range;
    double seconds = 0;
};

Batch run_batch() {
    std::vector<SweepRequest> rq;
    for (const auto& f : kEven) rq.push_back(theorem_request(TheoremId::Even, f, lo_for(TheoremId::Even, f)));
    for (const auto& f : kOneOdd) rq.push_back(theorem_request(TheoremId::OneOdd, f, lo_for(TheoremId::OneOdd, f)));
    for (const auto& f : kTwoOddCut)
        rq.push_back(theorem_request(TheoremId::TwoOddCut, f, lo_for(TheoremId::TwoOddCut, f)));
    for (const auto& f : kTwoOdd2Conn)
        rq.push_back(theorem_request(TheoremId::TwoOdd2Conn, f, lo_for(TheoremId::TwoOdd2Conn, f)));
    rq.push_back(lemma_request(LemmaId::Dirac, 4, kSweepMax));
    rq.push_back(lemma_request(LemmaId::SmallP5P3, 8, kSweepMax));
    rq.push_back(lemma_request(LemmaId::SmallP2_2P3, 8, kSweepMax));
    rq.push_back(lemma_request(LemmaId::LcRange, kSweepMax, kSweepMax, {3}));

    const auto t0 = std::chrono::steady_clock::now();
    SweepOptions opt;
    opt.jobs = jobs();
    std::vector<SweepReport> r = sweep_batch(rq, opt);
    Batch b;
    b.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t i = 0;
    for (std::size_t k = 0; k < kEven.size(); ++k) b.even.push_back(r[i++]);
    for (std::size_t k = 0; k < kOneOdd.size(); ++k) b.one_odd.push_back(r[i++]);
    for (std::size_t k = 0; k < kTwoOddCut.size(); ++k) b.two_odd_cut.push_back(r[i++]);
    for (std::size_t k = 0; k < kTwoOdd2Conn.size(); ++k) b.two_odd_2conn.push_back(r[i++]);
    b.dirac = r[i++];
    b.small_p5p3 = r[i++];
    b.small_p2_2p3 = r[i++];
    b.lc_range = r[i++];
    return b;
}

// ---------------------------------------------------------------------------
// criteria

Outcome c1_eg_bound() {
    Outcome out;
    SweepOptions opt;
    opt.jobs = jobs();
    const SweepReport r = eg_edge_bound_check({1, 9}, opt);
    require_clean(r, out);
    // Every graph, not only connected ones: 1+2+4+11+34+156+1044+12346+274668.
    if (r.totals.checked + r.totals.skipped != 288266)
        out.fail("graphs seen " + std::to_string(r.totals.checked + r.totals.skipped) + ", expected 288266");
    if (out.pass) out.detail << "n=1..9 " << counts_text(r.totals) << " skipped(no l)=" << r.totals.skipped;
    return out;
}

Outcome c2_dirac(const Batch& b) {
    Outcome out;
    require_clean(b.dirac, out);
    if (b.dirac.per_n.size() != static_cast<std::size_t>(kSweepMax - 3)) out.fail("missing orders");
    if (out.pass) out.detail << "2-connected n=4.." << kSweepMax << " " << counts_text(b.dirac.totals);
    return out;
}

Outcome c3_even(const Batch& b) {
    Outcome out;
    std::uint64_t checked = 0;
    for (const auto& r : b.even) {
        require_clean(r, out);
        revalidate_examples(r, out);
        checked += r.totals.checked;
    }
    const SweepCounts& n6 = b.even.front().per_n.at(6);
    if (n6.checked != 112 || n6.contains != 111 || n6.exceptions != std::map<std::string, std::uint64_t>{{"S", 1}})
        out.fail("2P2 n=6: " + counts_text(n6));
    if (out.pass) out.detail << b.even.size() << " forests, " << checked << " graph checks; 2P2 n=6 " << counts_text(n6);
    return out;
}

Outcome c4_one_odd(const Batch& b) {
    Outcome out;
    std::uint64_t checked = 0;
    for (const auto& r : b.one_odd) {
        require_clean(r, out);
        revalidate_examples(r, out);
        checked += r.totals.checked;
    }
    const SweepReport& p6p3 = b.one_odd[4];
    const auto& at10 = p6p3.per_n.at(10).exceptions;
    const auto it = at10.find("K2MATCH");
    const std::uint64_t k2 = it == at10.end() ? 0 : it->second;
    if (k2 == 0) out.fail("P6 u P3 n=10: no K2MATCH exception");
    const auto ex = p6p3.exception_examples.find("K2MATCH");
    if (ex == p6p3.exception_examples.end() || ex->second.empty()) out.fail("no K2MATCH example recorded");
    if (out.pass)
        out.detail << b.one_odd.size() << " forests, " << checked << " graph checks; P6 u P3 n=10 K2MATCH=" << k2
                   << " certified, e.g. " << ex->second.front();
    return out;
}

Outcome c5_two_odd_cut(const Batch& b) {
    Outcome out;
    std::uint64_t exceptions = 0;
    int examples = 0;
    for (const auto& r : b.two_odd_cut) {
        require_clean(r, out);
        examples += revalidate_examples(r, out);
        exceptions += r.totals.exception_total();
    }
    if (out.pass)
        out.detail << b.two_odd_cut.size() << " forests, " << exceptions
                   << " exceptions validated in-sweep, " << examples << " re-validated from graph6";
    return out;
}

Outcome c6_two_odd_2conn(const Batch& b) {
    Outcome out;
    require_clean(b.small_p5p3, out);
    require_clean(b.small_p2_2p3, out);
    require_clean(b.lc_range, out);
    if (b.lc_range.totals.checked == 0) out.fail("LC_RANGE checked no instance");
    std::uint64_t anomalies = 0, checked = 0;
    for (const auto& r : b.two_odd_2conn) {
        require_clean(r, out);
        const int h = forest_params(r.forests.front()).h;
        // every order swept lies under the stated bound, so a miss can only be an anomaly
        if (static_cast<std::uint64_t>(r.range.hi) >= two_odd_threshold(h)) out.fail(label(r) + ": range reaches bound");
        for (const auto& [n, c] : r.per_n) {
            const std::uint64_t sum = c.contains + c.exception_total() + c.violations + c.below_threshold_anomalies;
            if (sum != c.checked) out.fail(label(r) + ": n=" + std::to_string(n) + " unbalanced");
        }
        if (r.anomalies.size() != std::min<std::uint64_t>(r.totals.below_threshold_anomalies, kExampleCap))
            out.fail(label(r) + ": anomaly examples disagree with count");
        anomalies += r.totals.below_threshold_anomalies;
        checked += r.totals.checked;
    }
    if (out.pass)
        out.detail << "SMALL_P5P3 " << counts_text(b.small_p5p3.totals) << "; SMALL_P2_2P3 "
                   << counts_text(b.small_p2_2p3.totals) << "; LC_RANGE h=3 n=10 checked=" << b.lc_range.totals.checked
                   << "; 2-connected sweeps checked=" << checked << " violations=0 anomalies=" << anomalies
                   << " (separate field)";
    return out;
}

std::vector<std::vector<int>> forests_up_to(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int cap, int left) {
        if (!cur.empty()) out.push_back(cur);
        for (int o = std::min(cap, left); o >= 2; --o) {
            cur.push_back(o);
            rec(o, left - o);
            cur.pop_back();
        }
    };
    rec(total, total);
    return out;
}

/// Every valid family spec of the given kind, order n and h (HNLA: every l, a).
std::vector<FamilySpec> templates(FamilyKind k, int n, int h) {
    std::vector<FamilySpec> out;
    auto add = [&](std::map<std::string, int> p) {
        try {
            FamilySpec s = make_family_spec(k, p);
            if (family_order(s) == n) out.push_back(s);
        } catch (const Error&) {
        }
    };
    switch (k) {
        case FamilyKind::S:
        case FamilyKind::SPlus: add({{"n", n}, {"h", h}}); break;
        case FamilyKind::L:
            for (int t = 0; t <= n; ++t) add({{"t", t}, {"h", h}});
            break;
        case FamilyKind::LGen:
        case FamilyKind::FGlue:
        case FamilyKind::TGlue:
            for (int t1 = 0; t1 <= n; ++t1)
                for (int t2 = 0; t2 <= n; ++t2) add({{"t1", t1}, {"t2", t2}, {"h", h}});
            break;
        case FamilyKind::U3: add({{"h", h}}); break;
        case FamilyKind::H1:
        case FamilyKind::H2:
        case FamilyKind::K2Match:
        case FamilyKind::K3Match: add({{"n", n}}); break;
        case FamilyKind::Hnla:
            // order n needs n - l + a >= 0, so l runs up to n + a
            for (int l = 1; l <= 2 * n; ++l)
                for (int a = 0; a <= l / 2; ++a) add({{"n", n}, {"l", l}, {"a", a}});
            break;
    }
    return out;
}

Outcome c7_oracles() {
    Outcome out;
    std::uint64_t cont_total = 0, cont_agree = 0, rec_total = 0, rec_agree = 0;
    auto check_containment = [&](const Graph& g) {
        for (const auto& orders : forests_up_to(g.order())) {
            const LinearForest f = make_forest(orders);
            const bool expect = oracle::brute_contains_forest(g, f.orders);
            const auto cert = contains_linear_forest(g, f);
            ++cont_total;
            if (cert.has_value() == expect && (!cert || validate_certificate(g, f, *cert))) ++cont_agree;
            else if (cont_total - cont_agree <= 3) out.fail("containment " + write_graph6(g) + " " + describe(f));
        }
    };
    auto check_recognizers = [&](const Graph& g) {
        for (FamilyKind k : kAllFamilies) {
            const bool iso = is_isomorphism_kind(k);
            const int hmax = k == FamilyKind::Hnla || k == FamilyKind::H1 || k == FamilyKind::H2 ||
                                     k == FamilyKind::K2Match || k == FamilyKind::K3Match
                                 ? 1
                                 : 3;
            for (int h = 1; h <= hmax; ++h) {
                const int hh = k == FamilyKind::Hnla ? 0 : h;
                bool expect = false;
                for (const FamilySpec& s : templates(k, g.order(), h)) {
                    const Graph t = generate_family(s);
                    if (iso ? oracle::brute_isomorphic(g, t) : oracle::brute_monomorphism(g, t)) {
                        expect = true;
                        break;
                    }
                }
                const auto m = recognize_exception(g, k, hh);
                ++rec_total;
                if (m.has_value() == expect && (!m || validate_match(g, *m))) ++rec_agree;
                else if (rec_total - rec_agree <= 3)
                    out.fail("recognizer " + std::string(to_string(k)) + " h=" + std::to_string(h) + " on " +
                             write_graph6(g));
            }
        }
    };
    // labelled graphs up to 6 vertices, isomorphism classes at 7
    for (int n = 1; n <= 6; ++n) oracle::all_labelled_graphs(n, check_containment);
    std::set<std::string> seen;
    for (int n = 1; n <= 6; ++n)
        oracle::all_labelled_graphs(n, [&](const Graph& g) {
            if (seen.insert(canonical_label(g)).second) check_recognizers(g);
        });
    enumerate_graphs(EnumFilter{7}, [&](const Graph& g) {
        check_containment(g);
        check_recognizers(g);
    });
    const double a = cont_total ? static_cast<double>(cont_agree) / static_cast<double>(cont_total) : 0.0;
    const double r = rec_total ? static_cast<double>(rec_agree) / static_cast<double>(rec_total) : 0.0;
    if (a < kOracleAgreement || r < kOracleAgreement) out.fail("agreement below 100%");
    if (out.pass)
        out.detail << "containment " << cont_agree << "/" << cont_total << ", recognizers " << rec_agree << "/"
                   << rec_total;
    return out;
}

Outcome c8_census() {
    Outcome out;
    const std::uint64_t expect[] = {1, 1, 2, 6, 21, 112, 853, 11117, 261080};
    std::ostringstream got;
    for (int n = 1; n <= 9; ++n) {
        EnumFilter f{n};
        f.connectivity = Connectivity::Connected;
        const std::uint64_t c = count_graphs(f, jobs());
        got << (n > 1 ? ", " : "") << c;
        if (c != expect[n - 1]) out.fail("n=" + std::to_string(n) + ": " + std::to_string(c));
    }
    if (out.pass) out.detail << "connected n=1..9: " << got.str();
    return out;
}

Outcome c9_formulas() {
    Outcome out;
    int specs = 0;
    for (FamilyKind k : kAllFamilies)
        for (int n = 1; n <= 20; ++n)
            for (int h = 1; h <= 4; ++h) {
                if (h > 1 && (k == FamilyKind::Hnla || k == FamilyKind::H1 || k == FamilyKind::H2 ||
                              k == FamilyKind::K2Match || k == FamilyKind::K3Match))
                    continue;
                for (const FamilySpec& s : templates(k, n, h)) {
                    const Graph g = generate_family(s);
                    const FamilySize z = family_size(s);
                    int delta = g.order() ? g.order() : 0, edges = 0;
                    for (int v = 0; v < g.order(); ++v) {
                        delta = std::min(delta, g.degree(v));
                        edges += g.degree(v);
                    }
                    if (g.order() == 0) delta = 0;
                    ++specs;
                    if (z.order != g.order() || 2 * z.edges != edges || z.min_degree != delta)
                        out.fail(describe(s) + ": formula mismatch");
                }
            }
    auto edges_of = [](FamilyKind k, std::map<std::string, int> p) {
        return generate_family(make_family_spec(k, p)).edge_count();
    };
    if (edges_of(FamilyKind::S, {{"n", 7}, {"h", 2}}) != 11) out.fail("e(S_{7,2}) != 11");
    if (edges_of(FamilyKind::SPlus, {{"n", 7}, {"h", 2}}) != 12) out.fail("e(S+_{7,2}) != 12");
    if (edges_of(FamilyKind::U3, {{"h", 1}}) != 6) out.fail("e(U_{3,1}) != 6");
    if (hnla_edges(7, 6, 2) != 12 || edges_of(FamilyKind::Hnla, {{"n", 7}, {"l", 6}, {"a", 2}}) != 12)
        out.fail("h(7,6,2) != 12");
    const Graph t = generate_family(make_family_spec(FamilyKind::TGlue, {{"t1", 1}, {"t2", 1}, {"h", 2}}));
    if (t.order() != 12 || t.edge_count() != 17) out.fail("T_{1,1,2,3} size");
    if (out.pass)
        out.detail << specs << " specs (h<=4, n<=20); S72=11 S+72=12 U31=6 h(7,6,2)=12 T1123=(12,17)";
    return out;
}

Outcome c10_sharpness() {
    Outcome out;
    for (SharpnessCase c : {SharpnessCase::Remark1a, SharpnessCase::Remark1b, SharpnessCase::Remark2a,
                            SharpnessCase::Remark2b}) {
        const SharpnessReport r = sharpness_demo(c);
        const std::string name(to_string(c));
        const Graph g = parse_graph6(r.graph6);
        if (!r.certified) out.fail(name + ": not certified");
        if (min_degree(g) != r.h - 1) out.fail(name + ": min degree " + std::to_string(min_degree(g)));
        // non-containment re-checked with the subset dynamic program
        if (contains_linear_forest_dp(g, r.forest)) out.fail(name + ": forest found by DP");
        for (const FamilyCheck& fc : r.families)
            if (fc.member) out.fail(name + ": member of " + fc.family);
        if (r.families.empty()) out.fail(name + ": no families checked");
        if (out.pass)
            out.detail << (c == SharpnessCase::Remark1a ? "" : "; ") << name << " F=" << describe(r.forest)
                       << " h=" << r.h << " n=" << r.n;
    }
    return out;
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& run) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failed;
        std::printf("%s  %2d %-28s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.str().c_str(), s);
        std::fflush(stdout);
    };

    report(1, "eg-edge-bound", c1_eg_bound);
    report(7, "oracle-equivalence", c7_oracles);
    report(8, "enumerator-census", c8_census);
    report(9, "family-formulas", c9_formulas);
    report(10, "sharpness", c10_sharpness);

    Batch b;
    bool batch_ok = true;
    std::string batch_error;
    try {
        b = run_batch();
    } catch (const std::exception& e) {
        batch_ok = false;
        batch_error = e.what();
    }
    auto from_batch = [&](Outcome (*fn)(const Batch&)) {
        return [&, fn] {
            if (!batch_ok) {
                Outcome o;
                o.fail("batch failed: " + batch_error);
                return o;
            }
            return fn(b);
        };
    };
    std::printf("      shared sweep batch n<=%d: %.1fs\n", kSweepMax, b.seconds);
    report(2, "dirac-circumference", from_batch(c2_dirac));
    report(3, "even-theorem", from_batch(c3_even));
    report(4, "one-odd-theorem", from_batch(c4_one_odd));
    report(5, "two-odd-cut-theorem", from_batch(c5_two_odd_cut));
    report(6, "two-odd-2conn-substitute", from_batch(c6_two_odd_2conn));

    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
