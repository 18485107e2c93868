#ifndef LFSTAB_VERIFY_HPP
#define LFSTAB_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lfstab/embed.hpp"
#include "lfstab/enumerate.hpp"
#include "lfstab/forest.hpp"
#include "lfstab/graph.hpp"
#include "lfstab/recognize.hpp"

namespace lfstab {

// ---------------------------------------------------------------------------
// classification

enum class TheoremId { Even, OneOdd, TwoOdd2Conn, TwoOddCut };

std::string_view to_string(TheoremId t);
/// Accepts "even", "one_odd", "two_odd_2conn", "two_odd_cut" (any case, - or _).
TheoremId parse_theorem(std::string_view text);

struct Contains {
    EmbeddingCertificate certificate;
};
struct Exception {
    FamilyMatch match;
};
/// F is missing and no listed family matches. `below_threshold` marks
/// orders under the theorem's stated lower bound; `oracle_confirmed` is the
/// independent re-check of non-containment (unset above the oracle's order cap).
struct Violation {
    bool below_threshold = false;
    std::optional<bool> oracle_confirmed;
};
struct HypothesisNotMet {
    std::string reason;
};

struct Verdict {
    std::optional<TheoremId> theorem;  ///< unset when no theorem applies
    std::variant<Contains, Exception, Violation, HypothesisNotMet> value;

    bool contains() const { return std::holds_alternative<Contains>(value); }
    bool exception() const { return std::holds_alternative<Exception>(value); }
    bool violation() const { return std::holds_alternative<Violation>(value); }
    bool hypothesis_not_met() const { return std::holds_alternative<HypothesisNotMet>(value); }
};

/// Theorem applicable to a forest of this class on a connected graph.
TheoremId theorem_for(const ForestParams& p, bool two_connected);

/// Exception families checked for F under a theorem, each only when its
/// condition on the shape of F holds. Order is the reporting order.
std::vector<FamilyKind> exception_families(TheoremId t, const ForestParams& p);

/// Smallest order the theorem speaks about (the order bound of its
/// statement; for the 2-connected two-odd case the working floor 2h+4).
int theorem_min_order(TheoremId t, const ForestParams& p);

/// Order from which the 2-connected two-odd statement is asserted:
/// 4(2h+1)^2 C(2h+1,h).
std::uint64_t two_odd_threshold(int h);

/// Throws OutOfTheoremScope for l >= 3 or k + l < 2.
Verdict classify(const LinearForest& f, const Graph& g);

/// Re-checks a Contains certificate or Exception witness from scratch.
bool validate_verdict(const LinearForest& f, const Graph& g, const Verdict& v);

// ---------------------------------------------------------------------------
// sweeps

struct NRange {
    int lo = 0;
    int hi = 0;
};

struct SweepCounts {
    std::uint64_t checked = 0;
    std::uint64_t contains = 0;
    std::map<std::string, std::uint64_t> exceptions;
    std::uint64_t violations = 0;
    std::uint64_t below_threshold_anomalies = 0;
    std::uint64_t skipped = 0;

    std::uint64_t exception_total() const;
    void merge(const SweepCounts& o);
};

struct Finding {
    std::string graph6;  ///< canonical graph6
    std::string detail;

    auto operator<=>(const Finding&) const = default;
};

struct SweepReport {
    std::string kind;  ///< "theorem", "lemma" or "eg_edge_bound"
    std::string id;
    std::vector<LinearForest> forests;
    NRange range;
    std::string source;  ///< "enumerate" or the ingested path
    int min_degree = 0;
    Connectivity connectivity = Connectivity::Any;

    SweepCounts totals;
    std::map<int, SweepCounts> per_n;
    std::uint64_t witness_failures = 0;
    std::vector<Finding> violations;                  ///< sorted, complete
    std::vector<Finding> anomalies;                   ///< sorted, first kExampleCap
    std::map<std::string, std::vector<std::string>> exception_examples;  ///< sorted, capped
    std::vector<std::string> notes;
    double wall_seconds = 0;  ///< text output only

    bool clean() const { return totals.violations == 0 && witness_failures == 0; }
    /// checked == contains + exceptions + violations + anomalies
    bool balanced() const;
};

inline constexpr std::size_t kExampleCap = 10;

struct SweepOptions {
    int jobs = 1;
    /// graph6 file (or "-") used instead of built-in enumeration.
    std::optional<std::string> input;
    /// Progress lines on standard error.
    bool progress = false;
};

enum class LemmaId {
    EgPath,
    Dirac,
    LcStruct,
    NbhdEq,
    BipartiteGlue,
    GluedSmall,
    GluedP3,
    Small2P3,
    SmallP5P3,
    SmallP2_2P3,
    LcRange,
    NoP3Out
};

inline constexpr LemmaId kAllLemmas[] = {LemmaId::EgPath,     LemmaId::Dirac,     LemmaId::LcStruct,   LemmaId::NbhdEq,
                                         LemmaId::BipartiteGlue, LemmaId::GluedSmall, LemmaId::GluedP3, LemmaId::Small2P3,
                                         LemmaId::SmallP5P3,  LemmaId::SmallP2_2P3, LemmaId::LcRange, LemmaId::NoP3Out};

std::string_view to_string(LemmaId id);
/// Throws UnknownLemma.
LemmaId parse_lemma(std::string_view text);

/// One unit of work for sweep_batch.
struct SweepRequest {
    enum class Kind { Theorem, Lemma, EgBound } kind = Kind::Theorem;
    TheoremId theorem = TheoremId::Even;
    LemmaId lemma = LemmaId::Dirac;
    std::optional<LinearForest> forest;  ///< theorem sweeps
    NRange range;
    /// LC_RANGE / NO_P3_OUT: the h values to cover (default {3}).
    std::vector<int> hs;
};

/// Classifies every graph of the theorem's universe: connected, min degree
/// >= h, 2-connected or with a cut vertex for the two-odd theorems.
SweepReport sweep_theorem(TheoremId t, const LinearForest& f, NRange range, const SweepOptions& opt = {});
SweepReport verify_lemma(LemmaId id, NRange range, const SweepOptions& opt = {}, std::vector<int> hs = {});
/// Every graph of order n in range: longest path >= largest l with e > (l-2)n/2.
SweepReport eg_edge_bound_check(NRange range, const SweepOptions& opt = {});

/// Runs many requests with one enumeration pass per order; reports come
/// back in request order and equal the ones the single runs would produce.
std::vector<SweepReport> sweep_batch(const std::vector<SweepRequest>& requests, const SweepOptions& opt = {});

// ---------------------------------------------------------------------------
// extremal search and sharpness

struct TuranResult {
    LinearForest forest;
    int n = 0;
    int h = 0;
    int max_edges = -1;                     ///< over all F-free graphs
    std::vector<std::string> maximizers;    ///< canonical graph6, sorted
    std::optional<int> max_edges_connected;
    std::vector<std::string> maximizers_connected;
    std::optional<int> e_s;                 ///< e(S_{n,h}) when defined
    std::optional<int> e_splus;             ///< e(S+_{n,h}) when defined
};

TuranResult turan_search(const LinearForest& f, int n, bool connected, int jobs = 1);

enum class SharpnessCase { Remark1a, Remark1b, Remark2a, Remark2b };

std::string_view to_string(SharpnessCase c);
SharpnessCase parse_sharpness(std::string_view text);

struct FamilyCheck {
    std::string family;
    bool member = false;
};

struct SharpnessReport {
    SharpnessCase which = SharpnessCase::Remark1a;
    LinearForest forest;
    int h = 0;
    int n = 0;
    FamilySpec construction;
    std::string graph6;
    int min_degree = 0;
    bool forest_contained = false;
    std::vector<FamilyCheck> families;
    bool certified = false;  ///< delta = h-1, F missing, no family matches
};

/// `param` is a_1 (first examples) or b_1 (second of the one-odd pair) where
/// the case has one; `n` overrides the default order, which is the smallest
/// admissible order that meets the theorem's order bound.
SharpnessReport sharpness_demo(SharpnessCase c, std::optional<int> param = std::nullopt,
                               std::optional<int> n = std::nullopt);

}  // namespace lfstab

#endif
