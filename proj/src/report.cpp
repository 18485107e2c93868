#include "lfstab/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace lfstab {

namespace {

using nlohmann::ordered_json;

ordered_json counts_json(const SweepCounts& c) {
    ordered_json j;
    j["checked"] = c.checked;
    j["contains"] = c.contains;
    ordered_json ex = ordered_json::object();
    for (const auto& [k, v] : c.exceptions) ex[k] = v;
    j["exceptions"] = ex;
    j["violations"] = c.violations;
    j["below_threshold_anomalies"] = c.below_threshold_anomalies;
    j["skipped"] = c.skipped;
    return j;
}

ordered_json findings_json(const std::vector<Finding>& v) {
    ordered_json a = ordered_json::array();
    for (const Finding& f : v) a.push_back({{"graph6", f.graph6}, {"detail", f.detail}});
    return a;
}

ordered_json spec_json(const FamilySpec& s) {
    ordered_json j;
    j["family"] = std::string(to_string(s.kind));
    for (const auto& [k, v] : spec_params(s)) j[k] = v;
    return j;
}

ordered_json match_json(const FamilyMatch& m) {
    ordered_json j;
    j["spec"] = spec_json(m.spec);
    j["description"] = describe(m.spec);
    j["route"] = std::string(to_string(m.route));
    j["witness"] = to_vector(m.witness);
    j["mapping"] = m.mapping;
    return j;
}

ordered_json report_json(const SweepReport& r) {
    ordered_json j;
    j["schema"] = "lfstab.sweep/1";
    j["kind"] = r.kind;
    j["id"] = r.id;
    ordered_json fs = ordered_json::array();
    for (const LinearForest& f : r.forests) fs.push_back(to_string(f));
    j["forests"] = fs;
    j["range"] = {{"lo", r.range.lo}, {"hi", r.range.hi}};
    j["source"] = r.source;
    j["filter"] = {{"min_degree", r.min_degree}, {"connectivity", std::string(to_string(r.connectivity))}};
    j["counts"] = counts_json(r.totals);
    ordered_json per = ordered_json::array();
    for (const auto& [n, c] : r.per_n) {
        ordered_json e;
        e["n"] = n;
        e.update(counts_json(c));
        per.push_back(e);
    }
    j["per_n"] = per;
    j["witness_failures"] = r.witness_failures;
    j["violations"] = findings_json(r.violations);
    j["anomaly_examples"] = findings_json(r.anomalies);
    ordered_json ex = ordered_json::object();
    for (const auto& [k, v] : r.exception_examples) ex[k] = v;
    j["exception_examples"] = ex;
    j["notes"] = r.notes;
    j["balanced"] = r.balanced();
    j["clean"] = r.clean();
    return j;
}

std::string verdict_name(const Verdict& v) {
    if (v.contains()) return "contains";
    if (v.exception()) return "exception";
    if (v.violation()) return "violation";
    return "hypothesis_not_met";
}

std::string join_paths(const EmbeddingCertificate& c) {
    std::ostringstream o;
    for (std::size_t i = 0; i < c.paths.size(); ++i) {
        if (i) o << " | ";
        for (std::size_t k = 0; k < c.paths[i].size(); ++k) o << (k ? "-" : "") << c.paths[i][k];
    }
    return o.str();
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("n/a"); }

}  // namespace

std::string to_json(const SweepReport& r) { return report_json(r).dump(2); }

std::string to_json(const std::vector<SweepReport>& reports) {
    ordered_json a = ordered_json::array();
    for (const SweepReport& r : reports) a.push_back(report_json(r));
    return a.dump(2);
}

std::string to_json(const Verdict& v, const LinearForest& f, const Graph& g) {
    ordered_json j;
    j["schema"] = "lfstab.verdict/1";
    j["forest"] = to_string(f);
    j["graph6"] = write_graph6(g);
    j["theorem"] = v.theorem ? ordered_json(std::string(to_string(*v.theorem))) : ordered_json(nullptr);
    j["verdict"] = verdict_name(v);
    if (const auto* c = std::get_if<Contains>(&v.value)) j["certificate"] = c->certificate.paths;
    if (const auto* e = std::get_if<Exception>(&v.value)) j["match"] = match_json(e->match);
    if (const auto* x = std::get_if<Violation>(&v.value)) {
        j["below_threshold"] = x->below_threshold;
        j["oracle_confirmed"] = x->oracle_confirmed ? ordered_json(*x->oracle_confirmed) : ordered_json(nullptr);
    }
    if (const auto* h = std::get_if<HypothesisNotMet>(&v.value)) j["reason"] = h->reason;
    j["valid"] = validate_verdict(f, g, v);
    return j.dump(2);
}

std::string to_json(const TuranResult& r) {
    ordered_json j;
    j["schema"] = "lfstab.turan/1";
    j["forest"] = to_string(r.forest);
    j["n"] = r.n;
    j["h"] = r.h;
    j["max_edges"] = r.max_edges;
    j["maximizers"] = r.maximizers;
    if (r.max_edges_connected) {
        j["max_edges_connected"] = *r.max_edges_connected;
        j["maximizers_connected"] = r.maximizers_connected;
    }
    j["e_S"] = r.e_s ? ordered_json(*r.e_s) : ordered_json(nullptr);
    j["e_SPLUS"] = r.e_splus ? ordered_json(*r.e_splus) : ordered_json(nullptr);
    return j.dump(2);
}

std::string to_json(const SharpnessReport& r) {
    ordered_json j;
    j["schema"] = "lfstab.sharpness/1";
    j["case"] = std::string(to_string(r.which));
    j["forest"] = to_string(r.forest);
    j["h"] = r.h;
    j["n"] = r.n;
    j["construction"] = spec_json(r.construction);
    j["graph6"] = r.graph6;
    j["min_degree"] = r.min_degree;
    j["forest_contained"] = r.forest_contained;
    ordered_json fam = ordered_json::array();
    for (const FamilyCheck& c : r.families) fam.push_back({{"family", c.family}, {"member", c.member}});
    j["families"] = fam;
    j["certified"] = r.certified;
    return j.dump(2);
}

std::string to_json(const FamilyMatch& m, const Graph& g) {
    ordered_json j = match_json(m);
    j["schema"] = "lfstab.match/1";
    j["graph6"] = write_graph6(g);
    j["valid"] = validate_match(g, m);
    return j.dump(2);
}

std::string to_text(const SweepReport& r) {
    std::ostringstream o;
    o << r.kind << " " << r.id;
    for (const LinearForest& f : r.forests) o << " [" << describe(f) << "]";
    o << " n=" << r.range.lo << ".." << r.range.hi << " source=" << r.source << "\n";
    auto line = [&](const std::string& label, const SweepCounts& c) {
        o << "  " << label << " checked=" << c.checked << " contains=" << c.contains;
        o << " exceptions={";
        bool first = true;
        for (const auto& [k, v] : c.exceptions) {
            o << (first ? "" : ",") << k << ":" << v;
            first = false;
        }
        o << "} violations=" << c.violations << " anomalies=" << c.below_threshold_anomalies
          << " skipped=" << c.skipped << "\n";
    };
    for (const auto& [n, c] : r.per_n) line("n=" + std::to_string(n), c);
    line("total", r.totals);
    o << "  witness_failures=" << r.witness_failures << " balanced=" << (r.balanced() ? "yes" : "no")
      << " wall=" << std::fixed << std::setprecision(2) << r.wall_seconds << "s\n";
    for (const Finding& f : r.violations) o << "  violation " << f.graph6 << " " << f.detail << "\n";
    for (const Finding& f : r.anomalies) o << "  anomaly " << f.graph6 << " " << f.detail << "\n";
    for (const auto& [fam, ex] : r.exception_examples)
        for (const std::string& g6 : ex) o << "  example " << fam << " " << g6 << "\n";
    for (const std::string& n : r.notes) o << "  note: " << n << "\n";
    return o.str();
}

std::string to_text(const Verdict& v, const LinearForest& f, const Graph& g) {
    std::ostringstream o;
    o << verdict_name(v);
    if (v.theorem) o << " theorem=" << to_string(*v.theorem);
    if (const auto* c = std::get_if<Contains>(&v.value)) o << " paths=" << join_paths(c->certificate);
    if (const auto* e = std::get_if<Exception>(&v.value)) o << " " << to_text(e->match);
    if (const auto* x = std::get_if<Violation>(&v.value)) {
        o << " below_threshold=" << (x->below_threshold ? "yes" : "no");
        o << " oracle=" << (x->oracle_confirmed ? (*x->oracle_confirmed ? "confirmed" : "disagrees") : "n/a");
    }
    if (const auto* h = std::get_if<HypothesisNotMet>(&v.value)) o << " reason=\"" << h->reason << "\"";
    o << " valid=" << (validate_verdict(f, g, v) ? "yes" : "no") << "\n";
    return o.str();
}

std::string to_text(const TuranResult& r) {
    std::ostringstream o;
    o << "ex(" << r.n << ", " << describe(r.forest) << ") = " << r.max_edges << " over " << r.maximizers.size()
      << " extremal graph(s)\n";
    for (const std::string& g : r.maximizers) o << "  " << g << "\n";
    if (r.max_edges_connected) {
        o << "connected: " << *r.max_edges_connected << " over " << r.maximizers_connected.size()
          << " extremal graph(s)\n";
        for (const std::string& g : r.maximizers_connected) o << "  " << g << "\n";
    }
    o << "h=" << r.h << " e(S)=" << opt_int(r.e_s) << " e(SPLUS)=" << opt_int(r.e_splus) << "\n";
    return o.str();
}

std::string to_text(const SharpnessReport& r) {
    std::ostringstream o;
    o << to_string(r.which) << ": F=" << describe(r.forest) << " h=" << r.h << " G=" << describe(r.construction)
      << " " << r.graph6 << "\n";
    o << "  min_degree=" << r.min_degree << " (h-1=" << r.h - 1 << ") forest_contained="
      << (r.forest_contained ? "yes" : "no") << "\n";
    for (const FamilyCheck& c : r.families) o << "  " << c.family << ": " << (c.member ? "member" : "no") << "\n";
    o << "  certified=" << (r.certified ? "yes" : "no") << "\n";
    return o.str();
}

std::string to_text(const FamilyMatch& m) {
    std::ostringstream o;
    o << describe(m.spec) << " route=" << to_string(m.route);
    if (m.witness) {
        o << " witness=";
        bool first = true;
        for (int v : to_vector(m.witness)) {
            o << (first ? "" : ",") << v;
            first = false;
        }
    }
    return o.str();
}

}  // namespace lfstab
