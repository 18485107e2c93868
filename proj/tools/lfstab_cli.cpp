#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lfstab/embed.hpp"
#include "lfstab/enumerate.hpp"
#include "lfstab/error.hpp"
#include "lfstab/families.hpp"
#include "lfstab/forest.hpp"
#include "lfstab/recognize.hpp"
#include "lfstab/report.hpp"
#include "lfstab/verify.hpp"

using namespace lfstab;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

int default_jobs() {
    if (const char* env = std::getenv("LFSTAB_JOBS")) {
        try {
            const int j = std::stoi(env);
            if (j > 0) return j;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring LFSTAB_JOBS='" << env << "'\n";
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

NRange parse_range(const std::string& text) {
    auto num = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) throw Error(ErrorCode::BadParams, "bad range '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots != std::string::npos) return {num(text.substr(0, dots)), num(text.substr(dots + 2))};
    const auto dash = text.find('-', 1);
    if (dash != std::string::npos) return {num(text.substr(0, dash)), num(text.substr(dash + 1))};
    const int n = num(text);
    return {n, n};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadParams, "bad integer list '" + text + "'");
        }
    }
    return out;
}

struct Common {
    std::string format = "text";
    std::string out;
    int jobs = 1;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

bool want_json(const Common& c) {
    if (c.format == "json") return true;
    if (c.format == "text") return false;
    throw Error(ErrorCode::BadParams, "format must be text or json");
}

// Reads every graph6 line from the source in order; bad lines abort with SourceError.
std::vector<Graph> read_graphs(const std::string& input) {
    std::vector<Graph> graphs;
    const IngestResult r = ingest_graph6_file(input, IngestOptions{}, [&](const Graph& g) { graphs.push_back(g); });
    if (!r.errors.empty())
        throw Error(ErrorCode::SourceError,
                    input + " line " + std::to_string(r.errors.front().line) + ": " + r.errors.front().message);
    return graphs;
}

void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear-forest stability toolkit: exceptional families, containment and exhaustive theorem checks"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1, 1);
    Common common;
    common.jobs = default_jobs();

    auto add_common = [&](CLI::App* sub, const std::string& default_format) {
        common.format = default_format;
        sub->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", common.out, "write the report to this file instead of standard output");
    };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", common.jobs, "worker threads (default: LFSTAB_JOBS or hardware cores)")
            ->check(CLI::PositiveNumber);
    };

    // gen
    std::string family;
    std::string params;
    auto* gen = app.add_subcommand("gen", "generate one member of an exceptional family as graph6");
    gen->add_option("--family", family, "S, SPLUS, L, LGEN, FGLUE, TGLUE, U3, H1, H2, K2MATCH, K3MATCH, HNLA")
        ->required();
    gen->add_option("--params", params, "comma-separated key=value pairs, e.g. n=7,h=2")->required();

    // recognize
    int h = 0;
    std::string stream_input = "-";
    std::string input;
    auto* recognize = app.add_subcommand("recognize", "test graph6 graphs against an exceptional family");
    recognize->add_option("--family", family, "family name (omit to try every family)");
    recognize->add_option("--h", h, "family parameter h")->required();
    recognize->add_option("--input", stream_input, "graph6 file, - for standard input");

    // contains
    std::string forest;
    auto* contains = app.add_subcommand("contains", "decide whether a linear forest embeds in each graph");
    contains->add_option("--forest", forest, "path orders, e.g. 4,4 or 2P4 u P2")->required();
    contains->add_option("--input", stream_input, "graph6 file, - for standard input");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify graphs under the applicable stability theorem");
    classify_cmd->add_option("--forest", forest, "path orders")->required();
    classify_cmd->add_option("--input", stream_input, "graph6 file, - for standard input");

    // sweep
    std::string theorem;
    std::string range_text;
    std::optional<int> n_opt;
    auto* sweep = app.add_subcommand("sweep", "exhaustive theorem sweep over enumerated or ingested graphs");
    sweep->add_option("--theorem", theorem, "even, one_odd, two_odd_2conn, two_odd_cut or eg_edge_bound")
        ->required();
    sweep->add_option("--forest", forest, "path orders (not used by eg_edge_bound)");
    auto* sweep_n = sweep->add_option("--n", n_opt, "single order");
    auto* sweep_range = sweep->add_option("--range", range_text, "orders lo..hi");
    auto* sweep_input = sweep->add_option("--input", input, "graph6 file instead of enumeration");
    sweep_input->excludes(sweep_n)->excludes(sweep_range);
    sweep_n->excludes(sweep_range);

    // lemma
    std::string lemma_id;
    std::string hs_text;
    auto* lemma = app.add_subcommand("lemma", "check a structural lemma over its premise instances");
    lemma->add_option("id", lemma_id, "EG_PATH, DIRAC, LC_STRUCT, NBHD_EQ, BIPARTITE_GLUE, GLUED_SMALL, GLUED_P3, "
                                      "SMALL_2P3, SMALL_P5P3, SMALL_P2_2P3, LC_RANGE, NO_P3_OUT")
        ->required();
    auto* lemma_n = lemma->add_option("--n", n_opt, "single order");
    auto* lemma_range = lemma->add_option("--range", range_text, "orders lo..hi");
    auto* lemma_input = lemma->add_option("--input", input, "graph6 file instead of enumeration");
    lemma->add_option("--h", hs_text, "h values for LC_RANGE / NO_P3_OUT, comma-separated (default 3)");
    lemma_input->excludes(lemma_n)->excludes(lemma_range);
    lemma_n->excludes(lemma_range);

    // turan
    int n_value = 0;
    bool connected = false;
    auto* turan = app.add_subcommand("turan", "exact extremal number of a linear forest at small order");
    turan->add_option("--forest", forest, "path orders")->required();
    turan->add_option("--n", n_value, "order")->required();
    turan->add_flag("--connected", connected, "also report the maximum over connected graphs");

    // sharpness
    std::string sharp_case;
    std::optional<int> sharp_param;
    auto* sharpness = app.add_subcommand("sharpness", "minimum-degree sharpness constructions");
    sharpness->add_option("case", sharp_case, "remark1a, remark1b, remark2a, remark2b or all")->required();
    sharpness->add_option("--param", sharp_param, "a_1 (remark1a) or b_1 (remark2a)");
    sharpness->add_option("--n", n_opt, "order of the construction");

    // enumerate
    int min_deg = 0;
    std::string conn_text = "any";
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "list non-isomorphic graphs of one order as graph6");
    enumerate->add_option("--n", n_value, "order")->required();
    enumerate->add_option("--min-degree", min_deg, "minimum degree filter");
    enumerate->add_option("--connectivity", conn_text, "any, connected, two_connected or has_cut_vertex");
    enumerate->add_flag("--count", count_only, "print only the number of graphs");

    for (auto* s : {gen, recognize, contains, classify_cmd, enumerate}) add_common(s, "text");
    for (auto* s : {sweep, lemma, turan, sharpness}) add_common(s, "json");
    for (auto* s : {sweep, lemma, turan, enumerate}) add_jobs(s);
    // add_common assigns the default per subcommand; restore the one that was parsed.
    app.parse_complete_callback([&] {
        for (auto* s : {gen, recognize, contains, classify_cmd, enumerate})
            if (s->parsed() && s->count("--format") == 0) common.format = "text";
        for (auto* s : {sweep, lemma, turan, sharpness})
            if (s->parsed() && s->count("--format") == 0) common.format = "json";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const bool as_json = want_json(common);
        Output output(common.out);
        std::ostream& os = output.stream();

        if (gen->parsed()) {
            const FamilySpec spec = make_family_spec(parse_family_kind(family), parse_params(params));
            const Graph g = generate_family(spec);
            if (as_json) {
                json j;
                j["schema"] = "lfstab.gen/1";
                j["family"] = std::string(to_string(spec.kind));
                for (const auto& [k, v] : spec_params(spec)) j[k] = v;
                j["graph6"] = write_graph6(g);
                j["order"] = g.order();
                j["edges"] = g.edge_count();
                j["min_degree"] = min_degree(g);
                emit_json(os, j);
            } else {
                os << write_graph6(g) << "\n";
            }
            return kExitClean;
        }

        if (recognize->parsed()) {
            std::vector<FamilyKind> kinds;
            if (family.empty())
                kinds.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
            else
                kinds.push_back(parse_family_kind(family));
            json all = json::array();
            for (const Graph& g : read_graphs(stream_input)) {
                json matches = json::array();
                std::string line = write_graph6(g);
                bool any = false;
                for (FamilyKind k : kinds) {
                    if (auto m = recognize_exception(g, k, h)) {
                        any = true;
                        json j = json::parse(to_json(*m, g));
                        j.erase("schema");
                        j.erase("graph6");
                        matches.push_back(j);
                        line += " " + to_text(*m);
                    }
                }
                if (as_json)
                    all.push_back({{"graph6", write_graph6(g)}, {"matches", matches}});
                else
                    os << line << (any ? "" : " no") << "\n";
            }
            if (as_json) emit_json(os, {{"schema", "lfstab.recognize/1"}, {"h", h}, {"graphs", all}});
            return kExitClean;
        }

        if (contains->parsed()) {
            const LinearForest f = parse_forest(forest);
            json all = json::array();
            for (const Graph& g : read_graphs(stream_input)) {
                const auto cert = contains_linear_forest(g, f);
                if (as_json) {
                    json e{{"graph6", write_graph6(g)}, {"contains", cert.has_value()}};
                    if (cert) e["certificate"] = cert->paths;
                    all.push_back(e);
                } else if (cert) {
                    os << "yes";
                    for (const auto& p : cert->paths) {
                        os << " ";
                        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "-" : "") << p[i];
                    }
                    os << "\n";
                } else {
                    os << "no\n";
                }
            }
            if (as_json) emit_json(os, {{"schema", "lfstab.contains/1"}, {"forest", to_string(f)}, {"graphs", all}});
            return kExitClean;
        }

        if (classify_cmd->parsed()) {
            const LinearForest f = parse_forest(forest);
            json all = json::array();
            bool violated = false;
            for (const Graph& g : read_graphs(stream_input)) {
                const Verdict v = classify(f, g);
                if (const auto* x = std::get_if<Violation>(&v.value)) violated = violated || !x->below_threshold;
                if (as_json)
                    all.push_back(json::parse(to_json(v, f, g)));
                else
                    os << write_graph6(g) << " " << to_text(v, f, g);
            }
            if (as_json) emit_json(os, all);
            return violated ? kExitViolations : kExitClean;
        }

        if (sweep->parsed() || lemma->parsed()) {
            SweepOptions opt;
            opt.jobs = common.jobs;
            NRange range{0, kMaxOrder};
            if (n_opt)
                range = {*n_opt, *n_opt};
            else if (!range_text.empty())
                range = parse_range(range_text);
            else if (input.empty())
                throw Error(ErrorCode::BadParams, "give --n, --range or --input");
            if (!input.empty()) opt.input = input;
            SweepReport r;
            if (sweep->parsed()) {
                std::string t;
                for (char c : theorem) t.push_back(c == '-' ? '_' : static_cast<char>(std::tolower(c)));
                if (t == "eg_edge_bound" || t == "eg") {
                    r = eg_edge_bound_check(range, opt);
                } else {
                    if (forest.empty()) throw Error(ErrorCode::BadParams, "--forest is required");
                    r = sweep_theorem(parse_theorem(theorem), parse_forest(forest), range, opt);
                }
            } else {
                r = verify_lemma(parse_lemma(lemma_id), range, opt,
                                 hs_text.empty() ? std::vector<int>{} : parse_int_list(hs_text));
            }
            os << (as_json ? to_json(r) + "\n" : to_text(r));
            return r.clean() ? kExitClean : kExitViolations;
        }

        if (turan->parsed()) {
            const TuranResult r = turan_search(parse_forest(forest), n_value, connected, common.jobs);
            os << (as_json ? to_json(r) + "\n" : to_text(r));
            return kExitClean;
        }

        if (sharpness->parsed()) {
            std::vector<SharpnessCase> cases;
            if (sharp_case == "all") {
                if (sharp_param || n_opt) throw Error(ErrorCode::BadParams, "--param and --n need a single case");
                cases = {SharpnessCase::Remark1a, SharpnessCase::Remark1b, SharpnessCase::Remark2a,
                         SharpnessCase::Remark2b};
            } else {
                cases = {parse_sharpness(sharp_case)};
            }
            json all = json::array();
            bool ok = true;
            for (SharpnessCase c : cases) {
                const SharpnessReport r = sharpness_demo(c, sharp_param, n_opt);
                ok = ok && r.certified;
                if (as_json)
                    all.push_back(json::parse(to_json(r)));
                else
                    os << to_text(r);
            }
            if (as_json) emit_json(os, cases.size() == 1 ? all[0] : all);
            return ok ? kExitClean : kExitViolations;
        }

        if (enumerate->parsed()) {
            const EnumFilter f{n_value, min_deg, parse_connectivity(conn_text)};
            if (count_only) {
                const std::uint64_t c = count_graphs(f, common.jobs);
                if (as_json)
                    emit_json(os, {{"schema", "lfstab.count/1"},
                                   {"n", n_value},
                                   {"min_degree", min_deg},
                                   {"connectivity", std::string(to_string(f.connectivity))},
                                   {"count", c}});
                else
                    os << c << "\n";
            } else if (as_json) {
                json list = json::array();
                enumerate_graphs(f, [&](const Graph& g) { list.push_back(write_graph6(g)); }, common.jobs);
                emit_json(os, {{"schema", "lfstab.graphs/1"}, {"n", n_value}, {"graphs", list}});
            } else {
                enumerate_graphs(f, [&](const Graph& g) { os << write_graph6(g) << "\n"; }, common.jobs);
            }
            return kExitClean;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
