#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "greenseq/dot.hpp"
#include "greenseq/errors.hpp"
#include "greenseq/json_io.hpp"
#include "greenseq/polygon.hpp"
#include "greenseq/presets.hpp"
#include "greenseq/search.hpp"
#include "greenseq/tame.hpp"

namespace {

using namespace greenseq;
using nlohmann::json;

/* Shared per-subcommand settings. */
struct RunCfg {
    std::string file;
    std::string preset_name;
    int max_depth = 0; /* 0: default 4 n^2 */
    long max_count = 1'000'000;
    bool stability = false;
    bool serial = false;
    std::string format = "text";
    std::string out_path;
};

void add_input_opts(CLI::App* cmd, RunCfg& cfg) {
    cmd->add_option("file", cfg.file, "quiver JSON file ('-' for stdin)");
    cmd->add_option("--preset", cfg.preset_name, "use a built-in quiver instead of a file");
}

void add_run_opts(CLI::App* cmd, RunCfg& cfg) {
    cmd->add_option("--max-depth", cfg.max_depth, "search depth bound (default 4n^2)");
    cmd->add_option("--max-count", cfg.max_count, "cap on stored sequences (default 1000000)");
    cmd->add_flag("--stability-check", cfg.stability, "re-run at doubled depth and compare");
    cmd->add_flag("--serial", cfg.serial, "force the serial reference engine");
    cmd->add_option("--format", cfg.format, "text|json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", cfg.out_path, "write the report to a file instead of stdout");
}

QuiverFile resolve_input(const RunCfg& cfg) {
    if (!cfg.preset_name.empty() && !cfg.file.empty())
        throw InvalidInput("give either a file or --preset, not both");
    if (!cfg.preset_name.empty()) return preset(cfg.preset_name);
    if (cfg.file.empty()) throw InvalidInput("no input: give a quiver JSON file or --preset");
    if (cfg.file == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_quiver_json(buf.str());
    }
    return load_quiver_file(cfg.file);
}

int effective_depth(const RunCfg& cfg, int n) {
    if (cfg.max_depth == 0) return 4 * n * n;
    if (cfg.max_depth < n)
        throw InvalidInput("--max-depth must be at least the rank n = " + std::to_string(n));
    return cfg.max_depth;
}

void emit(const RunCfg& cfg, const std::string& body) {
    if (cfg.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + cfg.out_path + "'");
    out << body;
    if (!out.good()) throw InvalidInput("write failed for '" + cfg.out_path + "'");
}

std::string seq_str(const std::vector<MutationIndex>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string dvec_str(const std::vector<i64>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::vector<std::vector<i64>> mat_rows(const Mat& m) {
    std::vector<std::vector<i64>> rows;
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

json hist_json(const std::map<int, long>& hist) {
    json j = json::object();
    for (const auto& [len, cnt] : hist) j[std::to_string(len)] = cnt;
    return j;
}

json mgs_json(const SearchReport& rep) {
    json list = json::array();
    for (const Mgs& m : rep.mgs) list.push_back(m.indices);
    return list;
}

std::string hist_str(const std::map<int, long>& hist) {
    std::string s;
    for (const auto& [len, cnt] : hist) s += " " + std::to_string(len) + ":" + std::to_string(cnt);
    return s;
}

/* Runs the enumeration.  The doubled-depth comparison runs when
 * --stability-check asks for it, or when a verdict verb needs a settled MGS
 * set and the single run truncated (affine quivers never exhaust: they carry
 * infinite green paths).  stable_out is set only when the comparison ran. */
SearchReport run_search(const QuiverFile& qf, const RunCfg& cfg, int depth, bool auto_certify,
                        std::optional<bool>* stable_out) {
    bool parallel = !cfg.serial;
    *stable_out = std::nullopt;
    if (!cfg.stability) {
        SearchReport rep = enumerate_mgs(qf.spec, depth, parallel, cfg.max_count);
        if (!auto_certify || rep.complete) return rep;
    }
    StabilityResult st = enumerate_mgs_with_stability(qf.spec, depth, parallel, cfg.max_count);
    *stable_out = st.stable;
    return std::move(st.base);
}

int cmd_enum(const RunCfg& cfg) {
    QuiverFile qf = resolve_input(cfg);
    int depth = effective_depth(cfg, qf.spec.n);
    std::optional<bool> stable;
    SearchReport rep = run_search(qf, cfg, depth, /*auto_certify=*/false, &stable);

    std::ostringstream body;
    if (cfg.format == "json") {
        json j;
        j["n"] = qf.spec.n;
        j["d"] = qf.spec.d;
        j["b0"] = mat_rows(qf.spec.b0);
        j["max_depth"] = rep.max_depth;
        j["complete"] = rep.complete;
        j["certified"] = rep.mgs_certified;
        j["truncated_branches"] = rep.truncated_branches;
        j["mgs_total"] = rep.mgs_total;
        j["overflow"] = rep.overflow;
        j["lengths"] = hist_json(rep.length_hist);
        if (stable) j["stable"] = *stable;
        j["mgs"] = mgs_json(rep);
        body << j.dump(2) << "\n";
    } else {
        body << "n: " << qf.spec.n << "\n";
        body << "d: " << dvec_str(qf.spec.d) << "\n";
        body << "b0: " << qf.spec.b0.to_string() << "\n";
        body << "max-depth: " << rep.max_depth << "\n";
        body << "complete: " << (rep.complete ? "yes" : "no") << "\n";
        body << "truncated-branches: " << rep.truncated_branches << "\n";
        body << "mgs-total: " << rep.mgs_total << "\n";
        body << "stored: " << rep.mgs.size() << "\n";
        body << "lengths:" << hist_str(rep.length_hist) << "\n";
        if (stable) body << "stable: " << (*stable ? "yes" : "no") << "\n";
        body << "mgs:\n";
        for (const Mgs& m : rep.mgs) body << seq_str(m.indices) << "\n";
    }
    emit(cfg, body.str());
    return stable && !*stable ? 3 : 0;
}

int cmd_nogap(const RunCfg& cfg) {
    QuiverFile qf = resolve_input(cfg);
    int depth = effective_depth(cfg, qf.spec.n);
    std::optional<bool> stable;
    SearchReport rep = run_search(qf, cfg, depth, /*auto_certify=*/true, &stable);
    bool ok = no_gap(rep); /* throws IncompleteSearch on an unsettled set */

    std::ostringstream body;
    if (cfg.format == "json") {
        json j;
        json lens = json::array();
        for (const auto& [len, cnt] : rep.length_hist) lens.push_back(len);
        j["lengths"] = lens;
        j["no_gap"] = ok;
        body << j.dump(2) << "\n";
    } else {
        body << "lengths: {";
        bool first = true;
        for (const auto& [len, cnt] : rep.length_hist) {
            if (!first) body << ",";
            body << len;
            first = false;
        }
        body << "}\n";
        body << "no-gap: " << (ok ? "yes" : "no") << "\n";
    }
    emit(cfg, body.str());
    return ok ? 0 : 2;
}

int cmd_classes(const RunCfg& cfg) {
    QuiverFile qf = resolve_input(cfg);
    int depth = effective_depth(cfg, qf.spec.n);
    std::optional<bool> stable;
    SearchReport rep = run_search(qf, cfg, depth, /*auto_certify=*/true, &stable);
    ClassPartition part = deformation_classes(rep); /* throws IncompleteSearch */

    std::ostringstream body;
    if (cfg.format == "json") {
        json j;
        j["mgs_total"] = rep.mgs_total;
        j["count"] = part.classes.size();
        j["classes"] = part.classes;
        json reps = json::array();
        for (const auto& r : part.representatives) reps.push_back(r);
        j["representatives"] = reps;
        body << j.dump(2) << "\n";
    } else {
        body << "mgs-total: " << rep.mgs_total << "\n";
        body << "classes: " << part.classes.size() << "\n";
        for (size_t i = 0; i < part.classes.size(); ++i)
            body << "class " << i + 1 << ": size " << part.classes[i].size()
                 << " representative " << seq_str(part.representatives[i]) << "\n";
    }
    emit(cfg, body.str());
    return part.classes.size() == 1 ? 0 : 2;
}

int cmd_regular(const RunCfg& cfg) {
    QuiverFile qf = resolve_input(cfg);
    EulerData ed = euler_for(qf);
    TameData td = compute_tame_data(ed); /* throws NotTame */
    int depth = effective_depth(cfg, qf.spec.n);
    std::optional<bool> stable;
    SearchReport rep = run_search(qf, cfg, depth, /*auto_certify=*/true, &stable);
    bool settled = mgs_set_settled(rep) && !rep.overflow;

    RegularClusterGraph rg = regular_cluster_graph(td, ed, rep, /*require_complete=*/settled);
    int max_reg = 0;
    long passing = 0;
    std::vector<int> first_regular; /* trail position of first regular seed, -1 if none */
    for (const Mgs& m : rep.mgs) {
        int first = -1;
        for (size_t t = 0; t < m.trail.size(); ++t) {
            const Seed& s = m.trail[t];
            int r = regular_component_count(td, ed, s);
            if (r > max_reg) max_reg = r;
            if (first < 0 && is_regular_cluster(td, ed, s)) first = static_cast<int>(t);
        }
        first_regular.push_back(first);
        if (first >= 0) ++passing;
    }
    bool all_pass = passing == static_cast<long>(rep.mgs.size());
    bool verdict = all_pass && rg.connected;

    std::ostringstream body;
    if (cfg.format == "json") {
        json j;
        j["eta"] = td.eta;
        j["complete"] = rep.complete;
        j["certified"] = rep.mgs_certified;
        j["settled"] = settled;
        j["mgs_total"] = rep.mgs_total;
        json clusters = json::array();
        for (const CanonicalSeed& cs : rg.nodes) clusters.push_back(mat_rows(cs.seed.c));
        j["regular_clusters"] = clusters;
        j["max_regular_components"] = max_reg;
        j["mgs_passing_regular"] = passing;
        j["first_regular"] = first_regular;
        j["connected"] = rg.connected;
        body << j.dump(2) << "\n";
    } else {
        if (!settled)
            body << "warning: enumeration incomplete at depth " << rep.max_depth
                 << "; verdicts cover discovered sequences only\n";
        else if (!rep.complete)
            body << "note: branch search truncated at depth " << rep.max_depth
                 << "; sequence set certified stable at doubled depth\n";
        body << "eta: " << dvec_str(td.eta) << "\n";
        body << "mgs-total: " << rep.mgs_total << "\n";
        body << "regular-clusters: " << rg.nodes.size() << "\n";
        for (size_t i = 0; i < rg.nodes.size(); ++i)
            body << "cluster " << i + 1 << ": " << rg.nodes[i].seed.c.to_string() << "\n";
        body << "max-regular-components: " << max_reg << "\n";
        body << "mgs-passing-regular: " << passing << " of " << rep.mgs.size() << "\n";
        body << "connected: " << (rg.connected ? "yes" : "no") << "\n";
        body << "first-regular:\n";
        for (size_t i = 0; i < rep.mgs.size(); ++i)
            body << seq_str(rep.mgs[i].indices) << ": " << first_regular[i] << "\n";
    }
    emit(cfg, body.str());
    if (!verdict) return 2;
    return settled ? 0 : 3;
}

int cmd_graph(const RunCfg& cfg) {
    QuiverFile qf = resolve_input(cfg);
    int depth = effective_depth(cfg, qf.spec.n);
    std::optional<bool> stable;
    SearchReport rep = run_search(qf, cfg, depth, /*auto_certify=*/false, &stable);
    ExchangeGraph g = export_exchange_graph(rep);

    /* Regular tagging is best-effort: skipped for finite/wild/cyclic inputs. */
    std::optional<EulerData> ed;
    std::optional<TameData> td;
    try {
        ed = euler_for(qf);
        td = compute_tame_data(*ed);
    } catch (const Error&) {
        ed.reset();
        td.reset();
    }
    std::string dot = to_dot(g, ed ? &*ed : nullptr, td ? &*td : nullptr);
    emit(cfg, dot);
    return 0;
}

int cmd_preset_emit(const std::string& name, const RunCfg& cfg) {
    emit(cfg, quiver_to_json(preset(name)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal green sequences of valued quivers: enumeration, "
                 "polygonal deformation classes, affine-type structure checks"};
    app.require_subcommand(1);

    RunCfg cfg;
    std::string preset_arg;

    CLI::App* c_enum = app.add_subcommand("enum", "enumerate maximal green sequences");
    add_input_opts(c_enum, cfg);
    add_run_opts(c_enum, cfg);

    CLI::App* c_nogap = app.add_subcommand("nogap", "check that the length set has no gap");
    add_input_opts(c_nogap, cfg);
    add_run_opts(c_nogap, cfg);

    CLI::App* c_classes = app.add_subcommand("classes", "polygonal deformation classes");
    add_input_opts(c_classes, cfg);
    add_run_opts(c_classes, cfg);

    CLI::App* c_regular = app.add_subcommand("regular", "regular-cluster structure (tame inputs)");
    add_input_opts(c_regular, cfg);
    add_run_opts(c_regular, cfg);

    CLI::App* c_graph = app.add_subcommand("graph", "export the oriented exchange graph as DOT");
    add_input_opts(c_graph, cfg);
    add_run_opts(c_graph, cfg);

    CLI::App* c_preset = app.add_subcommand("preset", "emit a built-in quiver as JSON");
    c_preset->add_option("name", preset_arg, "one of: A(n), C2-paper, B2, G2, kronecker, Atilde(p,q)")
        ->required();
    c_preset->add_option("--out", cfg.out_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (c_enum->parsed()) return cmd_enum(cfg);
        if (c_nogap->parsed()) return cmd_nogap(cfg);
        if (c_classes->parsed()) return cmd_classes(cfg);
        if (c_regular->parsed()) return cmd_regular(cfg);
        if (c_graph->parsed()) return cmd_graph(cfg);
        if (c_preset->parsed()) return cmd_preset_emit(preset_arg, cfg);
    } catch (const InvalidInput& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const IncompleteSearch& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const NotTame& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 4;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
