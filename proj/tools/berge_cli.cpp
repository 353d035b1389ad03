#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "berge/berge_search.hpp"
#include "berge/bounds.hpp"
#include "berge/cliques.hpp"
#include "berge/connectivity.hpp"
#include "berge/constructions.hpp"
#include "berge/cores.hpp"
#include "berge/enumerate.hpp"
#include "berge/shrink.hpp"
#include "berge/verify.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;   // a checked property or theorem failed
constexpr int kExitUsage = 2;     // bad flags, bad file, out-of-domain

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string sidecar_path(const std::string& out) {
    auto dot = out.rfind(".json");
    if (dot != std::string::npos && dot == out.size() - 5)
        return out.substr(0, dot) + ".partition.json";
    return out + ".partition.json";
}

std::string partition_json(const berge::Partition& p) {
    nlohmann::json j;
    j["partition"] = nlohmann::json::object();
    for (const auto& [name, verts] : p) j["partition"][name] = verts;
    return j.dump() + "\n";
}

berge::Hypergraph load_input(const std::string& path) {
    berge::RawHypergraph raw = berge::raw_from_json(read_file(path));
    berge::ValidationReport rep = berge::validate(raw);
    if (!rep.valid) {
        for (const std::string& issue : rep.issues) std::cerr << "invalid input: " << issue << "\n";
        throw CLI::RuntimeError(kExitUsage);
    }
    return berge::Hypergraph::from_raw(raw);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berge-cycle extremal toolkit"};
    app.require_subcommand(1);

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build an extremal family");
    std::string family;
    int c_n = 0, c_k = 0, c_r = 0, c_a = 0, c_s = 0;
    std::string c_out;
    construct->add_option("family", family, "hnka | hcal | fnkrs")->required();
    construct->add_option("--n", c_n);
    construct->add_option("--k", c_k);
    construct->add_option("--r", c_r);
    construct->add_option("--a", c_a);
    construct->add_option("--s", c_s);
    construct->add_option("--out", c_out)->required();
    construct->callback([&] {
        berge::Partition part;
        std::string payload;
        if (family == "hnka") {
            berge::Graph g = berge::build_hnka(c_n, c_k, c_a, &part);
            payload = berge::graph_to_json(g);
        } else if (family == "hcal") {
            payload = berge::to_json(berge::build_hcal(c_n, c_k, c_r, c_a, &part));
        } else if (family == "fnkrs") {
            payload = berge::to_json(berge::build_fnkrs(c_k, c_r, c_s, &part));
        } else {
            std::cerr << "unknown family " << family << "\n";
            throw CLI::RuntimeError(kExitUsage);
        }
        write_file(c_out, payload);
        write_file(sidecar_path(c_out), partition_json(part));
    });

    // ---- check ----
    auto* check = app.add_subcommand("check", "validate a file and test predicates");
    std::string in_path;
    bool want_sperner = false, want_2conn = false, want_happy = false, want_conn = false;
    check->add_option("--in", in_path)->required();
    check->add_flag("--sperner", want_sperner);
    check->add_flag("--two-connected", want_2conn);
    check->add_flag("--happy", want_happy);
    check->add_flag("--connected", want_conn);
    check->callback([&] {
        berge::Hypergraph h = load_input(in_path);
        bool all_ok = true;
        auto report = [&](const char* name, bool value) {
            std::cout << name << ": " << (value ? "yes" : "no") << "\n";
            all_ok = all_ok && value;
        };
        if (want_sperner) report("sperner", berge::is_sperner(h));
        if (want_2conn) report("two-connected", berge::is_2connected(h));
        if (want_happy) report("happy", berge::is_happy(h));
        if (want_conn) report("connected", berge::is_connected_hypergraph(h));
        if (!all_ok) throw CLI::RuntimeError(kExitFinding);
    });

    // ---- search ----
    auto* search = app.add_subcommand("search", "longest Berge cycle or path");
    std::string s_in, s_mode = "cycle", s_witness_out;
    std::optional<int> s_cutoff;
    int s_cutoff_raw = 0;
    search->add_option("--in", s_in)->required();
    search->add_option("--mode", s_mode, "cycle | path");
    auto* cutopt = search->add_option("--cutoff", s_cutoff_raw);
    search->add_option("--witness-out", s_witness_out);
    search->callback([&] {
        berge::Hypergraph h = load_input(s_in);
        if (cutopt->count()) s_cutoff = s_cutoff_raw;
        berge::SearchOutcome out;
        if (s_mode == "cycle")
            out = berge::circumference(h, s_cutoff);
        else if (s_mode == "path")
            out = berge::longest_berge_path(h, s_cutoff);
        else {
            std::cerr << "mode must be cycle or path\n";
            throw CLI::RuntimeError(kExitUsage);
        }
        std::cout << s_mode << " length" << (out.reached_cutoff ? " >= " : " = ") << out.length
                  << "\n";
        if (out.witness && !berge::validate_witness(h, *out.witness))
            throw CLI::RuntimeError(kExitFinding);
        if (!s_witness_out.empty() && out.witness)
            write_file(s_witness_out, berge::witness_to_json(h, *out.witness));
    });

    // ---- core ----
    auto* core = app.add_subcommand("core", "disintegration / structure dichotomy");
    std::string core_in;
    int core_alpha = -1, core_k = -1;
    core->add_option("--in", core_in)->required();
    auto* alpha_opt = core->add_option("--alpha", core_alpha);
    auto* k_opt = core->add_option("--k", core_k);
    core->callback([&] {
        berge::Graph g = berge::graph_from_hypergraph(load_input(core_in));
        if (alpha_opt->count()) {
            berge::DisintegrationTrace tr = berge::disintegrate(g, core_alpha);
            std::cout << "removed " << tr.removal_order.size() << " vertices, core size "
                      << berge::set_size(tr.core) << "\n";
            for (auto [v, d] : tr.removal_order)
                std::cout << "remove " << v << " at degree " << d << "\n";
            std::cout << "core:";
            berge::for_each_bit(tr.core, [&](int v) { std::cout << ' ' << v; });
            std::cout << "\n";
        } else if (k_opt->count()) {
            berge::KopylovReport rep = berge::kopylov_case(g, core_k);
            switch (rep.kind) {
                case berge::KopylovCase::Disintegrable:
                    std::cout << "case disintegrable (t = " << rep.t << ")\n";
                    break;
                case berge::KopylovCase::Core:
                    std::cout << "case core: s = " << rep.s << ", cores equal\n";
                    break;
                case berge::KopylovCase::OutOfScope:
                    std::cout << "out of scope: " << rep.note << "\n";
                    throw CLI::RuntimeError(kExitUsage);
                case berge::KopylovCase::TheoremViolation:
                    std::cout << "THEOREM VIOLATION: " << rep.note << "\n";
                    throw CLI::RuntimeError(kExitFinding);
            }
        } else {
            std::cerr << "core needs --alpha or --k\n";
            throw CLI::RuntimeError(kExitUsage);
        }
    });

    // ---- reduce ----
    auto* reduce = app.add_subcommand("reduce", "shrink to a happy hypergraph");
    std::string red_in, red_trace;
    int red_k = 0;
    reduce->add_option("--in", red_in)->required();
    reduce->add_option("--k", red_k)->required();
    reduce->add_option("--trace-out", red_trace);
    reduce->callback([&] {
        berge::Hypergraph h = load_input(red_in);
        berge::ShrinkTrace tr;
        try {
            tr = berge::reduce_to_happy(h, red_k);
        } catch (const std::invalid_argument& e) {
            std::cerr << "precondition: " << e.what() << "\n";
            throw CLI::RuntimeError(kExitUsage);
        }
        std::cout << "steps: " << tr.steps.size() << "\n";
        for (const berge::ShrinkStep& st : tr.steps)
            std::cout << berge::kind_name(st.params.kind) << ": " << st.before.vertices << "/"
                      << st.before.edges << "/" << st.before.size_sum << " -> "
                      << st.after.vertices << "/" << st.after.edges << "/" << st.after.size_sum
                      << "\n";
        bool happy_end = tr.terminal == berge::StepOutcome::Status::AlreadyHappy;
        std::cout << "terminal: "
                  << (happy_end ? "happy"
                                : tr.terminal == berge::StepOutcome::Status::StuckWithBlocks
                                      ? "stuck-with-blocks"
                                      : "stuck-no-blocks")
                  << "\n";
        if (!red_trace.empty()) write_file(red_trace, berge::trace_to_json(tr));
        if (!happy_end || !tr.audit.all_ok()) throw CLI::RuntimeError(kExitFinding);
    });

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "bound functions as CSV");
    int b_n = 0, b_k = 0, b_r = 0, b_a = 0;
    std::string b_report;
    bounds->add_option("--n", b_n)->required();
    bounds->add_option("--k", b_k)->required();
    bounds->add_option("--r", b_r)->required();
    bounds->add_option("--a", b_a)->required();
    bounds->add_option("--report", b_report);
    bounds->callback([&] {
        std::ostringstream row;
        try {
            row << "n,k,r,a,f,fstar,cycle_bound,path_bound\n"
                << b_n << ',' << b_k << ',' << b_r << ',' << b_a << ','
                << berge::bound_f(b_n, b_k, b_r, b_a) << ','
                << berge::bound_fstar(b_n, b_k, b_r, b_a) << ','
                << berge::main_cycle_bound(b_n, b_k, b_r) << ','
                << berge::main_path_bound(b_n, b_k, b_r) << "\n";
        } catch (const std::invalid_argument& e) {
            std::cerr << "domain: " << e.what() << "\n";
            throw CLI::RuntimeError(kExitUsage);
        }
        std::cout << row.str();
        if (!b_report.empty()) write_file(b_report, row.str());
    });

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "exhaustive extremal search");
    int e_n = 0, e_r = 3, e_k = 0, e_workers = 1, e_cap = berge::default_enumeration_cap();
    std::string e_mode = "cycle", e_out;
    enumerate->add_option("--n", e_n)->required();
    enumerate->add_option("--r", e_r)->required();
    enumerate->add_option("--k", e_k)->required();
    enumerate->add_option("--mode", e_mode, "cycle | path");
    enumerate->add_option("--workers", e_workers);
    enumerate->add_option("--cap", e_cap);
    enumerate->add_option("--out", e_out, "argmax instance JSON");
    enumerate->callback([&] {
        berge::SearchSpace space;
        space.n = e_n;
        space.r = e_r;
        space.sperner = true;
        space.cap = e_cap;
        if (e_mode == "cycle") {
            space.two_connected = true;
            space.no_cycle_geq = e_k;
        } else if (e_mode == "path") {
            space.connected = true;
            space.no_path_geq = e_k;
        } else {
            std::cerr << "mode must be cycle or path\n";
            throw CLI::RuntimeError(kExitUsage);
        }
        berge::ExtremalResult res;
        try {
            res = berge::extremal_number(space, e_workers);
        } catch (const std::invalid_argument& e) {
            std::cerr << e.what() << "\n";
            throw CLI::RuntimeError(kExitUsage);
        }
        std::cout << "extremal " << res.max_edges << " over " << res.stats.emitted
                  << " instances (" << res.stats.leaves << " leaves, "
                  << res.stats.pruned_subsets << " pruned)\n";
        if (!e_out.empty() && res.argmax) write_file(e_out, berge::to_json(*res.argmax));
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "theorem verification harness");
    std::string v_theorem, v_k = "", v_r = "3", v_report;
    int v_nmax = 5, v_count = 100, v_workers = 1, v_cap = berge::default_enumeration_cap();
    unsigned v_seed = 1;
    verify->add_option("--theorem", v_theorem)->required();
    verify->add_option("--nmax", v_nmax);
    verify->add_option("--k", v_k, "comma-separated");
    verify->add_option("--r", v_r, "comma-separated");
    verify->add_option("--count", v_count);
    verify->add_option("--seed", v_seed);
    verify->add_option("--workers", v_workers);
    verify->add_option("--cap", v_cap);
    verify->add_option("--report", v_report);
    verify->callback([&] {
        berge::VerifyOptions opt;
        opt.nmax = v_nmax;
        opt.ks = v_k.empty() ? std::vector<int>{} : parse_int_list(v_k);
        opt.rs = parse_int_list(v_r);
        bool needs_k = v_theorem == "main2conn" || v_theorem == "mainpaths" ||
                       v_theorem == "nsp" || v_theorem == "kopylov" || v_theorem == "kpath" ||
                       v_theorem == "pathcomp";
        if (needs_k && opt.ks.empty()) {
            std::cerr << v_theorem << " needs --k (no silent defaults for grid parameters)\n";
            throw CLI::RuntimeError(kExitUsage);
        }
        opt.count = v_count;
        opt.seed = v_seed;
        opt.workers = v_workers;
        opt.cap = v_cap;
        berge::VerificationReport rep;
        try {
            rep = berge::verify_theorem(v_theorem, opt);
        } catch (const std::invalid_argument& e) {
            std::cerr << e.what() << "\n";
            throw CLI::RuntimeError(kExitUsage);
        }
        std::string csv = berge::report_to_csv(rep);
        std::cout << csv;
        if (!v_report.empty()) write_file(v_report, csv);
        for (size_t i = 0; i < rep.witnesses.size(); ++i) {
            std::string path = (v_report.empty() ? std::string("witness") :
                                                   v_report + ".witness") +
                               std::to_string(i) + ".json";
            write_file(path, rep.witnesses[i]);
            std::cout << "witness written: " << path << "\n";
        }
        if (rep.failures > 0) throw CLI::RuntimeError(kExitFinding);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::RuntimeError& e) {
        return e.get_exit_code();
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
