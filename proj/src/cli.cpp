#include "uniserial/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"

#include "uniserial/clebsch.hpp"
#include "uniserial/errors.hpp"
#include "uniserial/factorize.hpp"
#include "uniserial/socle.hpp"
#include "uniserial/theory.hpp"

namespace uniserial {

namespace {

// UNISERIAL_MAX_DIM bounds the tensor dimension handed to the exact solver;
// values <= 0 lift the cap.
int max_dim_cap() {
    const char* s = std::getenv("UNISERIAL_MAX_DIM");
    if (!s || !*s) return 5000;
    try {
        return std::max(0, std::stoi(s));
    } catch (...) {
        return 5000;
    }
}

bool parse_int(const std::string& tok, int& v) {
    try {
        size_t used = 0;
        v = std::stoi(tok, &used);
        return used == tok.size();
    } catch (...) {
        return false;
    }
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

void print_report_text(const SocleReport& r, std::ostream& out) {
    out << "socle: " << join_ints(r.socle, " ") << "\n";
    if (r.graded)
        for (const auto& [t, ws] : *r.graded)
            out << "graded " << t << ": " << join_ints(ws, " ") << "\n";
    if (r.series)
        for (size_t k = 0; k < r.series->size(); ++k)
            out << "series " << k << ": " << join_ints((*r.series)[k], " ") << "\n";
    if (r.agreement) out << "agreement: " << (*r.agreement ? "true" : "false") << "\n";
}

} // namespace

int cmd_cg(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.size() != 6) {
        err << "cg expects six doubled integers: 2j1 2m1 2j2 2m2 2j3 2m3\n";
        return exit_usage;
    }
    int tw[6];
    for (int i = 0; i < 6; ++i)
        if (!parse_int(args[(size_t)i], tw[i])) {
            err << "cg: not an integer: " << args[(size_t)i] << "\n";
            return exit_usage;
        }
    Surd c = cg(HalfInt(tw[0]), HalfInt(tw[1]), HalfInt(tw[2]),
                HalfInt(tw[3]), HalfInt(tw[4]), HalfInt(tw[5]));
    out << to_string(c) << "\n";
    return exit_ok;
}

int cmd_soc(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    UniserialSpec ls = parse_spec(cfg.specs[0], cfg.m);
    UniserialSpec rs = parse_spec(cfg.specs[1], cfg.m);

    SocleReport rep;
    rep.m = cfg.m;
    rep.left_spec = ls.str();
    rep.right_spec = rs.str();
    rep.method = cfg.method;

    std::optional<SocPrediction> pred;
    std::optional<std::vector<std::vector<int>>> pred_series;
    if (cfg.method != "oracle") {
        ZTypeSpec L = ztype_of(ls), R = ztype_of(rs);
        pred = soc_closed(L, R);
        if (cfg.series) pred_series = soc_series_closed(L, R);
    }

    if (cfg.method == "closed") {
        rep.socle = pred->total;
        if (cfg.graded) rep.graded = pred->graded;
        if (pred_series) rep.series = *pred_series;
    } else {
        TensorModule T = tensor(build(ls), build(rs), max_dim_cap());
        rep.socle = socle_of(T).weights;
        if (cfg.graded) {
            std::map<int, std::vector<int>> g;
            for (const auto& [t, sr] : graded_socle(T)) g[t] = sr.weights;
            rep.graded = g;
        }
        if (cfg.series) rep.series = socle_series(T);
        if (cfg.method == "both") {
            bool agree = rep.socle == pred->total;
            if (cfg.graded) agree = agree && *rep.graded == pred->graded;
            if (cfg.series && pred_series) agree = agree && *rep.series == *pred_series;
            rep.agreement = agree;
        }
    }

    if (cfg.output == "text") print_report_text(rep, out);
    else out << report_json(rep) << "\n";

    if (rep.agreement && !*rep.agreement) {
        err << "oracle and closed form disagree for " << rep.left_spec << " (x) "
            << rep.right_spec << " at m=" << cfg.m << "\n";
        return exit_disagreement;
    }
    return exit_ok;
}

int cmd_hom(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    ZTypeSpec from = ztype_of(parse_spec(cfg.specs[0], cfg.m));
    ZTypeSpec to = ztype_of(parse_spec(cfg.specs[1], cfg.m));
    int dim = cfg.invariants ? invariants_dim(from, to) : hom_dim(from, to);
    if (cfg.output == "json") {
        nlohmann::json j;
        j["m"] = cfg.m;
        j["from"] = from.str();
        j["to"] = to.str();
        j["invariants"] = cfg.invariants;
        j["dim"] = dim;
        out << j.dump() << "\n";
    } else {
        out << dim << "\n";
    }
    return exit_ok;
}

int cmd_factorize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    SocleSignature sig;
    if (cfg.specs.size() == 2) {
        TensorModule T = tensor(build(cfg.specs[0], cfg.m), build(cfg.specs[1], cfg.m),
                                max_dim_cap());
        sig = signature_of(T);
    } else if (!cfg.soc.empty() && !cfg.soc_dual.empty()) {
        sig.m = cfg.m;
        sig.lambda = cfg.lambda;
        sig.soc = cfg.soc;
        sig.soc_dual = cfg.soc_dual;
        std::sort(sig.soc.begin(), sig.soc.end());
        std::sort(sig.soc_dual.begin(), sig.soc_dual.end());
    } else {
        err << "factorize needs either --left and --right, or --soc, --soc-dual and --lambda\n";
        return exit_usage;
    }

    FactorizationResult r;
    try {
        r = recover(sig);
    } catch (const AmbiguousM2& e) {
        out << e.what() << "\n";
        return exit_ambiguous;
    }

    if (cfg.output == "json") {
        nlohmann::json j;
        j["m"] = sig.m;
        j["lambda"] = sig.lambda;
        j["soc"] = sig.soc;
        j["soc_dual"] = sig.soc_dual;
        j["case"] = r.case_id;
        j["left"] = r.left.str();
        j["right"] = r.right.str();
        j["split"] = {{"a2", r.a2}, {"am", r.am}, {"a2_dual", r.a2_dual}, {"am_dual", r.am_dual}};
        out << j.dump() << "\n";
    } else {
        out << r.left.str() << " ⊗ " << r.right.str() << "\n";
    }
    return exit_ok;
}

namespace {

struct S1Row {
    int a = 0, b = 0, c = 0, d = 0;
    std::vector<int> oracle;
    std::optional<int> conj;
    bool boundary = false;
    bool skip = false;
    bool match() const { return conj ? oracle == std::vector<int>{*conj} : oracle.empty(); }
};

// All length-2 modules with both layer weights <= max, keyed socle-first.
std::vector<std::pair<std::pair<int, int>, UniserialSpec>> two_layer_specs(int m, int max) {
    std::vector<std::pair<std::pair<int, int>, UniserialSpec>> out;
    for (int x = 0; x <= max; ++x)
        for (int y = 0; y <= max; ++y) {
            UniserialSpec s;
            if (y == x + m) s = spec_z(m, x, 1);
            else if (x == y + m) s = spec_zdual(m, y, 1);
            else {
                try {
                    s = spec_e(m, x, y);
                } catch (const SpecInvalid&) {
                    continue;
                }
            }
            out.push_back({{x, y}, s});
        }
    std::sort(out.begin(), out.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    return out;
}

} // namespace

int cmd_explore(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto mods = two_layer_specs(cfg.m, cfg.max_param);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < mods.size(); ++i)
        for (size_t j = 0; j < mods.size(); ++j) pairs.push_back({i, j});

    const int cap = max_dim_cap();
    std::vector<S1Row> rows(pairs.size());
    std::exception_ptr fail = nullptr;
    std::mutex fail_mu;

    auto make_row = [&](size_t idx) {
        const auto& [pi, pj] = pairs[idx];
        S1Row& row = rows[idx];
        std::tie(row.a, row.b) = mods[pi].first;
        std::tie(row.c, row.d) = mods[pj].first;
        std::optional<S1Conjecture> conj;
        try {
            conj = s1_conjecture(mods[pi].second, mods[pj].second);
        } catch (const OrderingViolated&) {
            row.skip = true; // covered by the transposed pair
            return;
        }
        if (conj) {
            row.conj = conj->mu;
            row.boundary = conj->boundary;
        }
        TensorModule T = tensor(build(mods[pi].second), build(mods[pj].second), cap);
        auto graded = graded_socle(T);
        if (auto it = graded.find(1); it != graded.end()) row.oracle = it->second.weights;
    };
    auto work = [&](size_t start, size_t stride) {
        try {
            for (size_t i = start; i < pairs.size(); i += stride) make_row(i);
        } catch (...) {
            std::lock_guard<std::mutex> g(fail_mu);
            if (!fail) fail = std::current_exception();
        }
    };

    const size_t jobs = (size_t)std::max(1, cfg.jobs);
    if (jobs <= 1) {
        for (size_t i = 0; i < pairs.size(); ++i) make_row(i);
    } else {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w, jobs);
        for (auto& t : pool) t.join();
        if (fail) std::rethrow_exception(fail);
    }

    long total = 0, matched = 0;
    std::ostringstream csv;
    csv << "m,a,b,c,d,oracle_S1,conjecture_S1,match\n";
    for (const S1Row& r : rows) {
        if (r.skip) continue;
        ++total;
        bool ok = r.match();
        if (ok) ++matched;
        csv << cfg.m << "," << r.a << "," << r.b << "," << r.c << "," << r.d << ","
            << (r.oracle.empty() ? "-" : join_ints(r.oracle, ";")) << ","
            << (r.conj ? std::to_string(*r.conj) : "-") << ","
            << (ok ? "true" : "false") << "\n";
    }
    csv << "summary," << total << "," << matched << "," << (total - matched) << "\n";
    long boundaries = 0;
    for (const S1Row& r : rows) {
        if (r.skip || !r.boundary) continue;
        ++boundaries;
        csv << "boundary," << cfg.m << "," << r.a << "," << r.b << "," << r.c << ","
            << r.d << "," << *r.conj << "\n";
    }

    if (cfg.out_file.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(cfg.out_file);
        if (!f) {
            err << "cannot open " << cfg.out_file << "\n";
            return exit_usage;
        }
        f << csv.str();
        out << "explored " << total << " pairs: " << matched << " match, "
            << (total - matched) << " mismatch, " << boundaries << " boundary -> "
            << cfg.out_file << "\n";
    }
    return exit_ok;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact socles, homs and factorizations of uniserial sl(2)|xV(m) tensor products"};
    app.name("uniserial");
    app.require_subcommand(1);

    RunConfig cfg;

    CLI::App* cg_cmd = app.add_subcommand("cg", "one coupling coefficient <j1 m1 j2 m2 | j3 m3>,"
                                                " arguments doubled to stay integral");
    cg_cmd->prefix_command();

    std::string left, right;
    CLI::App* soc = app.add_subcommand("soc", "socle of a tensor product of two chain modules");
    soc->add_option("--m", cfg.m, "weight of the radical V(m)")->required();
    soc->add_option("--left", left, "left factor, e.g. Z:1:2, Zd:0:1, E:2:1, E3:0, E4:1/3")
        ->required();
    soc->add_option("--right", right, "right factor")->required();
    soc->add_option("--method", cfg.method, "oracle (default), closed, or both")
        ->check(CLI::IsMember({"oracle", "closed", "both"}));
    soc->add_flag("--graded", cfg.graded, "include the socle slices S_t");
    soc->add_flag("--series", cfg.series, "include the full socle series");
    soc->add_option("--output", cfg.output, "json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string from, to;
    std::string hom_output = "text";
    CLI::App* hom = app.add_subcommand("hom", "dimension of Hom(from, to), closed form");
    hom->add_option("--m", cfg.m, "weight of the radical V(m)")->required();
    hom->add_option("--from", from, "source chain module (Z:a:l or Zd:a:l)")->required();
    hom->add_option("--to", to, "target chain module")->required();
    hom->add_flag("--invariants", cfg.invariants,
                  "dimension of the invariants of from (x) to instead");
    hom->add_option("--output", hom_output, "text (default) or json")
        ->check(CLI::IsMember({"json", "text"}));

    std::string fact_output = "text";
    CLI::App* fact = app.add_subcommand(
        "factorize", "recover the chain pair behind a socle signature");
    fact->add_option("--m", cfg.m, "weight of the radical V(m)")->required();
    fact->add_option("--left", left, "left factor (signature computed from the modules)");
    fact->add_option("--right", right, "right factor");
    fact->add_option("--soc", cfg.soc, "socle weights of U, comma separated")->delimiter(',');
    fact->add_option("--soc-dual", cfg.soc_dual, "socle weights of the dual of U")
        ->delimiter(',');
    fact->add_option("--lambda", cfg.lambda, "greatest sl(2) weight of U");
    fact->add_option("--output", fact_output, "text (default) or json")
        ->check(CLI::IsMember({"json", "text"}));

    std::string explore_output = "csv";
    CLI::App* expl = app.add_subcommand(
        "explore-s1", "sweep the top socle slice of all length-2 pairs against the"
                      " conjectured case list");
    expl->add_option("--m", cfg.m, "weight of the radical V(m)")->required();
    expl->add_option("--max", cfg.max_param, "layer weight bound (default 4)");
    expl->add_option("--out", cfg.out_file, "CSV file; stdout when omitted");
    expl->add_option("--jobs", cfg.jobs, "worker threads (default 1)");

    std::vector<const char*> argv;
    argv.push_back("uniserial");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (cg_cmd->parsed()) {
            cfg.command = "cg";
            return cmd_cg(cg_cmd->remaining(), out, err);
        }
        if (soc->parsed()) {
            cfg.command = "soc";
            cfg.specs = {left, right};
            return cmd_soc(cfg, out, err);
        }
        if (hom->parsed()) {
            cfg.command = "hom";
            cfg.specs = {from, to};
            cfg.output = hom_output;
            return cmd_hom(cfg, out, err);
        }
        if (fact->parsed()) {
            cfg.command = "factorize";
            if (!left.empty() || !right.empty()) {
                if (left.empty() || right.empty()) {
                    err << "factorize needs both --left and --right\n";
                    return exit_usage;
                }
                cfg.specs = {left, right};
            }
            cfg.output = fact_output;
            return cmd_factorize(cfg, out, err);
        }
        cfg.command = "explore-s1";
        cfg.output = explore_output;
        return cmd_explore(cfg, out, err);
    } catch (const NotBigraded& e) {
        err << e.what() << "\n";
        return exit_not_bigraded;
    } catch (const AmbiguousM2& e) {
        out << e.what() << "\n";
        return exit_ambiguous;
    } catch (const NoCandidate& e) {
        err << e.what() << "\n";
        return exit_no_candidate;
    } catch (const MultipleCandidates& e) {
        err << e.what() << "\n";
        return exit_error;
    } catch (const SpecInvalid& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const MixedM& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const LengthMismatch& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const DimensionCap& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const EngineError& e) {
        err << e.what() << "\n";
        return exit_error;
    }
}

} // namespace uniserial
