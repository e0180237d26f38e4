// covercraft — verification, construction, sampling, bound evaluation
// and search for binary covering codes, symmetric and asymmetric.
//
// Exit codes: 0 success, 1 verification failure (a claimed property does
// not hold), 2 usage or input errors.  All reports are JSON with a
// top-level "schema": 1 field unless --format table is selected;
// infinite values serialize as the string "inf".

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "covercraft/code_io.hpp"
#include "covercraft/constructions.hpp"
#include "covercraft/density.hpp"
#include "covercraft/oracle.hpp"
#include "covercraft/parallel.hpp"
#include "covercraft/patching.hpp"
#include "covercraft/radius_norm.hpp"

using json = nlohmann::ordered_json;
using namespace covercraft;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string format = "json";
    unsigned n_limit = kDefaultExhaustiveLimit;
    unsigned threads = 0;
};

json nat_json(ExtendedNat v) {
    if (v.is_infinite()) return json("inf");
    return json(v.finite());
}

json words_json(const Code& c) {
    json out = json::array();
    for (std::uint64_t m : c.masks()) out.push_back(Word(c.length(), m).str());
    return out;
}

void flatten(const json& value, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items())
            flatten(sub, prefix.empty() ? key : prefix + "." + key, rows);
    } else if (value.is_array()) {
        const bool structured = std::any_of(value.begin(), value.end(), [](const json& item) {
            return item.is_object() || item.is_array();
        });
        if (structured) {
            std::size_t index = 0;
            for (const auto& item : value)
                flatten(item, prefix + "." + std::to_string(index++), rows);
            return;
        }
        std::string joined;
        for (const auto& item : value) {
            if (!joined.empty()) joined += " ";
            joined += item.is_string() ? item.get<std::string>() : item.dump();
        }
        rows.emplace_back(prefix, joined);
    } else {
        rows.emplace_back(prefix,
                          value.is_string() ? value.get<std::string>() : value.dump());
    }
}

void emit(const json& report, const CommonOpts& opts) {
    if (opts.format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::size_t width = 0;
    for (const auto& [key, _] : rows) width = std::max(width, key.size());
    for (const auto& [key, val] : rows)
        std::cout << key << std::string(width - key.size() + 2, ' ') << val << "\n";
}

// Adds --symmetric/--asymmetric and returns a getter enforcing that
// exactly one was chosen.
std::function<Mode()> add_mode_flags(CLI::App* cmd) {
    auto sym = std::make_shared<bool>(false);
    auto asym = std::make_shared<bool>(false);
    cmd->add_flag("--symmetric", *sym, "Symmetric covering (undirected balls)");
    cmd->add_flag("--asymmetric", *asym, "Asymmetric covering (downward directed balls)");
    return [sym, asym]() -> Mode {
        if (*sym == *asym)
            throw CLI::ValidationError("mode", "exactly one of --symmetric/--asymmetric required");
        return *sym ? Mode::symmetric : Mode::asymmetric;
    };
}

unsigned env_n_limit() {
    if (const char* env = std::getenv("COVERCRAFT_N_LIMIT")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1 && parsed <= 30) return static_cast<unsigned>(parsed);
    }
    return kDefaultExhaustiveLimit;
}

json norm_report_json(const NormReport& report) {
    json norms = json::object();
    for (unsigned i = 1; i <= report.per_coordinate.size(); ++i)
        norms[std::to_string(i)] = nat_json(report.per_coordinate[i - 1]);
    json out;
    out["norms"] = std::move(norms);
    out["min_norm"] = nat_json(report.min_norm);
    out["acceptable"] = report.acceptable;
    return out;
}

json density_json(const DensityReport& report) {
    json out;
    out["n"] = report.n;
    out["radius"] = report.radius;
    out["mode"] = to_string(report.mode);
    out["code_size"] = report.code_size;
    out["denominator"] = static_cast<double>(report.denominator);
    out["density"] = static_cast<double>(report.density);
    out["radius_matches"] = report.radius_matches;
    out["computed_radius"] = nat_json(report.computed_radius);
    return out;
}

json bound_json(const BoundReport& report) {
    json out;
    out["R"] = report.radius;
    out["mode"] = to_string(report.mode);
    out["x0"] = static_cast<double>(report.x0);
    out["f_at_x0"] = static_cast<double>(report.f_at_x0);
    out["closed_form"] = static_cast<double>(report.closed_form);
    out["guess_clears_root"] = bound_guess_clears_root(report.radius);
    return out;
}

json search_json(const SearchResult& result) {
    json out;
    out["schema"] = 1;
    out["n"] = result.n;
    out["R"] = result.radius;
    out["mode"] = to_string(result.mode);
    out["optimum"] = result.optimum;
    out["exhaustive"] = result.exhaustive;
    out["nodes"] = result.nodes;
    if (result.witness) out["witness"] = words_json(*result.witness);
    if (result.normal_optimum) {
        out["normal_optimum"] = *result.normal_optimum;
        out["normal_exhaustive"] = result.normal_exhaustive;
        if (result.normal_witness) out["normal_witness"] = words_json(*result.normal_witness);
    }
    return out;
}

std::string cache_key(unsigned n, unsigned radius, Mode mode, bool require_normal) {
    return "n=" + std::to_string(n) + ",R=" + std::to_string(radius) + ",mode=" +
           to_string(mode) + ",normal=" + (require_normal ? "1" : "0");
}

Code code_from_json(const json& words) {
    std::vector<Word> parsed;
    for (const auto& w : words) parsed.push_back(Word::from_string(w.get<std::string>()));
    return Code::from_words(parsed);
}

// Runs the search through the on-disk cache when a path is given.
SearchResult cached_search(unsigned n, unsigned radius, Mode mode, bool require_normal,
                           const std::string& cache_path, bool* was_cached) {
    json cache = json::object();
    if (!cache_path.empty()) {
        std::ifstream in(cache_path);
        if (in) {
            try {
                in >> cache;
            } catch (const json::exception&) {
                cache = json::object();  // unreadable cache is rebuilt
            }
        }
    }
    const std::string key = cache_key(n, radius, mode, require_normal);
    if (cache.contains(key)) {
        const json& entry = cache[key];
        SearchResult result;
        result.n = n;
        result.radius = radius;
        result.mode = mode;
        result.optimum = entry["optimum"].get<std::uint64_t>();
        result.exhaustive = entry["exhaustive"].get<bool>();
        result.witness = code_from_json(entry["witness"]);
        if (entry.contains("normal_optimum")) {
            result.normal_optimum = entry["normal_optimum"].get<std::uint64_t>();
            result.normal_witness = code_from_json(entry["normal_witness"]);
            result.normal_exhaustive = entry["normal_exhaustive"].get<bool>();
        }
        if (was_cached) *was_cached = true;
        return result;
    }

    const SearchResult result = search_optimal(n, radius, mode, require_normal);
    if (was_cached) *was_cached = false;
    if (!cache_path.empty()) {
        json entry;
        entry["optimum"] = result.optimum;
        entry["exhaustive"] = result.exhaustive;
        entry["witness"] = words_json(*result.witness);
        if (result.normal_optimum) {
            entry["normal_optimum"] = *result.normal_optimum;
            entry["normal_witness"] = words_json(*result.normal_witness);
            entry["normal_exhaustive"] = result.normal_exhaustive;
        }
        cache[key] = std::move(entry);
        std::ofstream out(cache_path);
        if (!out) throw std::runtime_error("cannot write cache file: " + cache_path);
        out << cache.dump(2) << "\n";
    }
    return result;
}

// Moves some coordinate with norm <= threshold into position 1.
Code with_first_acceptable(const Code& code, std::uint64_t threshold, Mode mode,
                           unsigned limit) {
    for (unsigned i = 1; i <= code.length(); ++i)
        if (norm_at(code, i, mode, limit) <= ExtendedNat(threshold))
            return i == 1 ? code : swap_coordinates(code, 1, i);
    throw hypothesis_error("no coordinate with norm at most " + std::to_string(threshold));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covercraft: binary covering codes, normal and asymmetric"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    CommonOpts common;
    common.n_limit = env_n_limit();
    app.add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--n-limit", common.n_limit,
                   "Exhaustive length cap (env COVERCRAFT_N_LIMIT)")
        ->capture_default_str();
    app.add_option("--threads", common.threads, "Worker cap; results are unaffected");

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Verify radii, norms, normality, patches");
    std::string verify_file, verify_s, verify_t;
    bool verify_radius = false, verify_norm = false, verify_normal = false,
         verify_patched = false;
    unsigned verify_coordinate = 0;
    std::uint64_t verify_target = 0;
    std::optional<std::uint64_t> verify_threshold;
    verify->add_flag("--radius", verify_radius, "Covering radius only");
    verify->add_flag("--norm", verify_norm, "Full norm report");
    verify->add_flag("--normal", verify_normal, "Normality check (exit 1 if not normal)");
    verify->add_flag("--patched", verify_patched, "Norm-patched pair check");
    verify->add_option("--file", verify_file, "Code file for --radius/--norm/--normal");
    verify->add_option("--s", verify_s, "S file for --patched");
    verify->add_option("--t", verify_t, "T file for --patched");
    verify->add_option("--coordinate", verify_coordinate, "Designated coordinate (--patched)");
    verify->add_option("--target-norm", verify_target, "Target norm N (--patched)");
    verify->add_option("--threshold", verify_threshold,
                       "Acceptability threshold for --norm (default 2R+1)");
    auto verify_mode = add_mode_flags(verify);

    // ---- construct -------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "Direct sum, ADS and ASDS");
    construct->require_subcommand(1);
    construct->fallthrough();
    std::string left_file, right_file, out_file;
    std::string asds_s, asds_t, asds_k1, asds_k2;
    unsigned asds_coordinate = 0;
    std::uint64_t asds_target = 0;
    bool unchecked = false;

    auto* c_direct = construct->add_subcommand("direct-sum", "Cartesian concatenation");
    c_direct->add_option("--left", left_file)->required();
    c_direct->add_option("--right", right_file)->required();
    c_direct->add_option("--out", out_file)->required();
    auto direct_mode = add_mode_flags(c_direct);

    auto* c_ads = construct->add_subcommand("ads", "Amalgamated direct sum");
    c_ads->add_option("--left", left_file)->required();
    c_ads->add_option("--right", right_file)->required();
    c_ads->add_option("--out", out_file)->required();
    c_ads->add_flag("--unchecked", unchecked, "Skip hypothesis verification");
    auto ads_mode = add_mode_flags(c_ads);

    auto* c_asds = construct->add_subcommand("asds", "Amalgamated semi-direct sum");
    c_asds->add_option("--s", asds_s)->required();
    c_asds->add_option("--t", asds_t)->required();
    c_asds->add_option("--coordinate", asds_coordinate, "Acceptable coordinate of (S,T)")
        ->required();
    c_asds->add_option("--target-norm", asds_target, "Norm N of the patched code")->required();
    c_asds->add_option("--k1", asds_k1)->required();
    c_asds->add_option("--k2", asds_k2)->required();
    c_asds->add_option("--out", out_file)->required();
    c_asds->add_flag("--unchecked", unchecked, "Skip hypothesis verification");
    auto asds_mode = add_mode_flags(c_asds);

    // ---- sample-patch / estimate-patch ------------------------------------
    auto* sample = app.add_subcommand("sample-patch", "Draw one norm-patched code");
    PatchSampleParams sp;
    double sample_x = 0;
    std::string out_s, out_t;
    sample->add_option("--n", sp.n)->required();
    sample->add_option("--target-norm,-N", sp.target_norm)->required();
    sample->add_option("--x", sample_x, "Density parameter")->required();
    sample->add_option("--R", sp.rare_radius, "Radius for rare thresholds (asymmetric)");
    sample->add_option("--seed", sp.seed)->capture_default_str();
    sample->add_option("--out-s", out_s, "Write S here");
    sample->add_option("--out-t", out_t, "Write T here");
    auto sample_mode = add_mode_flags(sample);

    auto* estimate = app.add_subcommand("estimate-patch", "Monte Carlo patch statistics");
    std::uint64_t trials = 200;
    estimate->add_option("--n", sp.n)->required();
    estimate->add_option("--target-norm,-N", sp.target_norm)->required();
    estimate->add_option("--x", sample_x)->required();
    estimate->add_option("--R", sp.rare_radius);
    estimate->add_option("--seed", sp.seed)->capture_default_str();
    estimate->add_option("--trials", trials)->capture_default_str();
    auto estimate_mode = add_mode_flags(estimate);

    // ---- tau / rare -------------------------------------------------------
    auto* tau_cmd = app.add_subcommand("tau", "Patch expectation bound");
    unsigned tau_n = 0, tau_norm = 0, tau_r = 0;
    double tau_x = 0;
    tau_cmd->add_option("--n", tau_n)->required();
    tau_cmd->add_option("--target-norm,-N", tau_norm)->required();
    tau_cmd->add_option("--x", tau_x)->required();
    tau_cmd->add_option("--R", tau_r, "Rare radius (asymmetric)");
    auto tau_mode = add_mode_flags(tau_cmd);

    auto* rare = app.add_subcommand("rare", "Rare-vector thresholds and counts");
    unsigned rare_n = 0, rare_r = 0;
    bool rare_list = false;
    rare->add_option("--n", rare_n)->required();
    rare->add_option("--R", rare_r)->required();
    rare->add_flag("--list", rare_list, "Enumerate the rare words");

    // ---- bound / density ---------------------------------------------------
    auto* bound = app.add_subcommand("bound", "Closed-form density bound reports");
    unsigned bound_r = 0;
    std::optional<unsigned> bound_r_max;
    bound->add_option("--R", bound_r)->required();
    bound->add_option("--R-max", bound_r_max, "Report a range R..R-max");
    auto bound_mode = add_mode_flags(bound);

    auto* density_cmd = app.add_subcommand("density", "Density of a code file");
    std::string density_file;
    std::uint64_t density_r = 0;
    density_cmd->add_option("--file", density_file)->required();
    density_cmd->add_option("--R", density_r, "Claimed covering radius")->required();
    auto density_mode = add_mode_flags(density_cmd);

    // ---- search ------------------------------------------------------------
    auto* search = app.add_subcommand("search", "Exact/greedy optimal code search");
    unsigned search_n = 0, search_r = 0;
    bool search_normal = false, search_greedy = false;
    std::string cache_path;
    search->add_option("--n", search_n)->required();
    search->add_option("--R", search_r)->required();
    search->add_flag("--normal", search_normal, "Also find the smallest normal code");
    search->add_flag("--greedy", search_greedy, "Greedy upper bound only");
    search->add_option("--cache", cache_path, "JSON result cache path");
    auto search_mode = add_mode_flags(search);

    // ---- build-recursive -----------------------------------------------------
    auto* build = app.add_subcommand("build-recursive", "Sample + ASDS pipeline");
    unsigned build_n = 0, build_r = 0;
    double build_x = 0;
    std::uint64_t build_seed = 0;
    std::string build_k1, build_k2, build_out, build_cache;
    build->add_option("--n", build_n)->required();
    build->add_option("--R", build_r)->required();
    build->add_option("--x", build_x)->required();
    build->add_option("--seed", build_seed)->capture_default_str();
    build->add_option("--k1", build_k1, "Normal (n1,1) code file; searched when absent");
    build->add_option("--k2", build_k2, "Normal (n1,R) code file; searched when absent");
    build->add_option("--cache", build_cache, "Search cache for the companions");
    build->add_option("--out", build_out, "Result code file")->required();
    auto build_mode = add_mode_flags(build);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    set_worker_limit(common.threads);
    const unsigned limit = common.n_limit;

    try {
        if (app.got_subcommand(verify)) {
            const int chosen = static_cast<int>(verify_radius) + verify_norm + verify_normal +
                               verify_patched;
            if (chosen != 1)
                throw std::invalid_argument(
                    "pick exactly one of --radius/--norm/--normal/--patched");
            const Mode mode = verify_mode();
            json report;
            report["schema"] = 1;
            report["mode"] = to_string(mode);
            int exit_code = kExitOk;

            if (verify_patched) {
                PatchedCode p;
                p.s = read_code_file(verify_s);
                p.t = read_code_file(verify_t);
                p.coordinate = verify_coordinate;
                p.target_norm = verify_target;
                p.mode = mode;
                const PatchCheck check = check_norm_patched(p, limit);
                report["coordinate"] = p.coordinate;
                report["target_norm"] = p.target_norm;
                report["valid"] = check.valid;
                json violations = json::array();
                for (const Word& w : check.violations) violations.push_back(w.str());
                report["violations"] = std::move(violations);
                if (!check.valid) exit_code = kExitVerifyFail;
            } else {
                const Code code = read_code_file(verify_file);
                const ExtendedNat radius = mode == Mode::symmetric
                                               ? covering_radius(code, limit)
                                               : asym_covering_radius(code, limit);
                report["radius"] = nat_json(radius);
                if (verify_norm || verify_normal) {
                    const std::uint64_t threshold =
                        verify_threshold.value_or(radius.is_infinite() ? 0
                                                                       : 2 * radius.finite() + 1);
                    const NormReport norms = norm_report(code, mode, threshold, limit);
                    report.update(norm_report_json(norms));
                    report["threshold"] = threshold;
                    const bool normal =
                        !radius.is_infinite() && !norms.min_norm.is_infinite() &&
                        (norms.min_norm.finite() == 2 * radius.finite() ||
                         norms.min_norm.finite() == 2 * radius.finite() + 1);
                    report["normal"] = normal;
                    if (verify_normal && !normal) exit_code = kExitVerifyFail;
                }
            }
            emit(report, common);
            return exit_code;
        }

        if (app.got_subcommand(construct)) {
            json cert;
            cert["schema"] = 1;
            Code result;
            if (construct->got_subcommand(c_direct)) {
                const Mode mode = direct_mode();
                const Code a = read_code_file(left_file);
                const Code b = read_code_file(right_file);
                result = direct_sum(a, b);
                cert["operation"] = "direct-sum";
                cert["mode"] = to_string(mode);
                cert["lengths"] = {a.length(), b.length()};
                cert["sizes"] = {a.size(), b.size()};
            } else if (construct->got_subcommand(c_ads)) {
                const Mode mode = ads_mode();
                const Code a = read_code_file(left_file);
                const Code b = read_code_file(right_file);
                result = ads(a, b, mode, !unchecked, limit);
                cert["operation"] = "ads";
                cert["mode"] = to_string(mode);
                cert["strict"] = !unchecked;
                cert["lengths"] = {a.length(), b.length()};
                cert["sizes"] = {a.size(), b.size()};
                if (!unchecked) {
                    const ExtendedNat na = norm_at(a, a.length(), mode, limit);
                    const ExtendedNat nb = norm_at(b, 1, mode, limit);
                    cert["glue_norms"] = {{"left", nat_json(na)}, {"right", nat_json(nb)}};
                    cert["norm_bound"] = na.finite() + nb.finite() - 1;
                    cert["result_glue_norm"] =
                        nat_json(norm_at(result, a.length(), mode, limit));
                }
            } else {
                const Mode mode = asds_mode();
                PatchedCode p;
                p.s = read_code_file(asds_s);
                p.t = read_code_file(asds_t);
                p.coordinate = asds_coordinate;
                p.target_norm = asds_target;
                p.mode = mode;
                const Code k1 = read_code_file(asds_k1);
                const Code k2 = read_code_file(asds_k2);
                result = asds(p, k1, k2, !unchecked, limit);
                cert["operation"] = "asds";
                cert["mode"] = to_string(mode);
                cert["strict"] = !unchecked;
                cert["target_norm"] = p.target_norm;
                cert["sizes"] = {{"s", p.s.size()},
                                 {"t", p.t.size()},
                                 {"k1", k1.size()},
                                 {"k2", k2.size()}};
                cert["size_bound"] =
                    (p.s.size() * k1.size() + p.t.size() * k2.size()) / 2.0;
                if (!unchecked) {
                    const ExtendedNat nk1 = norm_at(k1, 1, mode, limit);
                    cert["k1_norm"] = nat_json(nk1);
                    cert["norm_bound"] = p.target_norm + nk1.finite() - 1;
                    cert["result_glue_norm"] =
                        nat_json(norm_at(result, p.s.length(), mode, limit));
                }
            }
            cert["result_length"] = result.length();
            cert["result_size"] = result.size();
            cert["output"] = out_file;
            write_code_file(out_file, result);
            emit(cert, common);
            return kExitOk;
        }

        if (app.got_subcommand(sample)) {
            sp.mode = sample_mode();
            sp.x = sample_x;
            const PatchedCode p = sample_patched(sp, limit);
            const PatchCheck check = check_norm_patched(p, limit);
            json report;
            report["schema"] = 1;
            report["mode"] = to_string(sp.mode);
            report["n"] = sp.n;
            report["target_norm"] = sp.target_norm;
            report["x"] = sample_x;
            if (sp.mode == Mode::asymmetric) report["R"] = sp.rare_radius;
            report["seed"] = sp.seed;
            report["k"] = k_value(sp.n, sp.target_norm, sp.x, sp.mode, sp.rare_radius);
            report["s_size"] = p.s.size();
            report["t_size"] = p.t.size();
            report["tau"] = static_cast<double>(
                sp.mode == Mode::symmetric
                    ? tau(sp.n, sp.target_norm, sp.x)
                    : tau_asym(sp.n, sp.target_norm, sp.rare_radius, sp.x));
            report["valid"] = check.valid;
            if (!out_s.empty()) {
                write_code_file(out_s, p.s);
                report["s_file"] = out_s;
            }
            if (!out_t.empty()) {
                write_code_file(out_t, p.t);
                report["t_file"] = out_t;
            }
            emit(report, common);
            return check.valid ? kExitOk : kExitVerifyFail;
        }

        if (app.got_subcommand(estimate)) {
            sp.mode = estimate_mode();
            sp.x = sample_x;
            const PatchEstimate est = estimate_patch(sp, trials, limit);
            json report;
            report["schema"] = 1;
            report["mode"] = to_string(sp.mode);
            report["n"] = sp.n;
            report["target_norm"] = sp.target_norm;
            report["x"] = sample_x;
            if (sp.mode == Mode::asymmetric) report["R"] = sp.rare_radius;
            report["seed"] = sp.seed;
            report["trials"] = est.trials;
            report["k"] = est.k;
            report["s_size"] = est.s_size;
            report["mean_t"] = static_cast<double>(est.mean_t);
            report["stddev_t"] = static_cast<double>(est.stddev_t);
            report["max_t"] = est.max_t;
            report["tau"] = static_cast<double>(est.tau_reference);
            report["valid"] = est.all_valid;
            emit(report, common);
            return est.all_valid ? kExitOk : kExitVerifyFail;
        }

        if (app.got_subcommand(tau_cmd)) {
            const Mode mode = tau_mode();
            json report;
            report["schema"] = 1;
            report["mode"] = to_string(mode);
            report["n"] = tau_n;
            report["target_norm"] = tau_norm;
            report["x"] = tau_x;
            long double value, reference;
            if (mode == Mode::symmetric) {
                value = tau(tau_n, tau_norm, tau_x);
                reference = tau_asymptotic(tau_n, tau_norm, tau_x);
            } else {
                report["R"] = tau_r;
                value = tau_asym(tau_n, tau_norm, tau_r, tau_x);
                reference = tau_asym_asymptotic(tau_n, tau_norm, tau_r, tau_x);
            }
            report["tau"] = static_cast<double>(value);
            report["asymptotic"] = static_cast<double>(reference);
            report["ratio"] = static_cast<double>(value / reference);
            emit(report, common);
            return kExitOk;
        }

        if (app.got_subcommand(rare)) {
            const RareSpec spec = rare_spec(rare_n, rare_r);
            json report;
            report["schema"] = 1;
            report["n"] = rare_n;
            report["R"] = rare_r;
            report["lo"] = spec.lo;
            report["hi"] = spec.hi;
            report["count"] = rare_count(rare_n, rare_r);
            report["bound"] = static_cast<double>(rare_count_bound(rare_n, rare_r));
            report["bound_holds"] =
                static_cast<long double>(rare_count(rare_n, rare_r)) <=
                rare_count_bound(rare_n, rare_r);
            if (rare_list) report["words"] = words_json(rare_set(rare_n, rare_r, limit));
            emit(report, common);
            return kExitOk;
        }

        if (app.got_subcommand(bound)) {
            const Mode mode = bound_mode();
            if (!bound_r_max) {
                json report = bound_json(closed_form_bound(bound_r, mode));
                report["schema"] = 1;
                emit(report, common);
                return kExitOk;
            }
            json report;
            report["schema"] = 1;
            report["mode"] = to_string(mode);
            json rows = json::array();
            for (unsigned r = bound_r; r <= *bound_r_max; ++r)
                rows.push_back(bound_json(closed_form_bound(r, mode)));
            report["reports"] = std::move(rows);
            emit(report, common);
            return kExitOk;
        }

        if (app.got_subcommand(density_cmd)) {
            const Mode mode = density_mode();
            const Code code = read_code_file(density_file);
            const DensityReport report = density(code, density_r, mode, limit);
            json out = density_json(report);
            out["schema"] = 1;
            emit(out, common);
            return report.radius_matches ? kExitOk : kExitVerifyFail;
        }

        if (app.got_subcommand(search)) {
            const Mode mode = search_mode();
            if (search_greedy) {
                const Code greedy = greedy_cover(search_n, search_r, mode, limit);
                json report;
                report["schema"] = 1;
                report["n"] = search_n;
                report["R"] = search_r;
                report["mode"] = to_string(mode);
                report["greedy"] = true;
                report["size"] = greedy.size();
                report["witness"] = words_json(greedy);
                emit(report, common);
                return kExitOk;
            }
            bool was_cached = false;
            const SearchResult result =
                cached_search(search_n, search_r, mode, search_normal, cache_path, &was_cached);
            json report = search_json(result);
            report["cached"] = was_cached;
            emit(report, common);
            return kExitOk;
        }

        if (app.got_subcommand(build)) {
            const Mode mode = build_mode();
            if (build_r < 2 || build_n < build_r)
                throw std::invalid_argument("build-recursive needs n >= R >= 2");
            const unsigned n1 = build_n / build_r;
            Code k1, k2;
            if (!build_k1.empty()) {
                k1 = read_code_file(build_k1);
            } else {
                const SearchResult found =
                    cached_search(n1, 1, mode, true, build_cache, nullptr);
                if (!found.normal_witness)
                    throw hypothesis_error("no normal (n1,1) code found for K1");
                k1 = with_first_acceptable(*found.normal_witness, 3, mode, limit);
            }
            if (!build_k2.empty()) {
                k2 = read_code_file(build_k2);
            } else {
                const SearchResult found =
                    cached_search(n1, build_r, mode, true, build_cache, nullptr);
                if (!found.normal_witness)
                    throw hypothesis_error("no normal (n1,R) code found for K2");
                k2 = with_first_acceptable(*found.normal_witness, 2 * build_r + 1, mode, limit);
            }

            const RecursiveBuild result = recursive_construct(
                build_n, build_r, build_x, mode, build_seed, k1, k2, limit);
            write_code_file(build_out, result.code);

            json report;
            report["schema"] = 1;
            report["mode"] = to_string(mode);
            report["n"] = build_n;
            report["R"] = build_r;
            report["x"] = build_x;
            report["seed"] = build_seed;
            report["n1"] = result.n1;
            report["n1prime"] = result.n1prime;
            report["k"] = result.k;
            report["s_size"] = result.patched.s.size();
            report["t_size"] = result.patched.t.size();
            report["k1_size"] = k1.size();
            report["k2_size"] = k2.size();
            report["result_size"] = result.code.size();
            report["radius"] = nat_json(result.radius);
            report["normal"] = result.normality.normal;
            report["density"] = density_json(result.density);
            report["output"] = build_out;
            emit(report, common);
            return result.normality.normal ? kExitOk : kExitVerifyFail;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hypothesis_error& e) {
        std::cerr << "hypothesis failure: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
