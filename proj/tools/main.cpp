#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vinc/laguerre.hpp"
#include "vinc/maps.hpp"
#include "vinc/patterns.hpp"
#include "vinc/perm.hpp"
#include "vinc/poly.hpp"
#include "vinc/stats.hpp"
#include "vinc/verify.hpp"

using nlohmann::json;
using namespace vinc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Selector {
    enum class Kind { Vincular, CrossNest, Set } kind;
    VincularStat vincular{};
    CrossNestKind crossnest{};
    SetStatKind set{};
    std::string name;
};

Selector parse_selector(const std::string& token) {
    static const std::pair<const char*, VincularStat> vinc_names[] = {
        {"213", VincularStat::V213},
        {"231", VincularStat::V231},
        {"312", VincularStat::V312},
        {"132", VincularStat::V132},
    };
    static const std::pair<const char*, CrossNestKind> cn_names[] = {
        {"cros", CrossNestKind::Cros},          {"nest", CrossNestKind::Nest},
        {"ecr", CrossNestKind::Ecr},            {"ucr", CrossNestKind::Ucr},
        {"lcr", CrossNestKind::Lcr},            {"ene", CrossNestKind::Ene},
        {"une", CrossNestKind::Une},            {"lne", CrossNestKind::Lne},
        {"ene-tilde", CrossNestKind::EneTilde}, {"nest-tilde", CrossNestKind::NestTilde},
    };
    static const std::pair<const char*, SetStatKind> set_names[] = {
        {"aba", SetStatKind::Aba},
        {"dtb", SetStatKind::Dtb},
        {"ene-set", SetStatKind::Ene},
        {"ene-tilde-set", SetStatKind::EneTilde},
    };
    for (const auto& [name, stat] : vinc_names)
        if (token == name) return Selector{Selector::Kind::Vincular, stat, {}, {}, name};
    for (const auto& [name, kind] : cn_names)
        if (token == name) return Selector{Selector::Kind::CrossNest, {}, kind, {}, name};
    for (const auto& [name, kind] : set_names)
        if (token == name) return Selector{Selector::Kind::Set, {}, {}, kind, name};
    throw ParseError(ParseError::Kind::BadFormat, "unknown statistic '" + token + "'");
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i <= text.size()) {
        const std::size_t j = std::min(text.find(',', i), text.size());
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j + 1;
    }
    return out;
}

std::string read_stdin_perm() {
    std::string line, all;
    while (std::getline(std::cin, line)) all += line + " ";
    return all;
}

Permutation perm_from_arg(const std::string& arg) {
    return parse_permutation(arg.empty() ? read_stdin_perm() : arg);
}

int cmd_stats(const std::string& perm_text, const std::string& which,
              const std::string& coords, bool json_out) {
    const Permutation sigma = perm_from_arg(perm_text);

    std::vector<Selector> scalar;
    if (!which.empty()) {
        if (which == "all") {
            for (const char* s : {"213", "231", "312", "132", "cros", "nest", "ecr", "ucr",
                                  "lcr", "ene", "une", "lne", "ene-tilde", "nest-tilde", "aba",
                                  "dtb", "ene-set", "ene-tilde-set"})
                scalar.push_back(parse_selector(s));
        } else {
            for (const auto& token : split_commas(which)) scalar.push_back(parse_selector(token));
        }
    }
    std::vector<Selector> coord_rows;
    for (const auto& token : split_commas(coords)) {
        Selector s = parse_selector(token);
        if (s.kind == Selector::Kind::Set ||
            (s.kind == Selector::Kind::CrossNest && s.crossnest != CrossNestKind::Cros &&
             s.crossnest != CrossNestKind::Nest))
            throw ParseError(ParseError::Kind::BadFormat,
                             "no coordinate form for '" + s.name + "'");
        coord_rows.push_back(std::move(s));
    }

    json j;
    j["perm"] = sigma.letters();
    std::string plain;
    if (!coord_rows.empty()) {
        plain += "perm:";
        for (int i = 1; i <= sigma.size(); ++i) plain += " " + std::to_string(sigma(i));
        plain += "\n";
    }
    for (const auto& s : coord_rows) {
        // Rows follow the letter printed in each column.
        std::vector<int> row;
        for (int col = 1; col <= sigma.size(); ++col) {
            const int letter = sigma(col);
            row.push_back(s.kind == Selector::Kind::Vincular
                              ? vincular_coord(s.vincular, letter, sigma)
                              : crossnest_coord(s.crossnest, letter, sigma));
        }
        j["coords"][s.name] = row;
        plain += s.name + ":";
        for (int v : row) plain += " " + std::to_string(v);
        plain += "\n";
    }
    for (const auto& s : scalar) {
        switch (s.kind) {
        case Selector::Kind::Vincular: {
            const long v = vincular_total(s.vincular, sigma);
            j["stats"][s.name] = v;
            plain += s.name + " = " + std::to_string(v) + "\n";
            break;
        }
        case Selector::Kind::CrossNest: {
            const long v = crossnest_total(s.crossnest, sigma);
            j["stats"][s.name] = v;
            plain += s.name + " = " + std::to_string(v) + "\n";
            break;
        }
        case Selector::Kind::Set: {
            const auto v = set_stat(s.set, sigma);
            j["sets"][s.name] = json(v);
            plain += s.name + " = {";
            for (std::size_t k = 0; k < v.size(); ++k)
                plain += (k ? ", " : "") + std::to_string(v[k]);
            plain += "}\n";
            break;
        }
        }
    }
    if (json_out) std::cout << j.dump() << "\n";
    else std::cout << plain;
    return kExitOk;
}

int cmd_map(const std::string& name, const std::string& perm_text) {
    const Permutation p = perm_from_arg(perm_text);
    Permutation out;
    if (name == "theta-hat") out = theta_hat(p);
    else if (name == "theta") out = theta(p);
    else if (name == "phi-sz") out = phi_sz(p);
    else if (name == "phi-sz-inv") out = phi_sz_inv(p);
    else if (name == "phi" || name == "phi-hat") out = phi_hat(p);
    else if (name == "phi-laguerre") out = phi_laguerre(p);
    else if (name == "inverse") out = inverse(p);
    else if (name == "reverse") out = reverse(p);
    else if (name == "complement") out = complement(p);
    else
        throw ParseError(ParseError::Kind::BadFormat, "unknown map '" + name + "'");
    std::cout << to_string(out) << "\n";
    return kExitOk;
}

int cmd_pattern(const std::string& action, const std::string& arg2, const std::string& arg3) {
    if (action == "baxter" || action == "baxter-dual") {
        const Permutation p = perm_from_arg(arg2);
        const bool b = action == "baxter" ? is_baxter(p) : is_baxter_dual(p);
        std::cout << (b ? "true" : "false") << "\n";
        return kExitOk;
    }
    if (action == "count") {
        const PatternDescriptor d = PatternDescriptor::parse(arg2);
        std::cout << count_occurrences(d, perm_from_arg(arg3)) << "\n";
        return kExitOk;
    }
    throw ParseError(ParseError::Kind::BadFormat, "unknown pattern action '" + action + "'");
}

int cmd_history(const std::string& action, std::vector<std::string> args, bool json_out) {
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw ParseError(ParseError::Kind::BadFormat,
                             "history " + action + " expects " + std::to_string(k) +
                                 " argument(s)");
    };
    auto history_json = [](const LaguerreHistory& w) {
        json j;
        j["steps"] = steps_to_string(w);
        j["heights"] = w.heights;
        j["weights"] = w.weights;
        return j;
    };
    if (action == "validate") {
        need(2);
        try {
            const LaguerreHistory w = parse_history(args[0], args[1]);
            if (json_out) {
                json j = history_json(w);
                j["valid"] = true;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "valid (heights";
                for (int h : w.heights) std::cout << " " << h;
                std::cout << ")\n";
            }
            return kExitOk;
        } catch (const HistoryError& e) {
            if (json_out) {
                json j;
                j["valid"] = false;
                j["error"] = e.what();
                j["index"] = e.index();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "invalid: " << e.what() << "\n";
            }
            return kExitUsage;
        }
    }
    if (action == "critical-step") {
        need(2);
        std::cout << critical_step(parse_history(args[0], args[1])) << "\n";
        return kExitOk;
    }
    if (action == "prudent") {
        need(2);
        std::cout << (is_prudent(parse_history(args[0], args[1])) ? "true" : "false") << "\n";
        return kExitOk;
    }
    if (action == "fv") {
        need(1);
        const LaguerreHistory w = fv_forward(parse_permutation(args[0]));
        if (json_out) std::cout << history_json(w).dump() << "\n";
        else std::cout << to_string(w) << "\n";
        return kExitOk;
    }
    if (action == "fv-inverse") {
        need(2);
        std::cout << to_string(fv_inverse(parse_history(args[0], args[1]))) << "\n";
        return kExitOk;
    }
    if (action == "xi") {
        need(2);
        const LaguerreHistory v = xi(parse_history(args[0], args[1]));
        if (json_out) std::cout << history_json(v).dump() << "\n";
        else std::cout << to_string(v) << "\n";
        return kExitOk;
    }
    if (action == "count") {
        need(1);
        const int n = std::stoi(args[0]);
        std::cout << count_histories(n, false) << "\n";
        return kExitOk;
    }
    if (action == "count-prudent") {
        need(1);
        const int n = std::stoi(args[0]);
        std::cout << count_histories(n, true) << "\n";
        return kExitOk;
    }
    throw ParseError(ParseError::Kind::BadFormat, "unknown history action '" + action + "'");
}

std::vector<StatBinding> bindings_for(const std::string& vars) {
    // Fixed association: p <-> 132, q <-> 312, r <-> 213, s <-> 231. The vars
    // option picks which of the four to keep.
    std::vector<StatBinding> out;
    for (const auto& token : split_commas(vars)) {
        if (token.size() != 1)
            throw ParseError(ParseError::Kind::BadFormat, "bad variable '" + token + "'");
        const Var v = parse_var(token[0]);
        switch (v) {
        case Var::P: out.push_back({VincularStat::V132, Var::P}); break;
        case Var::Q: out.push_back({VincularStat::V312, Var::Q}); break;
        case Var::R: out.push_back({VincularStat::V213, Var::R}); break;
        case Var::S: out.push_back({VincularStat::V231, Var::S}); break;
        }
    }
    return out;
}

json poly_json(const MultiPoly& poly) {
    json terms = json::array();
    for (const auto& [e, c] : poly.terms()) {
        json t;
        t["p"] = e[0];
        t["q"] = e[1];
        t["r"] = e[2];
        t["s"] = e[3];
        t["coeff"] = c;
        terms.push_back(t);
    }
    return terms;
}

int cmd_poly(const std::string& action, const std::string& arg, const std::string& vars,
             int jobs, bool json_out) {
    if (action == "qn" || action == "pn") {
        const int n = std::stoi(arg);
        const auto bindings = bindings_for(vars);
        const MultiPoly poly = distribution_poly(
            n, bindings, action == "qn" ? PermClass::Baxter : PermClass::All, jobs);
        if (json_out) std::cout << poly_json(poly).dump() << "\n";
        else {
            bool qr_only = true;
            for (const auto& [stat, var] : bindings)
                qr_only = qr_only && (var == Var::Q || var == Var::R);
            std::cout << (qr_only ? poly.to_qr_grouped_string() : poly.to_string()) << "\n";
        }
        return kExitOk;
    }
    if (action == "cf") {
        const int n = std::stoi(arg);
        const SeriesInX s = cf_series(n);
        if (json_out) {
            json j = json::array();
            for (int k = 0; k <= n; ++k) j.push_back(poly_json(s.coefficient(k)));
            std::cout << j.dump() << "\n";
        } else {
            for (int k = 0; k <= n; ++k)
                std::cout << "x^" << k << ": " << s.coefficient(k).to_string() << "\n";
        }
        return kExitOk;
    }
    if (action == "pq-integer") {
        std::cout << pq_integer(std::stoi(arg)).to_string() << "\n";
        return kExitOk;
    }
    if (action == "baxter") {
        std::cout << baxter_number(std::stoi(arg)) << "\n";
        return kExitOk;
    }
    if (action == "catalan") {
        std::cout << catalan(std::stoi(arg)) << "\n";
        return kExitOk;
    }
    throw ParseError(ParseError::Kind::BadFormat, "unknown poly action '" + action + "'");
}

int cmd_verify(const std::vector<std::string>& ids, bool all, bool list, int n_min, int n_max,
               int jobs, const std::string& format) {
    const bool json_out = format == "json";
    if (list) {
        for (const auto& info : verify::list_checks()) {
            if (json_out) {
                json j;
                j["check"] = info.id;
                j["claim"] = info.claim;
                j["default-range"] = {info.default_lo, info.default_hi};
                j["cap"] = {info.cap_lo, info.cap_hi};
                std::cout << j.dump() << "\n";
            } else {
                char line[64];
                std::snprintf(line, sizeof line, "%-22s %2d..%-2d  ", info.id.c_str(),
                              info.default_lo, info.default_hi);
                std::cout << line << info.claim << "\n";
            }
        }
        return kExitOk;
    }

    std::vector<std::string> selected = ids;
    if (all) {
        selected.clear();
        for (const auto& info : verify::list_checks()) selected.push_back(info.id);
    }
    if (selected.empty())
        throw ParseError(ParseError::Kind::BadFormat,
                         "verify needs --all, --list, or --check <id>[,<id>...]");

    bool all_pass = true;
    for (const auto& id : selected) {
        const auto& infos = verify::list_checks();
        const verify::CheckInfo* info = nullptr;
        for (const auto& c : infos)
            if (c.id == id) info = &c;
        if (!info) throw ParseError(ParseError::Kind::BadFormat, "unknown check id '" + id + "'");
        // Requested bounds override the defaults but never leave the cap box.
        int lo = n_min >= 0 ? std::max(n_min, info->cap_lo) : info->default_lo;
        int hi = n_max >= 0 ? std::min(n_max, info->cap_hi) : info->default_hi;
        const verify::CheckReport report = verify::run_check(id, lo, hi, jobs);
        if (report.status != verify::CheckStatus::Pass) all_pass = false;
        std::cout << (json_out ? verify::report_to_json(report)
                               : verify::report_to_text(report))
                  << "\n";
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation statistics, bijections, and exhaustive identity checks"};
    app.require_subcommand(1);

    // stats
    std::string stats_perm, stats_which = "all", stats_coords;
    std::string stats_format = "plain";
    auto* stats_cmd = app.add_subcommand("stats", "statistics of one permutation");
    stats_cmd->add_option("perm", stats_perm, "one-line notation, e.g. \"4 7 1 8 6 3 2 5\"");
    stats_cmd->add_option("which", stats_which, "comma list of statistics, or 'all'");
    stats_cmd->add_option("--coords", stats_coords,
                          "letter-indexed coordinate rows for 213/231/312/132/cros/nest");
    stats_cmd->add_option("--format", stats_format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));

    // map
    std::string map_name, map_perm;
    auto* map_cmd = app.add_subcommand("map", "apply a named map to a permutation");
    map_cmd->add_option("name", map_name,
                        "theta-hat|theta|phi-sz|phi-sz-inv|phi|phi-hat|phi-laguerre|inverse|"
                        "reverse|complement")
        ->required();
    map_cmd->add_option("perm", map_perm, "one-line notation (stdin if omitted)");

    // pattern
    std::string pat_action, pat_arg2, pat_arg3;
    auto* pat_cmd = app.add_subcommand("pattern", "pattern counting and Baxter membership");
    pat_cmd->add_option("action", pat_action, "count|baxter|baxter-dual")->required();
    pat_cmd->add_option("arg2", pat_arg2, "pattern (for count) or permutation");
    pat_cmd->add_option("arg3", pat_arg3, "permutation (for count)");

    // history
    std::string hist_action;
    std::vector<std::string> hist_args;
    std::string hist_format = "plain";
    auto* hist_cmd = app.add_subcommand("history", "weighted 2-Motzkin path operations");
    hist_cmd->add_option("action", hist_action,
                         "validate|critical-step|prudent|fv|fv-inverse|xi|count|count-prudent")
        ->required();
    hist_cmd->add_option("args", hist_args, "steps (UDRB string) and comma-separated weights");
    hist_cmd->add_option("--format", hist_format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));

    // poly
    std::string poly_action, poly_arg, poly_vars;
    int poly_jobs = 0;
    std::string poly_format = "plain";
    auto* poly_cmd = app.add_subcommand("poly", "distribution polynomials and counting formulas");
    poly_cmd->add_option("action", poly_action, "qn|pn|cf|pq-integer|baxter|catalan")->required();
    poly_cmd->add_option("arg", poly_arg, "n (or i)")->required();
    poly_cmd->add_option("--vars", poly_vars,
                         "kept variables, e.g. q,r (default qn: q,r; pn: p,q,r,s)");
    poly_cmd->add_option("--jobs", poly_jobs, "worker threads (default: hardware)");
    poly_cmd->add_option("--format", poly_format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));

    // verify
    std::vector<std::string> verify_ids;
    bool verify_all = false, verify_list = false;
    int verify_n_min = -1, verify_n_max = -1, verify_jobs = 0;
    std::string verify_format = "plain";
    auto* verify_cmd = app.add_subcommand("verify", "run registered exhaustive checks");
    verify_cmd->add_option("--check", verify_ids, "check ids")->delimiter(',');
    verify_cmd->add_flag("--all", verify_all, "run every check at its default range");
    verify_cmd->add_flag("--list", verify_list, "list the registry");
    verify_cmd->add_option("--n-min", verify_n_min, "lower bound override");
    verify_cmd->add_option("--n-max", verify_n_max, "upper bound override (clamped to caps)");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads (default: hardware)");
    verify_cmd->add_option("--format", verify_format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (stats_cmd->parsed()) {
            // A bare --coords request prints only the rows.
            if (stats_cmd->count("which") == 0 && !stats_coords.empty()) stats_which.clear();
            return cmd_stats(stats_perm, stats_which, stats_coords, stats_format == "json");
        }
        if (map_cmd->parsed()) return cmd_map(map_name, map_perm);
        if (pat_cmd->parsed()) return cmd_pattern(pat_action, pat_arg2, pat_arg3);
        if (hist_cmd->parsed())
            return cmd_history(hist_action, hist_args, hist_format == "json");
        if (poly_cmd->parsed()) {
            if (poly_vars.empty()) poly_vars = poly_action == "pn" ? "p,q,r,s" : "q,r";
            return cmd_poly(poly_action, poly_arg, poly_vars, poly_jobs,
                            poly_format == "json");
        }
        if (verify_cmd->parsed())
            return cmd_verify(verify_ids, verify_all, verify_list, verify_n_min, verify_n_max,
                              verify_jobs, verify_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
