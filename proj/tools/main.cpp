#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rpl/checks.hpp"
#include "rpl/stanley.hpp"
#include "rpl/stats.hpp"
#include "rpl/tcore.hpp"
#include "rpl/textio.hpp"

using nlohmann::json;

namespace {

// Exit codes: 0 all good, 1 a mathematical check failed, 2 usage error.
constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

json report_json(const rpl::CheckReport& rep, bool timings) {
    json j;
    j["check"] = rep.name;
    j["verdict"] = rep.pass ? "pass" : "fail";
    j["params"] = rep.params;
    if (timings) j["elapsed_ms"] = static_cast<long long>(rep.elapsed_seconds * 1000.0);
    if (rep.counterexample) {
        j["counterexample"] = {{"input", rep.counterexample->input},
                               {"expected", rep.counterexample->expected},
                               {"actual", rep.counterexample->actual}};
    }
    return j;
}

std::string params_text(const rpl::CheckReport& rep) {
    std::ostringstream os;
    for (const auto& [k, v] : rep.params) os << " " << k << "=" << v;
    return os.str();
}

void print_report(const rpl::CheckReport& rep, const std::string& format, bool timings) {
    if (format == "json") {
        std::cout << report_json(rep, timings).dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << rep.name << "," << (rep.pass ? "pass" : "fail") << ",\""
                  << params_text(rep) << "\"";
        if (rep.counterexample)
            std::cout << ",\"" << rep.counterexample->input << "\",\""
                      << rep.counterexample->expected << "\",\""
                      << rep.counterexample->actual << "\"";
        else
            std::cout << ",,,";
        std::cout << "\n";
        return;
    }
    std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.name << params_text(rep);
    if (timings) {
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(2);
        os << rep.elapsed_seconds;
        std::cout << " [" << os.str() << "s]";
    }
    std::cout << "\n";
    if (rep.counterexample) {
        std::cout << "  counterexample: " << rep.counterexample->input
                  << "\n  expected: " << rep.counterexample->expected
                  << "\n  actual:   " << rep.counterexample->actual << "\n";
    }
}

int cmd_verify(const std::vector<std::string>& names, bool list, bool all,
               std::optional<int> max_n, std::optional<int> order, int jobs,
               const std::string& format, bool timings) {
    if (list) {
        for (const rpl::CheckDef& def : rpl::check_catalog()) {
            std::cout << def.name;
            for (const auto& alias : def.aliases) std::cout << " (alias: " << alias << ")";
            std::cout << "\n    " << def.summary << "\n";
        }
        return kExitPass;
    }
    std::vector<std::string> selected = names;
    if (all || (selected.size() == 1 && selected[0] == "all")) {
        selected.clear();
        for (const rpl::CheckDef& def : rpl::check_catalog()) selected.push_back(def.name);
    }
    if (selected.empty()) {
        std::cerr << "verify: no checks selected (give names, 'all', or --list)\n";
        return kExitUsage;
    }
    for (const std::string& name : selected) {
        if (rpl::find_check(name) == nullptr) {
            std::cerr << "verify: unknown check '" << name << "'\n";
            return kExitUsage;
        }
    }
    rpl::CheckParams params;
    params.max_n = max_n;
    params.order = order;
    if (!params.order) {
        if (const char* env = std::getenv("RPL_DEFAULT_ORDER")) {
            try {
                params.order = std::stoi(env);
            } catch (const std::exception&) {
                std::cerr << "verify: bad RPL_DEFAULT_ORDER '" << env << "'\n";
                return kExitUsage;
            }
        }
    }
    if (format == "csv") std::cout << "check,verdict,params,input,expected,actual\n";
    std::vector<rpl::CheckReport> reports(selected.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < selected.size(); ++i)
            reports[i] = rpl::run_check(selected[i], params);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= selected.size()) return;
                reports[i] = rpl::run_check(selected[i], params);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    int failures = 0;
    for (const rpl::CheckReport& rep : reports) {
        print_report(rep, format, timings);
        failures += rep.pass ? 0 : 1;
    }
    if (format == "text")
        std::cout << "passed " << (reports.size() - static_cast<size_t>(failures)) << "/"
                  << reports.size() << "\n";
    return failures == 0 ? kExitPass : kExitCheckFailed;
}

int cmd_classify(int n, const std::string& row_stat, int row_mod,
                 const std::string& col_stat, int col_mod, const std::string& format) {
    rpl::Statistic row = rpl::statistic_from_name(row_stat);
    rpl::Statistic col = rpl::statistic_from_name(col_stat);
    if (row_mod < 1 || col_mod < 1) throw std::domain_error("moduli must be positive");
    std::vector<std::vector<std::vector<rpl::Partition>>> cells(
        static_cast<size_t>(row_mod),
        std::vector<std::vector<rpl::Partition>>(static_cast<size_t>(col_mod)));
    rpl::for_each_partition(n, [&](const rpl::Partition& pi) {
        int r = rpl::mod_floor(rpl::evaluate_statistic(row, pi), row_mod);
        int c = rpl::mod_floor(rpl::evaluate_statistic(col, pi), col_mod);
        cells[static_cast<size_t>(r)][static_cast<size_t>(c)].push_back(pi);
    });
    if (format == "json") {
        for (int r = 0; r < row_mod; ++r)
            for (int c = 0; c < col_mod; ++c)
                for (const rpl::Partition& pi : cells[static_cast<size_t>(r)][static_cast<size_t>(c)]) {
                    json j;
                    j["row"] = r;
                    j["col"] = c;
                    j["partition"] = pi.parts();
                    j["token"] = rpl::freq_token(pi);
                    std::cout << j.dump() << "\n";
                }
        return kExitPass;
    }
    if (format == "csv") {
        std::cout << "row,col,partition\n";
        for (int r = 0; r < row_mod; ++r)
            for (int c = 0; c < col_mod; ++c)
                for (const rpl::Partition& pi : cells[static_cast<size_t>(r)][static_cast<size_t>(c)])
                    std::cout << r << "," << c << "," << rpl::freq_token(pi) << "\n";
        return kExitPass;
    }
    std::cout << "# n=" << n << " rows: " << row_stat << " mod " << row_mod
              << ", columns: " << col_stat << " mod " << col_mod << "\n";
    for (int r = 0; r < row_mod; ++r) {
        bool row_empty = true;
        for (int c = 0; c < col_mod; ++c)
            if (!cells[static_cast<size_t>(r)][static_cast<size_t>(c)].empty()) row_empty = false;
        if (row_empty) continue;
        for (int c = 0; c < col_mod; ++c) {
            std::cout << row_stat << "=" << r << " | " << col_stat << "=" << c << " |";
            for (const rpl::Partition& pi : cells[static_cast<size_t>(r)][static_cast<size_t>(c)])
                std::cout << " " << rpl::freq_pretty(pi);
            std::cout << "\n";
        }
    }
    return kExitPass;
}

int cmd_orbits(int n, const std::string& op_name, const std::string& format) {
    if (n % 5 != 4) throw std::domain_error("orbits: --n must be 4 mod 5");
    rpl::OrbitVariant variant;
    if (op_name == "plain")
        variant = rpl::OrbitVariant::Plain;
    else if (op_name == "srank")
        variant = rpl::OrbitVariant::SrankPreserving;
    else
        throw std::domain_error("orbits: operator must be 'plain' or 'srank'");
    auto rows = rpl::orbit_rows(n, variant);
    if (format == "json") {
        for (size_t i = 0; i < rows.size(); ++i)
            for (int c = 0; c < 5; ++c) {
                json j;
                j["orbit"] = i;
                j["crank"] = c;
                j["partition"] = rows[i][static_cast<size_t>(c)].parts();
                j["token"] = rpl::freq_token(rows[i][static_cast<size_t>(c)]);
                std::cout << j.dump() << "\n";
            }
        return kExitPass;
    }
    if (format == "csv") {
        std::cout << "orbit,crank,partition\n";
        for (size_t i = 0; i < rows.size(); ++i)
            for (int c = 0; c < 5; ++c)
                std::cout << i << "," << c << ","
                          << rpl::freq_token(rows[i][static_cast<size_t>(c)]) << "\n";
        return kExitPass;
    }
    std::cout << "# n=" << n << " operator=" << op_name
              << " columns: 5-core crank residues 0..4\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        std::cout << "orbit " << i + 1 << " |";
        for (int c = 0; c < 5; ++c)
            std::cout << " " << rpl::freq_pretty(rows[i][static_cast<size_t>(c)]);
        std::cout << "\n";
    }
    return kExitPass;
}

int cmd_stats(int n, const std::string& stat_list, const std::string& format) {
    std::vector<rpl::Statistic> stats;
    std::istringstream in(stat_list);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (!token.empty()) stats.push_back(rpl::statistic_from_name(token));
    }
    if (stats.empty()) throw std::domain_error("stats: no statistics selected");
    for (rpl::Statistic s : stats)
        if (s == rpl::Statistic::C5core && n % 5 != 4)
            throw std::domain_error("stats: c5core requires n = 4 mod 5");
    if (format == "csv") {
        std::cout << "partition,weight";
        for (rpl::Statistic s : stats) std::cout << "," << rpl::statistic_name(s);
        std::cout << "\n";
    }
    rpl::for_each_partition(n, [&](const rpl::Partition& pi) {
        if (format == "json") {
            json j;
            j["partition"] = pi.parts();
            j["weight"] = pi.weight();
            json values;
            for (rpl::Statistic s : stats)
                values[rpl::statistic_name(s)] = rpl::evaluate_statistic(s, pi);
            j["stats"] = values;
            std::cout << j.dump() << "\n";
        } else if (format == "csv") {
            std::cout << rpl::freq_token(pi) << "," << pi.weight();
            for (rpl::Statistic s : stats) std::cout << "," << rpl::evaluate_statistic(s, pi);
            std::cout << "\n";
        } else {
            std::cout << rpl::freq_pretty(pi) << " weight=" << pi.weight();
            for (rpl::Statistic s : stats)
                std::cout << " " << rpl::statistic_name(s) << "="
                          << rpl::evaluate_statistic(s, pi);
            std::cout << "\n";
        }
    });
    return kExitPass;
}

int cmd_cores(int n, int t, std::optional<int> crank, std::optional<int> srank_class,
              bool count_only, const std::string& format) {
    if (count_only) {
        std::cout << rpl::core_count(n, t, crank, srank_class).str() << "\n";
        return kExitPass;
    }
    if ((crank || srank_class) && t != 5)
        throw std::domain_error("cores: filters require --t 5");
    if (crank && n % 5 != 4)
        throw std::domain_error("cores: --crank requires n = 4 mod 5");
    std::vector<rpl::Partition> cores;
    rpl::for_each_partition(n, [&](const rpl::Partition& pi) {
        if (!rpl::is_t_core(pi, t)) return;
        if (crank && rpl::five_core_crank(pi) != rpl::mod_floor(*crank, 5)) return;
        if (srank_class &&
            rpl::mod_floor(rpl::srank(pi), 4) != rpl::mod_floor(*srank_class, 4))
            return;
        cores.push_back(pi);
    });
    if (format == "csv") std::cout << "partition\n";
    for (const rpl::Partition& pi : cores) {
        if (format == "json") {
            json j;
            j["partition"] = pi.parts();
            j["token"] = rpl::freq_token(pi);
            std::cout << j.dump() << "\n";
        } else if (format == "csv") {
            std::cout << rpl::freq_token(pi) << "\n";
        } else {
            std::cout << rpl::freq_pretty(pi) << "\n";
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rpl: partition statistics and identity verification"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* verify = app.add_subcommand("verify", "run named checks from the catalog");
    std::vector<std::string> names;
    bool list = false, all = false, timings = false;
    std::optional<int> max_n, order;
    int jobs = 1;
    verify->add_option("names", names, "check names or 'all'");
    verify->add_flag("--list", list, "list the catalog and exit");
    verify->add_flag("--all", all, "run every check");
    verify->add_option("--max-n", max_n, "override the enumeration bound");
    verify->add_option("--order", order, "override the series truncation order");
    verify->add_option("--jobs", jobs, "run checks on this many threads")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--timings", timings, "include elapsed times in the output");
    verify->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* classify = app.add_subcommand("classify", "two-statistic residue grid");
    int cls_n = 9, row_mod = 4, col_mod = 5;
    std::string row_stat = "srank", col_stat = "stcrank";
    classify->add_option("--n", cls_n, "weight to classify")->required();
    classify->add_option("--row-stat", row_stat, "row statistic");
    classify->add_option("--row-mod", row_mod, "row modulus");
    classify->add_option("--col-stat", col_stat, "column statistic");
    classify->add_option("--col-mod", col_mod, "column modulus");
    classify->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* orbits = app.add_subcommand("orbits", "orbit table for weights 4 mod 5");
    int orb_n = 9;
    std::string op_name = "srank";
    orbits->add_option("--n", orb_n, "weight (must be 4 mod 5)")->required();
    orbits->add_option("--operator", op_name, "'plain' or 'srank'");
    orbits->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* stats = app.add_subcommand("stats", "per-partition statistic records");
    int st_n = 9;
    std::string stat_list = "rank,crank,srank,stcrank";
    stats->add_option("--n", st_n, "weight")->required();
    stats->add_option("--stats", stat_list, "comma-separated statistics");
    stats->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* cores = app.add_subcommand("cores", "list or count t-cores");
    int co_n = 9, co_t = 5;
    std::optional<int> co_crank, co_srank;
    bool count_only = false;
    cores->add_option("--n", co_n, "weight")->required();
    cores->add_option("--t", co_t, "core parameter (default 5)");
    cores->add_option("--crank", co_crank, "filter by 5-core crank residue");
    cores->add_option("--srank", co_srank, "filter by srank class mod 4");
    cores->add_flag("--count-only", count_only, "print only the count");
    cores->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(names, list, all, max_n, order, jobs, format, timings);
        if (classify->parsed())
            return cmd_classify(cls_n, row_stat, row_mod, col_stat, col_mod, format);
        if (orbits->parsed()) return cmd_orbits(orb_n, op_name, format);
        if (stats->parsed()) return cmd_stats(st_n, stat_list, format);
        if (cores->parsed())
            return cmd_cores(co_n, co_t, co_crank, co_srank, count_only, format);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
