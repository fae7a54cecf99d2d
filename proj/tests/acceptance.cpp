// Acceptance suite: runs every criterion at its pinned bound and prints one
// PASS/FAIL line per criterion. Exit status 0 iff all pass.
//
// Usage: rpl_acceptance [--cli PATH]   (PATH defaults to $RPL_CLI)

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rpl/checks.hpp"
#include "rpl/partition.hpp"

namespace {

std::string g_cli_path;

bool run_command(const std::string& command, std::string& output) {
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return false;
    char buffer[4096];
    output.clear();
    while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, got);
    return pclose(pipe) == 0;
}

bool run_catalog_checks(const std::vector<std::pair<std::string, rpl::CheckParams>>& jobs,
                        std::string& detail) {
    for (const auto& [name, params] : jobs) {
        rpl::CheckReport rep = rpl::run_check(name, params);
        if (!rep.pass) {
            std::ostringstream os;
            os << name << " failed";
            if (rep.counterexample)
                os << " at " << rep.counterexample->input << " (expected "
                   << rep.counterexample->expected << ", got " << rep.counterexample->actual
                   << ")";
            detail = os.str();
            return false;
        }
    }
    return true;
}

rpl::CheckParams with_max(int max_n) {
    rpl::CheckParams p;
    p.max_n = max_n;
    return p;
}

rpl::CheckParams with_order(int order) {
    rpl::CheckParams p;
    p.order = order;
    return p;
}

// criterion 1: the classify grid for n = 9 reproduces the reference table
bool criterion_classify_table(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "no CLI path (pass --cli PATH or set RPL_CLI)";
        return false;
    }
    std::string output;
    if (!run_command(g_cli_path + " classify --n 9 --format csv", output)) {
        detail = "classify command failed";
        return false;
    }
    std::map<std::pair<int, int>, std::multiset<std::string>> cells;
    std::istringstream in(output);
    std::string line;
    std::getline(in, line);  // header
    int total = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string row, col, token;
        std::getline(fields, row, ',');
        std::getline(fields, col, ',');
        std::getline(fields, token, ',');
        cells[{std::stoi(row), std::stoi(col)}].insert(token);
        ++total;
    }
    if (total != 30) {
        detail = "expected 30 partitions, parsed " + std::to_string(total);
        return false;
    }
    const auto& expected = rpl::reference_grid_9();
    for (int srank_class : {0, 2}) {
        for (int col = 0; col < 5; ++col) {
            const auto& want =
                expected[static_cast<size_t>(srank_class / 2)][static_cast<size_t>(col)];
            const auto& got = cells[{srank_class, col}];
            if (got.size() != (srank_class == 0 ? 4u : 2u)) {
                detail = "cell (" + std::to_string(srank_class) + "," + std::to_string(col) +
                         ") has size " + std::to_string(got.size());
                return false;
            }
            if (got != std::multiset<std::string>(want.begin(), want.end())) {
                detail = "cell (" + std::to_string(srank_class) + "," + std::to_string(col) +
                         ") content differs from the reference table";
                return false;
            }
        }
    }
    for (const auto& [key, cell] : cells) {
        if (key.first != 0 && key.first != 2 && !cell.empty()) {
            detail = "unexpected nonempty srank class " + std::to_string(key.first);
            return false;
        }
    }
    return true;
}

// criterion 2: the orbit table for n = 9 reproduces the reference rows
bool criterion_orbit_table(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "no CLI path (pass --cli PATH or set RPL_CLI)";
        return false;
    }
    std::string output;
    if (!run_command(g_cli_path + " orbits --n 9 --operator srank --format csv", output)) {
        detail = "orbits command failed";
        return false;
    }
    std::map<int, std::array<std::string, 5>> rows;
    std::istringstream in(output);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string orbit, crank, token;
        std::getline(fields, orbit, ',');
        std::getline(fields, crank, ',');
        std::getline(fields, token, ',');
        rows[std::stoi(orbit)][static_cast<size_t>(std::stoi(crank))] = token;
    }
    if (rows.size() != 6) {
        detail = "expected 6 orbits, parsed " + std::to_string(rows.size());
        return false;
    }
    std::multiset<std::string> actual, expected;
    for (const auto& [idx, row] : rows) {
        std::string joined;
        for (const std::string& tok : row) joined += tok + "|";
        actual.insert(joined);
    }
    for (const auto& row : rpl::reference_orbit_rows_9()) {
        std::string joined;
        for (const std::string& tok : row) joined += tok + "|";
        expected.insert(joined);
    }
    if (actual != expected) {
        detail = "orbit rows differ from the reference table";
        return false;
    }
    return true;
}

bool criterion_theorem1(std::string& detail) {
    return run_catalog_checks({{"stcrank-equidistribution", with_max(49)}}, detail);
}

bool criterion_theorem2(std::string& detail) {
    return run_catalog_checks({{"srank-orbit-structure", with_max(49)}}, detail);
}

bool criterion_congruences(std::string& detail) {
    return run_catalog_checks(
        {
            {"partition-congruences", with_max(49)},
            {"rank-equidistribution", with_max(49)},
            {"crank-equidistribution", with_max(49)},
            {"crank-mod10-refinement", with_max(49)},
        },
        detail);
}

bool criterion_series_identities(std::string& detail) {
    return run_catalog_checks(
        {
            {"stcrank-gf-product", with_order(25)},
            {"joint-odd-gf", with_order(25)},
            {"crank-gf", with_order(25)},
            {"stanley-difference-gf", with_order(30)},
            {"distinct-even-gf", with_order(30)},
            {"triangular-gf", with_order(200)},
            {"triple-product", with_order(100)},
            {"tcore-gf", with_order(40)},
            {"alpha-lattice-sift", with_order(30)},
            {"ramanujan-product", with_order(40)},
        },
        detail);
}

bool criterion_roots_of_unity(std::string& detail) {
    return run_catalog_checks({{"roots-of-unity-vanishing", with_order(30)}}, detail);
}

bool criterion_five_core_structure(std::string& detail) {
    return run_catalog_checks(
        {
            {"five-core-scaling", with_max(40)},
            {"theta-bijection", with_max(30)},
            {"five-core-refinements", with_max(30)},
            {"a50-formulas", with_max(60)},
            {"quadrupling-structure", with_max(25)},
        },
        detail);
}

bool criterion_elegant_formulas(std::string& detail) {
    return run_catalog_checks(
        {
            {"srank-cube-formula", with_max(40)},
            {"srank-decomposition", with_max(25)},
        },
        detail);
}

bool criterion_oracles(std::string& detail) {
    return run_catalog_checks(
        {
            {"enumeration-count", with_max(60)},
            {"abacus-vs-rimhook", with_max(20)},
        },
        detail);
}

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
    double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
    if (g_cli_path.empty())
        if (const char* env = std::getenv("RPL_CLI")) g_cli_path = env;

    const std::vector<Criterion> criteria = {
        {"1 classify grid n=9 matches the reference table", criterion_classify_table, 1.0},
        {"2 orbit table n=9 matches the reference table", criterion_orbit_table, 1.0},
        {"3 stcrank splits both srank classes of p(5n+4), 5n+4 <= 49", criterion_theorem1,
         30.0},
        {"4 srank-preserving orbits of size 5 partition p(5n+4), 5n+4 <= 49",
         criterion_theorem2, 0.0},
        {"5 rank/crank equidistribution and mod 5/7/10/11 congruences",
         criterion_congruences, 0.0},
        {"6 exact series identities at their pinned orders", criterion_series_identities,
         60.0},
        {"7 residue totals agree at q^(5n+4) through order 30 (both srank classes)",
         criterion_roots_of_unity, 0.0},
        {"8 five-core scaling, theta bijection, refinements, quadrupling witness",
         criterion_five_core_structure, 0.0},
        {"9 srank formulas from n-vectors and decompositions, exhaustively",
         criterion_elegant_formulas, 0.0},
        {"10 enumeration vs recurrence; abacus vs rim-hook stripping", criterion_oracles,
         0.0},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds) {
            ok = false;
            detail = "runtime " + std::to_string(elapsed) + "s exceeds " +
                     std::to_string(criterion.budget_seconds) + "s";
        }
        std::printf("[%s] criterion %s (%.2fs)\n", ok ? "PASS" : "FAIL",
                    criterion.name.c_str(), elapsed);
        if (!ok) {
            std::printf("       %s\n", detail.c_str());
            ++failures;
        }
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
