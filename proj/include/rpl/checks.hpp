#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rpl/partition.hpp"

namespace rpl {

/// Overrides for a check run; unset fields fall back to the check's pinned
/// defaults.
struct CheckParams {
    std::optional<int> max_n;  ///< largest argument for enumeration sweeps
    std::optional<int> order;  ///< q-series truncation order
};

struct Counterexample {
    std::string input;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string name;
    std::map<std::string, std::string> params;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    double elapsed_seconds = 0.0;
};

struct CheckDef {
    std::string name;
    std::string summary;
    std::vector<std::string> aliases;
    std::function<CheckReport(const CheckParams&)> run;
};

/// The registered checks, in a fixed order.
const std::vector<CheckDef>& check_catalog();

/// Lookup by name or alias; nullptr when unknown.
const CheckDef* find_check(const std::string& name_or_alias);

/// Run one check (by name or alias), filling name and elapsed time.
CheckReport run_check(const std::string& name_or_alias, const CheckParams& params = {});

/// Reference classification of the 30 partitions of 9: cell (srank class
/// 0|2, stcrank residue 0..4) as dot-form frequency tokens.
const std::array<std::array<std::vector<std::string>, 5>, 2>& reference_grid_9();

/// Reference orbit rows for the partitions of 9 under the srank-preserving
/// operator; each row lists frequency tokens by 5-core crank residue 0..4.
const std::vector<std::array<std::string, 5>>& reference_orbit_rows_9();

}  // namespace rpl
