#include "rpl/stats.hpp"

#include "rpl/stanley.hpp"
#include "rpl/tcore.hpp"

namespace rpl {

Statistic statistic_from_name(const std::string& name) {
    if (name == "rank") return Statistic::Rank;
    if (name == "crank") return Statistic::Crank;
    if (name == "srank") return Statistic::Srank;
    if (name == "stcrank") return Statistic::Stcrank;
    if (name == "c5core") return Statistic::C5core;
    throw std::invalid_argument("unknown statistic '" + name + "'");
}

std::string statistic_name(Statistic s) {
    switch (s) {
        case Statistic::Rank: return "rank";
        case Statistic::Crank: return "crank";
        case Statistic::Srank: return "srank";
        case Statistic::Stcrank: return "stcrank";
        case Statistic::C5core: return "c5core";
    }
    return "?";
}

long long evaluate_statistic(Statistic s, const Partition& pi) {
    switch (s) {
        case Statistic::Rank: return dyson_rank(pi);
        case Statistic::Crank: return ag_crank(pi);
        case Statistic::Srank: return srank(pi);
        case Statistic::Stcrank: return stcrank(pi);
        case Statistic::C5core: return five_core_crank(pi);
    }
    throw std::logic_error("evaluate_statistic: bad enum");
}

std::map<int, BigInt> residue_counts(int n, Statistic s, int modulus) {
    if (modulus < 1) throw std::domain_error("residue_counts: modulus must be >= 1");
    if (s == Statistic::C5core && n % 5 != 4)
        throw std::domain_error("residue_counts: c5core requires n = 4 mod 5");
    std::map<int, BigInt> counts;
    for (int r = 0; r < modulus; ++r) counts[r] = 0;
    for_each_partition(n, [&](const Partition& pi) {
        counts[mod_floor(evaluate_statistic(s, pi), modulus)] += 1;
    });
    return counts;
}

}  // namespace rpl
