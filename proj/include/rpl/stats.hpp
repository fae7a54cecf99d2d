#pragma once

#include <map>
#include <string>

#include "rpl/partition.hpp"

namespace rpl {

enum class Statistic { Rank, Crank, Srank, Stcrank, C5core };

Statistic statistic_from_name(const std::string& name);
std::string statistic_name(Statistic s);

/// Value of the statistic on pi. C5core requires |pi| = 4 mod 5.
long long evaluate_statistic(Statistic s, const Partition& pi);

/// Counts of partitions of n by the statistic's residue mod m. All residues
/// 0..m-1 are present, zero counts included. C5core requires n = 4 mod 5.
std::map<int, BigInt> residue_counts(int n, Statistic s, int modulus);

}  // namespace rpl
