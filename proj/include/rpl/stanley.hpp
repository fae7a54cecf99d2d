#pragma once

#include <map>
#include <utility>

#include "rpl/partition.hpp"

namespace rpl {

/// Image of the even-part-extraction bijection pi -> (pi1, pi2).
/// pi1 collects half of each even-part pair (part 2i with frequency f
/// contributes floor(f/2) copies of i); pi2 keeps odd frequencies unchanged
/// and even frequencies reduced to their parity, so it has no repeated even
/// parts. |pi| = 4|pi1| + |pi2| and srank(pi) = srank(pi2).
struct Bijection1Image {
    Partition pi1;
    Partition pi2;
};

Bijection1Image bijection1(const Partition& pi);

/// True iff some even part occurs more than once.
bool has_repeated_even_part(const Partition& pi);

/// Inverse of bijection1; rejects a pi2 with a repeated even part.
Partition bijection1_inverse(const Bijection1Image& image);

/// Type A: bijection1 sends pi to ((1), pi2), i.e. f_2 in {2,3} and every
/// other even frequency is 0 or 1.
/// Type B: pi = (3,1), or all of: |pi| != 4, the largest part exceeds the
/// second by at least 2, the partition has at least two ones (conjugate gap
/// >= 2), lambda_1 - 2 and lambda_2 are not identical even integers, and no
/// even part repeats. The two classes are disjoint.
enum class TypeClass { TypeA, TypeB, Other };

TypeClass classify(const Partition& pi);

/// Correction term: 1 on type B partitions, 0 elsewhere.
int psi(const Partition& pi);

/// The weight- and srank-preserving bijection from type A onto type B.
Partition bijection2(const Partition& type_a);

/// Inverse of bijection2.
Partition bijection2_inverse(const Partition& type_b);

/// stcrank(pi) = crank(pi1) + srank(pi)/2 + psi(pi).
int stcrank(const Partition& pi);

/// P_i(k, m, n): partitions of n keyed by (srank mod 4, stcrank mod m).
/// Every residue pair is present in the map, zero counts included.
std::map<std::pair<int, int>, BigInt> refined_counts(int n, int crank_modulus);

/// S(n, r, s): partitions of n keyed by (number of odd parts, number of odd
/// parts of the conjugate). Only nonzero counts are stored.
std::map<std::pair<int, int>, BigInt> joint_odd_counts(int n);

}  // namespace rpl
