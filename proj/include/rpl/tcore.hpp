#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rpl/partition.hpp"

namespace rpl {

/// Cell counts of the t-residue diagram: r[i] is the number of cells whose
/// (column - row) is congruent to i mod t.
struct RVector {
    int t = 0;
    std::vector<long long> r;
};

/// Integer coordinates of a t-core: n[i] = r[i] - r[(i+1) mod t], summing to 0.
struct NVector {
    int t = 0;
    std::vector<long long> n;
};

/// Coordinates of a 5-core of weight 4 mod 5; components sum to 1.
struct AlphaVector {
    std::array<long long, 5> a{};
};

/// Littlewood decomposition: a t-core together with the t quotient
/// partitions, satisfying |pi| = |core| + t * sum |quotient[i]|.
struct CoreQuotient {
    int t = 0;
    Partition core;
    std::vector<Partition> quotient;
};

RVector residue_vector(const Partition& pi, int t);

/// True iff pi has no rim hook of length t (abacus criterion: every runner
/// of the beta-number configuration is fully pushed down).
bool is_t_core(const Partition& pi, int t);

CoreQuotient littlewood_decompose(const Partition& pi, int t);

/// Inverse of littlewood_decompose; rejects a core field that is not a t-core.
Partition littlewood_compose(const CoreQuotient& cq);

/// The t-core of pi (the core component of the decomposition).
Partition t_core_of(const Partition& pi, int t);

/// n-vector of a t-core via the residue diagram. Because stripping one rim
/// hook of length t lowers every residue count by exactly one, the cyclic
/// differences of r(pi) already equal the n-vector of the core of pi, so this
/// accepts any partition and coordinatizes its core.
NVector core_n_vector(const Partition& pi, int t);

/// n-vector of a t-core; rejects non-cores.
NVector phi2(const Partition& core, int t);

/// The unique t-core with the given zero-sum n-vector.
Partition phi2_inverse(const NVector& nv);

/// (t/2) * ||n||^2 + b_t . n, the weight of phi2_inverse(n).
long long n_vector_weight(const NVector& nv);

/// Change of variables between n-vectors with n.b = 4 (mod 5) and integer
/// 5-vectors with unit coordinate sum.
AlphaVector alpha_from_n(const NVector& nv);
NVector n_from_alpha(const AlphaVector& av);

/// Q(alpha) = ||alpha||^2 - sum of cyclically adjacent products. The matching
/// 5-core has weight 5*Q - 1.
long long alpha_quadratic(const AlphaVector& av);

/// 5-core crank c5(pi) = 1 + sum i*alpha_i (mod 5), defined for |pi| = 4 mod 5.
int five_core_crank(const Partition& pi);

enum class OrbitVariant {
    Plain,            ///< cycle the alpha-vector, keep the quotient
    SrankPreserving,  ///< cycle the alpha-vector and shuffle the quotient
};

/// One step of the orbit operator on partitions of weight 4 mod 5: weight is
/// preserved, c5 increases by one, and the fifth iterate is the identity.
Partition orbit_op(const Partition& pi, OrbitVariant variant);

/// Orbit of pi under the operator, listed by c5 residue 0..4.
std::array<Partition, 5> orbit_of(const Partition& pi, OrbitVariant variant);

/// The orbit decomposition of the partitions of n (n = 4 mod 5), one row per
/// orbit with members placed by c5 residue. Rows whose members are 5-cores
/// come first; within each group rows sort by their lexicographically least
/// member (and, for the srank-preserving operator, by srank class first).
std::vector<std::array<Partition, 5>> orbit_rows(int n, OrbitVariant variant);

/// n-vector bijection sending 5-cores of n onto the 5-cores of 5n+4 whose
/// 5-core crank is 0; preserves srank mod 4.
Partition theta_map(const Partition& core5);

/// n-vector bijection sending 5-cores of n onto the 5-cores of 4n+3 whose
/// srank is 0 mod 4.
Partition quadrupling_map(const Partition& core5);

/// srank of the 5-core with n-vector n, mod 4: sum (n_i + i)^3 reduced to
/// {0,1,2,3}.
int srank_from_n_vector(const NVector& nv);

/// Alpha-vector form of the same residue: cyclic sum of a_i a_{i+1} (a_i - a_{i+1}).
int srank_from_alpha(const AlphaVector& av);

/// srank(pi) mod 4 assembled from the decomposition of pi: the core term,
/// the quotient sranks, and the cross terms 2|quotient_i|(n_i + i).
int srank_decompose(const Partition& pi);

/// All 5-cores of n (enumerated through the n-vector lattice), sorted by
/// parts in decreasing lexicographic order.
std::vector<Partition> five_cores_of(int n);

/// a_t(n), optionally filtered by 5-core crank residue and/or srank class.
/// Filters require t = 5; the crank filter additionally requires n = 4 mod 5.
BigInt core_count(int n, int t, std::optional<int> crank_residue = std::nullopt,
                  std::optional<int> srank_class = std::nullopt);

/// Reference implementation of the core by literal rim-hook stripping on the
/// Young diagram: while some cell has hook length exactly t, remove the
/// border strip it subtends. Independent of the abacus code path.
Partition rim_hook_core(const Partition& pi, int t);

/// True iff some cell of the diagram has hook length exactly t.
bool has_rim_hook(const Partition& pi, int t);

/// Zero-sum integer t-vectors whose quadratic-form weight is below the bound,
/// complete by a box argument on the coordinates.
std::vector<NVector> n_vector_lattice(int t, long long weight_bound);

/// Integer 5-vectors with unit sum and Q(alpha) below the bound.
std::vector<AlphaVector> alpha_lattice(long long q_bound);

}  // namespace rpl
