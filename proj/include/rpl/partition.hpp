#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rpl {

/// Exact arbitrary-size integer used for every count and series coefficient.
using BigInt = boost::multiprecision::cpp_int;

/// Reduce v into [0, m).
inline int mod_floor(long long v, int m) {
    long long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

/// A partition of a nonnegative integer: a nonincreasing sequence of positive
/// parts. The empty sequence is the unique partition of 0. Values are
/// immutable after construction.
class Partition {
public:
    Partition() = default;

    /// Parts are sorted into canonical nonincreasing order; nonpositive parts
    /// are rejected.
    explicit Partition(std::vector<int> parts);

    static Partition from_frequencies(const std::map<int, int>& freq);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// 1-based part access; parts beyond the end read as 0.
    int part_or_zero(int j) const noexcept;

    /// Frequency f_v of the part value v.
    int frequency(int v) const noexcept;

    /// The frequency view (value -> multiplicity), zero entries omitted.
    std::map<int, int> frequencies() const;

    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Number of odd parts O(pi).
int odd_parts(const Partition& pi) noexcept;

/// Stanley rank O(pi) - O(pi'). Always even.
int srank(const Partition& pi);

/// Largest part minus number of parts; 0 for the empty partition.
int dyson_rank(const Partition& pi) noexcept;

/// Andrews-Garvan crank: the largest part if pi has no ones, otherwise the
/// number of parts larger than the number of ones, minus the number of ones.
/// crank of the empty partition is 0.
int ag_crank(const Partition& pi) noexcept;

/// p(n) by the Euler pentagonal-number recurrence (no enumeration).
BigInt partition_count(int n);

/// Visits every partition of n exactly once, in lexicographically decreasing
/// part order: (n), (n-1,1), ..., (1^n). The visited reference is reused.
template <typename F>
void for_each_partition(int n, F&& visit) {
    if (n < 0) throw std::domain_error("for_each_partition: n must be >= 0");
    std::vector<int> parts;
    Partition scratch;
    if (n == 0) {
        visit(static_cast<const Partition&>(scratch));
        return;
    }
    parts.assign(1, n);
    for (;;) {
        scratch = Partition(parts);
        visit(static_cast<const Partition&>(scratch));
        // Find the rightmost part greater than 1, shrink it by one and
        // redistribute the tail greedily; this steps down in lex order.
        int i = static_cast<int>(parts.size()) - 1;
        while (i >= 0 && parts[i] == 1) --i;
        if (i < 0) break;
        int total = parts[i] + static_cast<int>(parts.size()) - 1 - i;
        int cap = parts[i] - 1;
        parts.resize(static_cast<size_t>(i));
        while (total > 0) {
            int give = total < cap ? total : cap;
            parts.push_back(give);
            total -= give;
        }
    }
}

/// All partitions of n, materialized in enumeration order.
std::vector<Partition> partitions_of(int n);

}  // namespace rpl
