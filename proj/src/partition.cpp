#include "rpl/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace rpl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
    }
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<int>())) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }
}

Partition Partition::from_frequencies(const std::map<int, int>& freq) {
    std::vector<int> parts;
    for (auto it = freq.rbegin(); it != freq.rend(); ++it) {
        auto [value, count] = *it;
        if (count < 0) throw std::invalid_argument("Partition: negative frequency");
        if (value <= 0 && count > 0)
            throw std::invalid_argument("Partition: parts must be positive");
        parts.insert(parts.end(), static_cast<size_t>(count), value);
    }
    return Partition(std::move(parts));
}

int Partition::weight() const noexcept {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

int Partition::part_or_zero(int j) const noexcept {
    if (j < 1 || j > num_parts()) return 0;
    return parts_[static_cast<size_t>(j - 1)];
}

int Partition::frequency(int v) const noexcept {
    int c = 0;
    for (int p : parts_) c += (p == v);
    return c;
}

std::map<int, int> Partition::frequencies() const {
    std::map<int, int> f;
    for (int p : parts_) ++f[p];
    return f;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    conj.reserve(static_cast<size_t>(largest()));
    for (int j = 1; j <= largest(); ++j) {
        int count = 0;
        for (int p : parts_) {
            if (p >= j) ++count;
            else break;
        }
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

int odd_parts(const Partition& pi) noexcept {
    int c = 0;
    for (int p : pi.parts()) c += (p & 1);
    return c;
}

int srank(const Partition& pi) {
    return odd_parts(pi) - odd_parts(pi.conjugate());
}

int dyson_rank(const Partition& pi) noexcept {
    if (pi.empty()) return 0;
    return pi.largest() - pi.num_parts();
}

int ag_crank(const Partition& pi) noexcept {
    int ones = pi.frequency(1);
    if (ones == 0) return pi.largest();
    int above = 0;
    for (int p : pi.parts()) {
        if (p > ones) ++above;
        else break;
    }
    return above - ones;
}

BigInt partition_count(int n) {
    if (n < 0) return 0;
    static std::mutex mu;
    static std::vector<BigInt> memo{1};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        BigInt total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            BigInt term = 0;
            if (g1 <= m) term += memo[static_cast<size_t>(m - g1)];
            if (g2 <= m) term += memo[static_cast<size_t>(m - g2)];
            if (k % 2 == 1) total += term;
            else total -= term;
        }
        memo.push_back(total);
    }
    return memo[static_cast<size_t>(n)];
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace rpl
