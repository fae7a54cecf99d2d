#include "rpl/stanley.hpp"

namespace rpl {

bool has_repeated_even_part(const Partition& pi) {
    const auto& parts = pi.parts();
    for (size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] == parts[i - 1] && parts[i] % 2 == 0) return true;
    }
    return false;
}

Bijection1Image bijection1(const Partition& pi) {
    std::map<int, int> f1, f2;
    for (auto [value, count] : pi.frequencies()) {
        if (value % 2 == 0) {
            if (count / 2 > 0) f1[value / 2] += count / 2;
            if (count % 2 > 0) f2[value] = count % 2;
        } else {
            f2[value] = count;
        }
    }
    return {Partition::from_frequencies(f1), Partition::from_frequencies(f2)};
}

Partition bijection1_inverse(const Bijection1Image& image) {
    if (has_repeated_even_part(image.pi2))
        throw std::domain_error("bijection1_inverse: pi2 has a repeated even part");
    std::map<int, int> f = image.pi2.frequencies();
    for (auto [value, count] : image.pi1.frequencies())
        f[2 * value] += 2 * count;
    return Partition::from_frequencies(f);
}

TypeClass classify(const Partition& pi) {
    static const Partition kThreeOne{std::vector<int>{3, 1}};
    if (bijection1(pi).pi1 == Partition(std::vector<int>{1})) return TypeClass::TypeA;
    if (pi == kThreeOne) return TypeClass::TypeB;
    int lam1 = pi.part_or_zero(1);
    int lam2 = pi.part_or_zero(2);
    Partition conj = pi.conjugate();
    int gap_conj = conj.part_or_zero(1) - conj.part_or_zero(2);
    bool bad_even_pair = (lam1 - 2 == lam2) && (lam2 % 2 == 0);
    if (pi.weight() != 4 && lam1 - lam2 >= 2 && gap_conj >= 2 && !bad_even_pair &&
        !has_repeated_even_part(pi))
        return TypeClass::TypeB;
    return TypeClass::Other;
}

int psi(const Partition& pi) { return classify(pi) == TypeClass::TypeB ? 1 : 0; }

Partition bijection2(const Partition& type_a) {
    if (classify(type_a) != TypeClass::TypeA)
        throw std::domain_error("bijection2: input is not of type A");
    std::map<int, int> f = type_a.frequencies();
    int m = type_a.largest();
    if (m > 2) {
        f[1] += 2;
        f[2] -= 2;
        f[m] -= 1;
        f[m + 2] += 1;
    } else if (f[2] == 3) {
        f.clear();
        f[1] = type_a.frequency(1) + 2;
        f[4] = 1;
    } else {  // m == 2, f_2 == 2
        f.clear();
        f[1] = type_a.frequency(1) + 1;
        f[3] = 1;
    }
    return Partition::from_frequencies(f);
}

Partition bijection2_inverse(const Partition& type_b) {
    if (classify(type_b) != TypeClass::TypeB)
        throw std::domain_error("bijection2_inverse: input is not of type B");
    std::map<int, int> f = type_b.frequencies();
    int top = type_b.largest();
    if (top == 3) {
        f.clear();
        f[1] = type_b.frequency(1) - 1;
        f[2] = 2;
    } else if (top == 4) {
        f.clear();
        f[1] = type_b.frequency(1) - 2;
        f[2] = 3;
    } else {
        f[1] -= 2;
        f[2] += 2;
        f[top] -= 1;
        f[top - 2] += 1;
    }
    return Partition::from_frequencies(f);
}

int stcrank(const Partition& pi) {
    int sr = srank(pi);
    if (sr % 2 != 0) throw std::logic_error("stcrank: srank must be even");
    return ag_crank(bijection1(pi).pi1) + sr / 2 + psi(pi);
}

std::map<std::pair<int, int>, BigInt> refined_counts(int n, int crank_modulus) {
    if (crank_modulus <= 0) throw std::domain_error("refined_counts: modulus must be positive");
    std::map<std::pair<int, int>, BigInt> counts;
    for (int i : {0, 1, 2, 3})
        for (int k = 0; k < crank_modulus; ++k) counts[{i, k}] = 0;
    for_each_partition(n, [&](const Partition& pi) {
        int i = mod_floor(srank(pi), 4);
        int k = mod_floor(stcrank(pi), crank_modulus);
        counts[{i, k}] += 1;
    });
    return counts;
}

std::map<std::pair<int, int>, BigInt> joint_odd_counts(int n) {
    std::map<std::pair<int, int>, BigInt> counts;
    for_each_partition(n, [&](const Partition& pi) {
        counts[{odd_parts(pi), odd_parts(pi.conjugate())}] += 1;
    });
    return counts;
}

}  // namespace rpl
