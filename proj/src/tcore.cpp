#include "rpl/tcore.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace rpl {

namespace {

void require_t(int t) {
    if (t < 2) throw std::domain_error("t-core operations require t >= 2");
}

/// Beta numbers lambda_j + N - j for j = 1..N with N a multiple of t chosen
/// larger than the number of parts. Runner i holds the betas congruent to i
/// mod t; bead heights are beta / t. Since N = 0 mod t, the runner of the
/// j-th bead matches the residue of lambda_j - j.
struct Abacus {
    int t;
    int slots_per_runner;                         // N / t
    std::vector<std::vector<int>> heights;        // per runner, decreasing

    Abacus(const Partition& pi, int t_) : t(t_) {
        int ell = pi.num_parts();
        slots_per_runner = ell / t + 1;
        int n_betas = slots_per_runner * t;
        heights.assign(static_cast<size_t>(t), {});
        for (int j = 1; j <= n_betas; ++j) {
            int beta = pi.part_or_zero(j) + n_betas - j;
            heights[static_cast<size_t>(beta % t)].push_back(beta / t);
        }
        for (auto& h : heights) std::sort(h.begin(), h.end(), std::greater<int>());
    }

    long long charge(int runner) const {
        return static_cast<long long>(heights[static_cast<size_t>(runner)].size()) -
               slots_per_runner;
    }

    bool runner_pushed(int runner) const {
        const auto& h = heights[static_cast<size_t>(runner)];
        long long c = static_cast<long long>(h.size());
        long long sum = std::accumulate(h.begin(), h.end(), 0LL);
        return sum == c * (c - 1) / 2;
    }

    /// Quotient partition read off one runner: the j-th highest bead at
    /// height h contributes the part h - (count - j).
    Partition runner_quotient(int runner) const {
        const auto& h = heights[static_cast<size_t>(runner)];
        int count = static_cast<int>(h.size());
        std::vector<int> parts;
        for (int j = 1; j <= count; ++j) {
            int part = h[static_cast<size_t>(j - 1)] - (count - j);
            if (part == 0) break;  // beads below are fully pushed
            parts.push_back(part);
        }
        return Partition(std::move(parts));
    }
};

/// Rebuild a partition from justified-or-not runner bead heights.
Partition partition_from_heights(int t, const std::vector<std::vector<int>>& heights) {
    std::vector<int> betas;
    for (int i = 0; i < t; ++i)
        for (int h : heights[static_cast<size_t>(i)]) betas.push_back(h * t + i);
    std::sort(betas.begin(), betas.end(), std::greater<int>());
    int n_betas = static_cast<int>(betas.size());
    std::vector<int> parts;
    for (int j = 1; j <= n_betas; ++j) {
        int part = betas[static_cast<size_t>(j - 1)] - n_betas + j;
        if (part < 0) throw std::logic_error("abacus: invalid bead configuration");
        if (part == 0) break;
        parts.push_back(part);
    }
    return Partition(std::move(parts));
}

/// Bead heights for the t-core with the given charges, together with the
/// quotient partitions stacked on top: runner i gets c_i = n_i + K beads at
/// heights part_j + c_i - j.
Partition compose_from(const NVector& nv, const std::vector<Partition>& quotient) {
    int t = nv.t;
    long long base = 1;
    for (int i = 0; i < t; ++i) {
        long long need = -nv.n[static_cast<size_t>(i)];
        if (i < static_cast<int>(quotient.size()))
            need = std::max(need, quotient[static_cast<size_t>(i)].num_parts() -
                                      nv.n[static_cast<size_t>(i)]);
        base = std::max(base, need + 1);
    }
    std::vector<std::vector<int>> heights(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) {
        long long c = nv.n[static_cast<size_t>(i)] + base;
        const Partition* quot =
            i < static_cast<int>(quotient.size()) ? &quotient[static_cast<size_t>(i)] : nullptr;
        for (long long j = 1; j <= c; ++j) {
            int part = quot ? quot->part_or_zero(static_cast<int>(j)) : 0;
            heights[static_cast<size_t>(i)].push_back(static_cast<int>(part + c - j));
        }
    }
    return partition_from_heights(t, heights);
}

}  // namespace

RVector residue_vector(const Partition& pi, int t) {
    require_t(t);
    RVector rv{t, std::vector<long long>(static_cast<size_t>(t), 0)};
    const auto& parts = pi.parts();
    for (int i = 1; i <= pi.num_parts(); ++i)
        for (int j = 1; j <= parts[static_cast<size_t>(i - 1)]; ++j)
            ++rv.r[static_cast<size_t>(mod_floor(j - i, t))];
    return rv;
}

bool is_t_core(const Partition& pi, int t) {
    require_t(t);
    Abacus ab(pi, t);
    for (int i = 0; i < t; ++i)
        if (!ab.runner_pushed(i)) return false;
    return true;
}

CoreQuotient littlewood_decompose(const Partition& pi, int t) {
    require_t(t);
    Abacus ab(pi, t);
    NVector nv{t, {}};
    std::vector<Partition> quotient;
    for (int i = 0; i < t; ++i) {
        nv.n.push_back(ab.charge(i));
        quotient.push_back(ab.runner_quotient(i));
    }
    return {t, phi2_inverse(nv), std::move(quotient)};
}

Partition littlewood_compose(const CoreQuotient& cq) {
    require_t(cq.t);
    if (static_cast<int>(cq.quotient.size()) != cq.t)
        throw std::domain_error("littlewood_compose: quotient must have t components");
    return compose_from(phi2(cq.core, cq.t), cq.quotient);
}

Partition t_core_of(const Partition& pi, int t) {
    require_t(t);
    Abacus ab(pi, t);
    NVector nv{t, {}};
    for (int i = 0; i < t; ++i) nv.n.push_back(ab.charge(i));
    return phi2_inverse(nv);
}

NVector core_n_vector(const Partition& pi, int t) {
    RVector rv = residue_vector(pi, t);
    NVector nv{t, std::vector<long long>(static_cast<size_t>(t), 0)};
    for (int i = 0; i < t; ++i)
        nv.n[static_cast<size_t>(i)] =
            rv.r[static_cast<size_t>(i)] - rv.r[static_cast<size_t>((i + 1) % t)];
    return nv;
}

NVector phi2(const Partition& core, int t) {
    if (!is_t_core(core, t)) throw std::domain_error("phi2: partition is not a t-core");
    return core_n_vector(core, t);
}

Partition phi2_inverse(const NVector& nv) {
    require_t(nv.t);
    if (static_cast<int>(nv.n.size()) != nv.t)
        throw std::domain_error("phi2_inverse: vector has wrong length");
    if (std::accumulate(nv.n.begin(), nv.n.end(), 0LL) != 0)
        throw std::domain_error("phi2_inverse: components must sum to zero");
    return compose_from(nv, {});
}

long long n_vector_weight(const NVector& nv) {
    long long sq = 0, lin = 0;
    for (int i = 0; i < nv.t; ++i) {
        long long v = nv.n[static_cast<size_t>(i)];
        sq += v * v;
        lin += i * v;
    }
    // t * ||n||^2 is even: n_i^2 = n_i (mod 2) and the components sum to 0.
    return nv.t * sq / 2 + lin;
}

AlphaVector alpha_from_n(const NVector& nv) {
    if (nv.t != 5) throw std::domain_error("alpha_from_n: requires t = 5");
    if (std::accumulate(nv.n.begin(), nv.n.end(), 0LL) != 0)
        throw std::domain_error("alpha_from_n: components must sum to zero");
    const auto& n = nv.n;
    long long s = 4 * n[0] + 3 * n[1] + 2 * n[2] + n[3];
    if (mod_floor(s - 1, 5) != 0)
        throw std::domain_error("alpha_from_n: n . b must be 4 mod 5");
    long long a4 = (s - 1) / 5;
    AlphaVector av;
    av.a = {n[0] - a4, n[0] + n[1] - 2 * a4, n[0] + n[1] + n[2] - 2 * a4,
            n[0] + n[1] + n[2] + n[3] - a4, a4};
    return av;
}

NVector n_from_alpha(const AlphaVector& av) {
    const auto& a = av.a;
    if (a[0] + a[1] + a[2] + a[3] + a[4] != 1)
        throw std::domain_error("n_from_alpha: components must sum to one");
    NVector nv{5, {a[0] + a[4], -a[0] + a[1] + a[4], -a[1] + a[2], -a[2] + a[3] - a[4],
                   -a[3] - a[4]}};
    return nv;
}

long long alpha_quadratic(const AlphaVector& av) {
    const auto& a = av.a;
    long long norm = 0, cyc = 0;
    for (int i = 0; i < 5; ++i) {
        norm += a[static_cast<size_t>(i)] * a[static_cast<size_t>(i)];
        cyc += a[static_cast<size_t>(i)] * a[static_cast<size_t>((i + 1) % 5)];
    }
    return norm - cyc;
}

int five_core_crank(const Partition& pi) {
    if (pi.weight() % 5 != 4)
        throw std::domain_error("five_core_crank: weight must be 4 mod 5");
    AlphaVector av = alpha_from_n(core_n_vector(pi, 5));
    long long s = 1;
    for (int i = 0; i < 5; ++i) s += i * av.a[static_cast<size_t>(i)];
    return mod_floor(s, 5);
}

Partition orbit_op(const Partition& pi, OrbitVariant variant) {
    if (pi.weight() % 5 != 4)
        throw std::domain_error("orbit_op: weight must be 4 mod 5");
    CoreQuotient cq = littlewood_decompose(pi, 5);
    AlphaVector av = alpha_from_n(phi2(cq.core, 5));
    AlphaVector cycled;
    cycled.a = {av.a[4], av.a[0], av.a[1], av.a[2], av.a[3]};
    std::vector<Partition> quot = cq.quotient;
    if (variant == OrbitVariant::SrankPreserving)
        quot = {cq.quotient[4], cq.quotient[2], cq.quotient[3], cq.quotient[0],
                cq.quotient[1]};
    return compose_from(n_from_alpha(cycled), quot);
}

std::array<Partition, 5> orbit_of(const Partition& pi, OrbitVariant variant) {
    std::array<Partition, 5> by_crank;
    std::array<bool, 5> seen{};
    Partition current = pi;
    for (int step = 0; step < 5; ++step) {
        int c = five_core_crank(current);
        if (seen[static_cast<size_t>(c)])
            throw std::logic_error("orbit_of: repeated crank residue inside an orbit");
        seen[static_cast<size_t>(c)] = true;
        by_crank[static_cast<size_t>(c)] = current;
        current = orbit_op(current, variant);
    }
    return by_crank;
}

std::vector<std::array<Partition, 5>> orbit_rows(int n, OrbitVariant variant) {
    if (n % 5 != 4) throw std::domain_error("orbit_rows: n must be 4 mod 5");
    struct Row {
        std::array<Partition, 5> members;
        bool core_row;
        int srank_class;
        Partition least;
    };
    std::vector<Row> rows;
    std::set<Partition> seen;
    for_each_partition(n, [&](const Partition& pi) {
        if (seen.count(pi)) return;
        std::array<Partition, 5> members = orbit_of(pi, variant);
        Row row{members, is_t_core(members[0], 5), 0, members[0]};
        for (const Partition& m : members) {
            seen.insert(m);
            row.least = std::min(row.least, m);
        }
        if (variant == OrbitVariant::SrankPreserving)
            row.srank_class = mod_floor(srank(members[0]), 4);
        rows.push_back(std::move(row));
    });
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.core_row != b.core_row) return a.core_row;
        if (a.srank_class != b.srank_class) return a.srank_class < b.srank_class;
        return a.least < b.least;
    });
    std::vector<std::array<Partition, 5>> out;
    out.reserve(rows.size());
    for (auto& row : rows) out.push_back(std::move(row.members));
    return out;
}

Partition theta_map(const Partition& core5) {
    if (!is_t_core(core5, 5)) throw std::domain_error("theta_map: input must be a 5-core");
    const auto& n = phi2(core5, 5).n;
    NVector image{5,
                  {n[1] + 2 * n[2] + 2 * n[4] + 1, -n[1] - n[2] + n[3] + n[4] + 1,
                   2 * n[1] + n[2] + 2 * n[3], -2 * n[2] - 2 * n[3] - n[4] - 1,
                   -2 * n[1] - n[3] - 2 * n[4] - 1}};
    return phi2_inverse(image);
}

Partition quadrupling_map(const Partition& core5) {
    if (!is_t_core(core5, 5))
        throw std::domain_error("quadrupling_map: input must be a 5-core");
    const auto& n = phi2(core5, 5).n;
    NVector image{5, {2 * n[1], 1 + 2 * n[4], 2 * n[2], -1 + 2 * n[0], 2 * n[3]}};
    return phi2_inverse(image);
}

int srank_from_n_vector(const NVector& nv) {
    if (nv.t != 5) throw std::domain_error("srank_from_n_vector: requires t = 5");
    long long total = 0;
    for (int i = 0; i < 5; ++i) {
        long long v = nv.n[static_cast<size_t>(i)] + i;
        total += v * v * v;
    }
    return mod_floor(total, 4);
}

int srank_from_alpha(const AlphaVector& av) {
    long long total = 0;
    for (int i = 0; i < 5; ++i) {
        long long x = av.a[static_cast<size_t>(i)];
        long long y = av.a[static_cast<size_t>((i + 1) % 5)];
        total += x * y * (x - y);
    }
    return mod_floor(total, 4);
}

int srank_decompose(const Partition& pi) {
    CoreQuotient cq = littlewood_decompose(pi, 5);
    NVector nv = phi2(cq.core, 5);
    long long total = srank_from_n_vector(nv);
    for (int i = 0; i < 5; ++i) {
        const Partition& quot = cq.quotient[static_cast<size_t>(i)];
        total += srank(quot);
        total += 2LL * quot.weight() * (nv.n[static_cast<size_t>(i)] + i);
    }
    return mod_floor(total, 4);
}

namespace {

/// Remove the border strip subtended by the hook of cell (i, j): rows i..f-1
/// take the next row's length minus one and row f (the foot row, the last
/// row meeting column j) shrinks to j - 1 cells.
Partition remove_border_strip(const Partition& pi, int i, int j) {
    std::vector<int> parts = pi.parts();
    int foot = pi.conjugate().part_or_zero(j);
    for (int r = i; r < foot; ++r)
        parts[static_cast<size_t>(r - 1)] = parts[static_cast<size_t>(r)] - 1;
    parts[static_cast<size_t>(foot - 1)] = j - 1;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

std::optional<std::pair<int, int>> find_hook_cell(const Partition& pi, int t) {
    const auto& parts = pi.parts();
    Partition conj = pi.conjugate();
    for (int i = 1; i <= pi.num_parts(); ++i) {
        for (int j = 1; j <= parts[static_cast<size_t>(i - 1)]; ++j) {
            int arm = parts[static_cast<size_t>(i - 1)] - j;
            int leg = conj.part_or_zero(j) - i;
            if (arm + leg + 1 == t) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

}  // namespace

bool has_rim_hook(const Partition& pi, int t) {
    require_t(t);
    return find_hook_cell(pi, t).has_value();
}

Partition rim_hook_core(const Partition& pi, int t) {
    require_t(t);
    Partition current = pi;
    while (auto cell = find_hook_cell(current, t))
        current = remove_border_strip(current, cell->first, cell->second);
    return current;
}

std::vector<NVector> n_vector_lattice(int t, long long weight_bound) {
    require_t(t);
    std::vector<NVector> out;
    if (weight_bound <= 0) return out;
    // Coordinate box: each summand (t/2)x^2 + ix is at least -(t-1)^2/(2t), so
    // a vector of weight < W has (t/2)|x|^2 - (t-1)|x| < W + (t-1)^3/(2t) in
    // every coordinate; solve the quadratic and pad by one.
    double w = static_cast<double>(weight_bound) +
               std::pow(t - 1.0, 3) / (2.0 * t);
    long long box = static_cast<long long>(
                        std::ceil(((t - 1.0) + std::sqrt((t - 1.0) * (t - 1.0) +
                                                         2.0 * t * w)) /
                                  t)) +
                    1;
    NVector nv{t, std::vector<long long>(static_cast<size_t>(t), 0)};
    std::function<void(int, long long)> rec = [&](int i, long long partial_sum) {
        if (i == t - 1) {
            long long last = -partial_sum;
            if (last < -box || last > box) return;
            nv.n[static_cast<size_t>(i)] = last;
            if (n_vector_weight(nv) < weight_bound) out.push_back(nv);
            return;
        }
        for (long long v = -box; v <= box; ++v) {
            nv.n[static_cast<size_t>(i)] = v;
            rec(i + 1, partial_sum + v);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<AlphaVector> alpha_lattice(long long q_bound) {
    std::vector<AlphaVector> out;
    if (q_bound <= 0) return out;
    // Q(alpha) is half the sum of squared cyclic differences, so the spread
    // max - min is at most sqrt(10 Q)/2 and every component lies within that
    // distance of the mean 1/5.
    double spread = std::sqrt(10.0 * static_cast<double>(q_bound)) / 2.0;
    long long lo = static_cast<long long>(std::floor(0.2 - spread)) - 1;
    long long hi = static_cast<long long>(std::ceil(0.2 + spread)) + 1;
    AlphaVector av;
    std::function<void(int, long long)> rec = [&](int i, long long partial_sum) {
        if (i == 4) {
            long long last = 1 - partial_sum;
            if (last < lo || last > hi) return;
            av.a[4] = last;
            if (alpha_quadratic(av) < q_bound) out.push_back(av);
            return;
        }
        for (long long v = lo; v <= hi; ++v) {
            av.a[static_cast<size_t>(i)] = v;
            rec(i + 1, partial_sum + v);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<Partition> five_cores_of(int n) {
    std::vector<Partition> cores;
    for (const NVector& nv : n_vector_lattice(5, static_cast<long long>(n) + 1))
        if (n_vector_weight(nv) == n) cores.push_back(phi2_inverse(nv));
    std::sort(cores.begin(), cores.end(), std::greater<Partition>());
    return cores;
}

BigInt core_count(int n, int t, std::optional<int> crank_residue,
                  std::optional<int> srank_class) {
    require_t(t);
    if ((crank_residue || srank_class) && t != 5)
        throw std::domain_error("core_count: filters require t = 5");
    if (crank_residue && n % 5 != 4)
        throw std::domain_error("core_count: crank filter requires n = 4 mod 5");
    BigInt count = 0;
    for (const NVector& nv : n_vector_lattice(t, static_cast<long long>(n) + 1)) {
        if (n_vector_weight(nv) != n) continue;
        if (crank_residue || srank_class) {
            Partition core = phi2_inverse(nv);
            if (crank_residue && five_core_crank(core) != mod_floor(*crank_residue, 5))
                continue;
            if (srank_class && mod_floor(srank(core), 4) != mod_floor(*srank_class, 4))
                continue;
        }
        count += 1;
    }
    return count;
}

}  // namespace rpl
