#include <doctest.h>

#include <set>

#include "rpl/tcore.hpp"
#include "rpl/textio.hpp"

using namespace rpl;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}

TEST_CASE("residue vectors") {
    CHECK(residue_vector(P({}), 5).r == std::vector<long long>{0, 0, 0, 0, 0});
    CHECK(residue_vector(P({5, 1, 1, 1, 1}), 5).r == std::vector<long long>{1, 2, 2, 2, 2});
    CHECK(residue_vector(P({1}), 5).r == std::vector<long long>{1, 0, 0, 0, 0});
    CHECK_THROWS_AS(residue_vector(P({1}), 1), std::domain_error);
    // cell counts add up to the weight
    for (int t : {2, 3, 5})
        for_each_partition(10, [&](const Partition& pi) {
            long long total = 0;
            for (long long r : residue_vector(pi, t).r) total += r;
            CHECK(total == pi.weight());
        });
}

TEST_CASE("5-core recognition") {
    CHECK(is_t_core(P({5, 1, 1, 1, 1}), 5));
    CHECK(is_t_core(P({2, 2, 2}), 5));  // max hook length is 4
    CHECK_FALSE(is_t_core(P({5}), 5));
    CHECK_FALSE(is_t_core(P({3, 2, 1}), 5));
    for_each_partition(4, [&](const Partition& pi) { CHECK(is_t_core(pi, 5)); });
    // the six 5-cores of 6
    int count = 0;
    for_each_partition(6, [&](const Partition& pi) { count += is_t_core(pi, 5); });
    CHECK(count == 6);
    CHECK(core_count(6, 5) == 6);
}

TEST_CASE("rim-hook oracle basics") {
    CHECK(has_rim_hook(P({5}), 5));
    CHECK_FALSE(has_rim_hook(P({2, 2, 2}), 5));
    CHECK(rim_hook_core(P({6}), 5) == P({1}));
    CHECK(rim_hook_core(P({3, 2, 1}), 5) == P({1}));
    CHECK(rim_hook_core(P({2, 2, 2}), 5) == P({2, 2, 2}));
}

TEST_CASE("littlewood decomposition") {
    CoreQuotient cq = littlewood_decompose(P({3, 3, 3}), 5);
    CHECK(cq.core == P({2, 2}));
    int quotient_weight = 0;
    for (const Partition& q : cq.quotient) quotient_weight += q.weight();
    CHECK(cq.core.weight() + 5 * quotient_weight == 9);
    CHECK(littlewood_compose(cq) == P({3, 3, 3}));

    // a core decomposes trivially
    CoreQuotient trivial = littlewood_decompose(P({5, 1, 1, 1, 1}), 5);
    CHECK(trivial.core == P({5, 1, 1, 1, 1}));
    for (const Partition& q : trivial.quotient) CHECK(q.empty());

    // compose rejects a non-core core field
    CoreQuotient bad{5, P({5}), {P({}), P({}), P({}), P({}), P({})}};
    CHECK_THROWS_AS(littlewood_compose(bad), std::domain_error);
    CHECK_THROWS_AS(littlewood_compose(CoreQuotient{5, P({}), {}}), std::domain_error);
}

TEST_CASE("phi2 on small cores") {
    CHECK(phi2(P({}), 5).n == std::vector<long long>{0, 0, 0, 0, 0});
    CHECK(phi2(P({5, 1, 1, 1, 1}), 5).n == std::vector<long long>{-1, 0, 0, 0, 1});
    // the single-cell canary: the weight formula must give 1
    NVector one = phi2(P({1}), 5);
    CHECK(one.n == std::vector<long long>{1, 0, 0, 0, -1});
    CHECK(n_vector_weight(one) == 1);
    CHECK(phi2_inverse(one) == P({1}));
    CHECK_THROWS_AS(phi2(P({5}), 5), std::domain_error);
    CHECK_THROWS_AS(phi2_inverse(NVector{5, {1, 0, 0, 0, 0}}), std::domain_error);
}

TEST_CASE("alpha vectors") {
    AlphaVector av = alpha_from_n(NVector{5, {-1, 0, 0, 0, 1}});
    CHECK(av.a == std::array<long long, 5>{0, 1, 1, 0, -1});
    CHECK(alpha_quadratic(av) == 2);

    AlphaVector unit{{1, 0, 0, 0, 0}};
    CHECK(alpha_quadratic(unit) == 1);
    CHECK(n_vector_weight(n_from_alpha(unit)) == 4);

    CHECK_THROWS_AS(alpha_from_n(NVector{5, {1, 0, 0, 0, -1}}), std::domain_error);
    CHECK_THROWS_AS(n_from_alpha(AlphaVector{{1, 1, 0, 0, 0}}), std::domain_error);
}

TEST_CASE("five-core crank of the cores of 9") {
    CHECK(five_core_crank(P({5, 1, 1, 1, 1})) == 0);
    CHECK(five_core_crank(P({3, 3, 1, 1, 1})) == 1);
    CHECK(five_core_crank(P({3, 2, 1, 1, 1, 1})) == 2);
    CHECK(five_core_crank(P({6, 2, 1})) == 3);
    CHECK(five_core_crank(P({5, 2, 2})) == 4);
    CHECK_THROWS_AS(five_core_crank(P({5})), std::domain_error);
}

TEST_CASE("orbit operator") {
    CHECK_THROWS_AS(orbit_op(P({5}), OrbitVariant::Plain), std::domain_error);
    for_each_partition(9, [&](const Partition& pi) {
        Partition plain = pi, srk = pi;
        for (int i = 0; i < 5; ++i) {
            CHECK(orbit_op(plain, OrbitVariant::Plain).weight() == 9);
            plain = orbit_op(plain, OrbitVariant::Plain);
            srk = orbit_op(srk, OrbitVariant::SrankPreserving);
        }
        CHECK(plain == pi);
        CHECK(srk == pi);
    });
    // the orbit of the hook 5-core is the set of all 5-cores of 9
    std::array<Partition, 5> orbit = orbit_of(P({5, 1, 1, 1, 1}), OrbitVariant::Plain);
    std::set<Partition> members(orbit.begin(), orbit.end());
    std::vector<Partition> cores = five_cores_of(9);
    CHECK(members == std::set<Partition>(cores.begin(), cores.end()));
}

TEST_CASE("orbit rows of 4") {
    auto rows = orbit_rows(4, OrbitVariant::SrankPreserving);
    REQUIRE(rows.size() == 1);
    // p(4) = 5 partitions, one per crank residue
    std::set<Partition> members(rows[0].begin(), rows[0].end());
    CHECK(members.size() == 5);
    CHECK_THROWS_AS(orbit_rows(5, OrbitVariant::Plain), std::domain_error);
}

TEST_CASE("theta map") {
    Partition image = theta_map(P({}));
    CHECK(image == P({2, 2}));
    CHECK(phi2(image, 5).n == std::vector<long long>{1, 1, 0, -1, -1});
    CHECK(five_core_crank(image) == 0);
    CHECK_THROWS_AS(theta_map(P({5})), std::domain_error);
}

TEST_CASE("quadrupling map") {
    Partition image = quadrupling_map(P({}));
    CHECK(image == P({2, 1}));
    CHECK(phi2(image, 5).n == std::vector<long long>{0, 1, 0, -1, 0});
    CHECK(mod_floor(srank(image), 4) == 0);
    CHECK_THROWS_AS(quadrupling_map(P({5})), std::domain_error);
}

TEST_CASE("srank formulas on small vectors") {
    CHECK(srank_from_n_vector(NVector{5, {0, 0, 0, 0, 0}}) == 0);
    CHECK(srank_from_n_vector(NVector{5, {-1, 0, 0, 0, 1}}) == 0);
    CHECK(srank_from_n_vector(NVector{5, {0, 1, 0, 0, -1}}) == 2);  // the core (2)
    CHECK(srank_decompose(P({2, 2, 2})) == mod_floor(srank(P({2, 2, 2})), 4));
}

TEST_CASE("core counts") {
    CHECK(core_count(9, 5) == 5);
    CHECK(core_count(4, 5) == 5);
    for (int n = 0; n <= 10; ++n) CHECK(core_count(4 * n + 2, 5, std::nullopt, 0) == 0);
    CHECK_THROWS_AS(core_count(9, 3, 0), std::domain_error);
    CHECK_THROWS_AS(core_count(8, 5, 1), std::domain_error);
    // filters compose: summing crank cells recovers the srank class count
    BigInt total = 0;
    for (int j = 0; j < 5; ++j) total += core_count(9, 5, j, 0);
    CHECK(total == core_count(9, 5, std::nullopt, 0));
}

TEST_CASE("five_cores_of matches filtering") {
    for (int n = 0; n <= 25; ++n) {
        std::set<Partition> by_lattice;
        for (const Partition& c : five_cores_of(n)) by_lattice.insert(c);
        CHECK(BigInt(static_cast<long long>(by_lattice.size())) == core_count(n, 5));
        std::set<Partition> by_filter;
        for_each_partition(n, [&](const Partition& pi) {
            if (is_t_core(pi, 5)) by_filter.insert(pi);
        });
        CHECK(by_lattice == by_filter);
    }
}

TEST_CASE("n-vector lattice enumeration is complete for small weights") {
    // every zero-sum vector of weight w <= 12 found by direct search over a
    // generous box must appear in the lattice enumeration
    for (int t : {2, 3, 5}) {
        std::set<std::vector<long long>> found;
        for (const NVector& nv : n_vector_lattice(t, 13)) found.insert(nv.n);
        int cores = 0;
        for (int n = 0; n <= 12; ++n)
            for_each_partition(n, [&](const Partition& pi) {
                if (!is_t_core(pi, t)) return;
                ++cores;
                CHECK(found.count(phi2(pi, t).n) == 1);
            });
        CHECK(static_cast<int>(found.size()) == cores);
    }
}
