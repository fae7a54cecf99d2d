#include "rpl/checks.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "rpl/series.hpp"
#include "rpl/stanley.hpp"
#include "rpl/stats.hpp"
#include "rpl/tcore.hpp"
#include "rpl/textio.hpp"

namespace rpl {

namespace {

std::string str(long long v) { return std::to_string(v); }

void fail(CheckReport& rep, std::string input, std::string expected, std::string actual) {
    if (!rep.pass) return;  // keep the first counterexample
    rep.pass = false;
    rep.counterexample = Counterexample{std::move(input), std::move(expected), std::move(actual)};
}

void check_series_equal(CheckReport& rep, const std::string& label, const Series& lhs,
                        const Series& rhs) {
    SeriesComparison cmp = assert_equal(lhs, rhs);
    if (!cmp.equal)
        fail(rep, label + " at q^" + str(cmp.first_difference),
             rhs[cmp.first_difference].str(), lhs[cmp.first_difference].str());
}

// ---------------------------------------------------------------------------
// core statistics and enumeration
// ---------------------------------------------------------------------------

CheckReport run_enumeration_count(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(60);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        BigInt count = 0;
        for_each_partition(n, [&](const Partition&) { count += 1; });
        BigInt expected = partition_count(n);
        if (count != expected)
            fail(rep, "n=" + str(n), expected.str(), count.str());
    }
    return rep;
}

CheckReport run_conjugation_involution(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(30);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        for_each_partition(n, [&](const Partition& pi) {
            if (!rep.pass) return;
            Partition cc = pi.conjugate().conjugate();
            if (cc != pi) fail(rep, freq_token(pi), freq_token(pi), freq_token(cc));
        });
    }
    return rep;
}

CheckReport run_srank_conjugation(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(30);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        for_each_partition(n, [&](const Partition& pi) {
            if (!rep.pass) return;
            int sr = srank(pi);
            if (sr % 2 != 0)
                fail(rep, freq_token(pi), "even srank", str(sr));
            else if (srank(pi.conjugate()) != -sr)
                fail(rep, freq_token(pi), str(-sr), str(srank(pi.conjugate())));
            else if (pi == pi.conjugate() && sr != 0)
                fail(rep, freq_token(pi), "srank 0 on self-conjugate", str(sr));
        });
    }
    return rep;
}

void check_equidistribution(CheckReport& rep, Statistic stat, int modulus, int residue,
                            int max_arg) {
    for (int n = residue; n <= max_arg && rep.pass; n += modulus) {
        std::map<int, BigInt> counts = residue_counts(n, stat, modulus);
        BigInt expected = partition_count(n) / modulus;
        for (auto& [k, c] : counts) {
            if (c != expected) {
                fail(rep,
                     statistic_name(stat) + " residue " + str(k) + " at n=" + str(n),
                     expected.str(), c.str());
                break;
            }
        }
    }
}

CheckReport run_rank_equidistribution(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(49);
    rep.params["max_n_mod5"] = str(max_n);
    rep.params["max_n_mod7"] = str(std::min(max_n, 47));
    check_equidistribution(rep, Statistic::Rank, 5, 4, max_n);
    check_equidistribution(rep, Statistic::Rank, 7, 5, std::min(max_n, 47));
    return rep;
}

CheckReport run_crank_equidistribution(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(49);
    rep.params["max_n_mod5"] = str(max_n);
    rep.params["max_n_mod7"] = str(std::min(max_n, 47));
    rep.params["max_n_mod11"] = str(std::min(max_n, 39));
    check_equidistribution(rep, Statistic::Crank, 5, 4, max_n);
    check_equidistribution(rep, Statistic::Crank, 7, 5, std::min(max_n, 47));
    check_equidistribution(rep, Statistic::Crank, 11, 6, std::min(max_n, 39));
    return rep;
}

CheckReport run_crank_mod10(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(49);
    rep.params["max_n"] = str(max_n);
    for (int n = 4; n <= max_n && rep.pass; n += 5) {
        std::map<int, BigInt> by10 = residue_counts(n, Statistic::Crank, 10);
        std::map<int, BigInt> by2 = residue_counts(n, Statistic::Crank, 2);
        for (int alpha = 0; alpha < 2 && rep.pass; ++alpha) {
            if (by2[alpha] % 5 != 0) {
                fail(rep, "M(" + str(alpha) + ",2," + str(n) + ")",
                     "multiple of 5", by2[alpha].str());
                break;
            }
            for (int k = 0; k < 5; ++k) {
                if (by10[2 * k + alpha] * 5 != by2[alpha]) {
                    fail(rep, "M(" + str(2 * k + alpha) + ",10," + str(n) + ")",
                         BigInt(by2[alpha] / 5).str(), by10[2 * k + alpha].str());
                    break;
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// stcrank machinery
// ---------------------------------------------------------------------------

CheckReport run_bijection1_roundtrip(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(30);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        for_each_partition(n, [&](const Partition& pi) {
            if (!rep.pass) return;
            Bijection1Image img = bijection1(pi);
            if (has_repeated_even_part(img.pi2))
                fail(rep, freq_token(pi), "pi2 without repeated even parts",
                     freq_token(img.pi2));
            else if (4 * img.pi1.weight() + img.pi2.weight() != pi.weight())
                fail(rep, freq_token(pi), str(pi.weight()),
                     "4*" + str(img.pi1.weight()) + "+" + str(img.pi2.weight()));
            else if (srank(img.pi2) != srank(pi))
                fail(rep, freq_token(pi), str(srank(pi)), str(srank(img.pi2)));
            else if (bijection1_inverse(img) != pi)
                fail(rep, freq_token(pi), freq_token(pi),
                     freq_token(bijection1_inverse(img)));
        });
    }
    return rep;
}

CheckReport run_bijection2(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(30);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        BigInt type_a = 0, type_b = 0;
        for_each_partition(n, [&](const Partition& pi) {
            if (!rep.pass) return;
            TypeClass cls = classify(pi);
            if (cls == TypeClass::TypeA) {
                type_a += 1;
                Partition image = bijection2(pi);
                if (classify(image) != TypeClass::TypeB)
                    fail(rep, freq_token(pi), "type B image", freq_token(image));
                else if (image.weight() != pi.weight() || srank(image) != srank(pi))
                    fail(rep, freq_token(pi),
                         "weight " + str(pi.weight()) + ", srank " + str(srank(pi)),
                         "weight " + str(image.weight()) + ", srank " + str(srank(image)));
                else if (bijection2_inverse(image) != pi)
                    fail(rep, freq_token(image), freq_token(pi),
                         freq_token(bijection2_inverse(image)));
            } else if (cls == TypeClass::TypeB) {
                type_b += 1;
                Partition back = bijection2_inverse(pi);
                if (classify(back) != TypeClass::TypeA)
                    fail(rep, freq_token(pi), "type A preimage", freq_token(back));
                else if (bijection2(back) != pi)
                    fail(rep, freq_token(pi), freq_token(pi), freq_token(bijection2(back)));
            }
        });
        if (rep.pass && type_a != type_b)
            fail(rep, "n=" + str(n), "equinumerous type A and B",
                 type_a.str() + " vs " + type_b.str());
    }
    return rep;
}

CheckReport run_type_a_frequency(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(30);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        for_each_partition(n, [&](const Partition& pi) {
            if (!rep.pass) return;
            bool by_frequencies = pi.frequency(2) == 2 || pi.frequency(2) == 3;
            for (int v = 4; by_frequencies && v <= pi.largest(); v += 2)
                if (pi.frequency(v) > 1) by_frequencies = false;
            bool by_image = classify(pi) == TypeClass::TypeA;
            if (by_frequencies != by_image)
                fail(rep, freq_token(pi), by_frequencies ? "type A" : "not type A",
                     by_image ? "type A" : "not type A");
        });
    }
    return rep;
}

CheckReport run_stcrank_type_formulas(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(30);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        for_each_partition(n, [&](const Partition& pi) {
            if (!rep.pass) return;
            TypeClass cls = classify(pi);
            if (cls == TypeClass::Other) return;
            int expected = (cls == TypeClass::TypeA ? -1 : 1) + srank(pi) / 2;
            if (stcrank(pi) != expected)
                fail(rep, freq_token(pi), str(expected), str(stcrank(pi)));
        });
    }
    return rep;
}

CheckReport run_stcrank_equidistribution(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(49);
    rep.params["max_n"] = str(max_n);
    for (int n = 4; n <= max_n && rep.pass; n += 5) {
        auto counts = refined_counts(n, 5);
        for (int i : {0, 2}) {
            BigInt class_total = 0;
            for (int k = 0; k < 5; ++k) class_total += counts[{i, k}];
            if (class_total % 5 != 0) {
                fail(rep, "p_" + str(i) + "(" + str(n) + ")", "multiple of 5",
                     class_total.str());
                break;
            }
            for (int k = 0; k < 5; ++k) {
                if (counts[{i, k}] * 5 != class_total) {
                    fail(rep, "P_" + str(i) + "(" + str(k) + ",5," + str(n) + ")",
                         BigInt(class_total / 5).str(), counts[{i, k}].str());
                    break;
                }
            }
        }
        if (rep.pass && (counts[{1, 0}] != 0 || counts[{3, 0}] != 0))
            fail(rep, "n=" + str(n), "no odd srank classes", "nonzero class count");
    }
    return rep;
}

CheckReport run_partition_congruences(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(49);
    rep.params["max_n_mod5"] = str(max_n);
    rep.params["max_n_mod7"] = str(std::min(max_n, 47));
    for (int n = 4; n <= max_n && rep.pass; n += 5) {
        if (partition_count(n) % 5 != 0)
            fail(rep, "p(" + str(n) + ")", "0 mod 5", partition_count(n).str());
        auto counts = refined_counts(n, 1);
        BigInt p0 = counts[{0, 0}], p2 = counts[{2, 0}];
        if (rep.pass && p0 % 5 != 0)
            fail(rep, "p_0(" + str(n) + ")", "0 mod 5", p0.str());
        if (rep.pass && p2 % 5 != 0)
            fail(rep, "p_2(" + str(n) + ")", "0 mod 5", p2.str());
        if (rep.pass && p2 % 10 != 0)
            fail(rep, "p_2(" + str(n) + ")", "0 mod 10", p2.str());
        if (rep.pass && p0 + p2 != partition_count(n))
            fail(rep, "p_0+p_2 at n=" + str(n), partition_count(n).str(),
                 BigInt(p0 + p2).str());
    }
    for (int n = 5; n <= std::min(max_n, 47) && rep.pass; n += 7) {
        if (partition_count(n) % 7 != 0)
            fail(rep, "p(" + str(n) + ")", "0 mod 7", partition_count(n).str());
    }
    return rep;
}

// ---------------------------------------------------------------------------
// generating function identities
// ---------------------------------------------------------------------------

CheckReport run_stcrank_gf_factorization(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(25);
    rep.params["order"] = str(order);
    Series lhs = enumerative_series(order, SeriesWeight::StcrankSrank);
    Series rhs = enumerative_series(order, SeriesWeight::CrankQuadrupled) *
                 enumerative_series(order, SeriesWeight::DistinctEvenHalf);
    check_series_equal(rep, "stcrank/srank series vs factored form", lhs, rhs);
    return rep;
}

CheckReport run_stcrank_gf_product(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(25);
    rep.params["order"] = str(order);
    Series lhs = enumerative_series(order, SeriesWeight::StcrankSrank);
    Series rhs = build_named_series("lemma1_rhs", order);
    check_series_equal(rep, "stcrank/srank series vs product", lhs, rhs);
    return rep;
}

CheckReport run_joint_odd_gf(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(25);
    rep.params["order"] = str(order);
    Series lhs = enumerative_series(order, SeriesWeight::OddBoth);
    Series rhs = build_named_series("rsgf_rhs", order);
    check_series_equal(rep, "odd-parts joint series vs product", lhs, rhs);
    return rep;
}

CheckReport run_crank_gf(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(25);
    rep.params["order"] = str(order);
    Series lhs = enumerative_series(order, SeriesWeight::CrankAnomalous);
    Series rhs = build_named_series("crankgf_rhs", order);
    check_series_equal(rep, "crank series vs product", lhs, rhs);
    return rep;
}

CheckReport run_stanley_difference_gf(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(30);
    rep.params["order"] = str(order);
    Series lhs = enumerative_series(order, SeriesWeight::SrankSign);
    Series rhs = build_named_series("p02_rhs", order);
    check_series_equal(rep, "p0 - p2 series vs product", lhs, rhs);
    return rep;
}

CheckReport run_distinct_even_gf(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(30);
    rep.params["order"] = str(order);
    Series lhs = enumerative_series(order, SeriesWeight::DistinctEvenSrank);
    Series rhs = build_named_series("srankprod_rhs", order);
    check_series_equal(rep, "distinct-even srank series vs product", lhs, rhs);
    return rep;
}

CheckReport run_pentagonal_gf(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(200);
    rep.params["order"] = str(order);
    Series sparse(order);
    sparse.at(0).add_term(0, 0, 1);
    for (int k = 1;; ++k) {
        int g1 = k * (3 * k - 1) / 2;
        int g2 = k * (3 * k + 1) / 2;
        if (g1 >= order && g2 >= order) break;
        BigInt sign = (k % 2 == 1) ? -1 : 1;
        if (g1 < order) sparse.at(g1).add_term(0, 0, sign);
        if (g2 < order) sparse.at(g2).add_term(0, 0, sign);
    }
    check_series_equal(rep, "Euler product vs pentagonal expansion",
                       build_named_series("pentagonal", order), sparse);
    if (rep.pass) {
        Series inv = build_named_series("euler_inv", order);
        for (int k = 0; k < order && rep.pass; ++k) {
            if (inv[k].coeff(0, 0) != partition_count(k))
                fail(rep, "1/(q;q) at q^" + str(k), partition_count(k).str(),
                     inv[k].coeff(0, 0).str());
        }
    }
    return rep;
}

CheckReport run_triple_product(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(100);
    rep.params["order"] = str(order);
    check_series_equal(rep, "triple product", build_named_series("jtp_lhs", order),
                       build_named_series("jtp_rhs", order));
    return rep;
}

CheckReport run_triangular_gf(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(200);
    rep.params["order"] = str(order);
    Series lhs = build_named_series("jtpa_lhs", order);
    check_series_equal(rep, "triangular-number series", lhs,
                       build_named_series("jtpa_rhs", order));
    if (rep.pass)
        check_series_equal(rep, "quartic product form", lhs,
                           build_named_series("jtpa_quartic", order));
    return rep;
}

CheckReport run_quintic_root_product(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(60);
    rep.params["order"] = str(order);
    check_series_equal(rep, "fifth-root-of-unity product",
                       build_named_series("jtpb_lhs", order),
                       build_named_series("jtpb_rhs", order));
    return rep;
}

CheckReport run_tcore_gf(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(40);
    rep.params["order"] = str(order);
    rep.params["t"] = "2,3,5,7";
    for (int t : {2, 3, 5, 7}) {
        if (!rep.pass) break;
        check_series_equal(rep, "t-core series (t=" + str(t) + ")",
                           build_named_series("tcore_rhs", order, t),
                           build_named_series("theta_lattice", order, t));
    }
    return rep;
}

CheckReport run_alpha_lattice_sift(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(30);
    rep.params["order"] = str(order);
    Series cores = build_named_series("tcore_rhs", 5 * order, 5);
    Series lhs = shifted(arithmetic_slice(cores, 4, 5), 1);
    Series rhs = build_named_series("alpha_lattice", order);
    check_series_equal(rep, "sifted 5-core series vs alpha lattice", lhs, rhs);
    return rep;
}

CheckReport run_partition_sift(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(30);
    rep.params["order"] = str(order);
    rep.params["delta"] = "0,1,2,3,4";
    Series inv5 = build_named_series("euler_inv", order).pow(5);
    Series cores5 = build_named_series("tcore_rhs", 5 * order, 5);
    for (int delta = 0; delta < 5 && rep.pass; ++delta) {
        Series lhs(order);
        for (int k = 0; k < order; ++k)
            lhs.at(k).add_term(0, 0, partition_count(5 * k + delta));
        Series rhs = inv5 * arithmetic_slice(cores5, delta, 5);
        check_series_equal(rep, "p(5n+" + str(delta) + ") series vs sifted convolution",
                           lhs, rhs);
    }
    return rep;
}

CheckReport run_ramanujan_product(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(40);
    rep.params["order"] = str(order);
    check_series_equal(rep, "p(5n+4) series vs eta-quotient",
                       build_named_series("p_5n_plus_4", order),
                       build_named_series("rambest_rhs", order));
    return rep;
}

CheckReport run_roots_of_unity(const CheckParams& p) {
    CheckReport rep;
    int order = p.order.value_or(30);
    rep.params["order"] = str(order);
    Series g = enumerative_series(order, SeriesWeight::StcrankSrank);
    auto totals_text = [](const std::vector<BigInt>& totals) {
        std::ostringstream os;
        for (size_t i = 0; i < totals.size(); ++i) os << (i ? "," : "") << totals[i].str();
        return os.str();
    };
    CyclicReduceResult full = cyclic_reduce_check(g, 5, 4, 5);
    if (!full.all_equal) {
        fail(rep, "q^" + str(full.first_failure), "equal residue totals",
             totals_text(full.failing_totals));
        return rep;
    }
    for (int cls : {0, 2}) {
        CyclicReduceResult by_class =
            cyclic_reduce_check(g.y_residue_part(4, cls), 5, 4, 5);
        if (!by_class.all_equal) {
            fail(rep, "srank class " + str(cls) + " at q^" + str(by_class.first_failure),
                 "equal residue totals", totals_text(by_class.failing_totals));
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// t-core structure
// ---------------------------------------------------------------------------

CheckReport run_abacus_vs_rimhook(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(20);
    rep.params["max_n"] = str(max_n);
    rep.params["t"] = "2,3,5";
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        for_each_partition(n, [&](const Partition& pi) {
            if (!rep.pass) return;
            for (int t : {2, 3, 5}) {
                Partition by_abacus = t_core_of(pi, t);
                Partition by_stripping = rim_hook_core(pi, t);
                if (by_abacus != by_stripping) {
                    fail(rep, freq_token(pi) + " (t=" + str(t) + ")",
                         freq_token(by_stripping), freq_token(by_abacus));
                    return;
                }
                if (is_t_core(pi, t) != !has_rim_hook(pi, t)) {
                    fail(rep, freq_token(pi) + " (t=" + str(t) + ")",
                         "matching core predicates", "disagreement");
                    return;
                }
            }
        });
    }
    return rep;
}

CheckReport run_littlewood_roundtrip(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(25);
    rep.params["max_n"] = str(max_n);
    rep.params["t"] = "2,3,5,7";
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        for_each_partition(n, [&](const Partition& pi) {
            if (!rep.pass) return;
            for (int t : {2, 3, 5, 7}) {
                CoreQuotient cq = littlewood_decompose(pi, t);
                if (!is_t_core(cq.core, t)) {
                    fail(rep, freq_token(pi), "t-core core component", freq_token(cq.core));
                    return;
                }
                int quotient_weight = 0;
                for (const Partition& q : cq.quotient) quotient_weight += q.weight();
                if (cq.core.weight() + t * quotient_weight != pi.weight()) {
                    fail(rep, freq_token(pi) + " (t=" + str(t) + ")", str(pi.weight()),
                         str(cq.core.weight()) + "+" + str(t) + "*" + str(quotient_weight));
                    return;
                }
                Partition back = littlewood_compose(cq);
                if (back != pi) {
                    fail(rep, freq_token(pi) + " (t=" + str(t) + ")", freq_token(pi),
                         freq_token(back));
                    return;
                }
            }
        });
    }
    return rep;
}

CheckReport run_phi2_roundtrip(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(40);
    rep.params["max_weight"] = str(max_n);
    rep.params["t"] = "2,3,5,7";
    for (int t : {2, 3, 5, 7}) {
        if (!rep.pass) break;
        for (const NVector& nv : n_vector_lattice(t, max_n + 1)) {
            Partition core = phi2_inverse(nv);
            if (!is_t_core(core, t)) {
                fail(rep, "n-vector (t=" + str(t) + ")", "a t-core", freq_token(core));
                break;
            }
            if (core.weight() != n_vector_weight(nv)) {
                fail(rep, freq_token(core), str(n_vector_weight(nv)), str(core.weight()));
                break;
            }
            NVector round = phi2(core, t);
            if (round.n != nv.n) {
                fail(rep, freq_token(core), "n-vector round trip", "mismatch");
                break;
            }
        }
    }
    return rep;
}

CheckReport run_alpha_roundtrip(const CheckParams& p) {
    CheckReport rep;
    int q_bound = p.max_n.value_or(8);
    rep.params["max_Q"] = str(q_bound);
    for (const AlphaVector& av : alpha_lattice(q_bound + 1)) {
        NVector nv = n_from_alpha(av);
        long long sum = 0;
        for (long long v : nv.n) sum += v;
        long long dot_b = 0;
        for (int i = 0; i < 5; ++i) dot_b += i * nv.n[static_cast<size_t>(i)];
        if (sum != 0 || mod_floor(dot_b, 5) != 4) {
            fail(rep, "alpha vector", "zero-sum n-vector with n.b = 4 mod 5",
                 "sum " + str(sum) + ", n.b mod 5 = " + str(mod_floor(dot_b, 5)));
            break;
        }
        AlphaVector round = alpha_from_n(nv);
        if (round.a != av.a) {
            fail(rep, "alpha vector", "round trip", "mismatch");
            break;
        }
        if (5 * alpha_quadratic(av) - 1 != n_vector_weight(nv)) {
            fail(rep, "alpha vector", "weight 5Q-1 = " + str(5 * alpha_quadratic(av) - 1),
                 str(n_vector_weight(nv)));
            break;
        }
    }
    return rep;
}

CheckReport run_five_core_crank_forms(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(49);
    rep.params["max_n"] = str(max_n);
    for (int n = 4; n <= max_n && rep.pass; n += 5) {
        for_each_partition(n, [&](const Partition& pi) {
            if (!rep.pass) return;
            int alpha_form = five_core_crank(pi);
            const NVector nv = core_n_vector(pi, 5);
            int n_form = mod_floor(2 * (1 + nv.n[0] - nv.n[1] - nv.n[2] + nv.n[3]), 5);
            const RVector rv = residue_vector(pi, 5);
            long long r_sum = 2;
            for (int i = -2; i <= 2; ++i) r_sum += i * rv.r[static_cast<size_t>(2 - i)];
            int r_form = mod_floor(r_sum, 5);
            if (alpha_form != n_form || alpha_form != r_form)
                fail(rep, freq_token(pi), str(alpha_form),
                     str(n_form) + "/" + str(r_form));
        });
    }
    return rep;
}

CheckReport run_orbit_structure_impl(const CheckParams& p, OrbitVariant variant) {
    CheckReport rep;
    int max_n = p.max_n.value_or(49);
    rep.params["max_n"] = str(max_n);
    bool srank_variant = variant == OrbitVariant::SrankPreserving;
    for (int n = 4; n <= max_n && rep.pass; n += 5) {
        std::map<int, BigInt> orbits_per_class;
        std::map<int, BigInt> partitions_per_class;
        for_each_partition(n, [&](const Partition& pi) {
            if (!rep.pass) return;
            int cls = srank_variant ? mod_floor(srank(pi), 4) : 0;
            partitions_per_class[cls] += 1;
            std::array<Partition, 5> members;
            members[0] = pi;
            for (int i = 1; i < 5; ++i) members[static_cast<size_t>(i)] =
                orbit_op(members[static_cast<size_t>(i - 1)], variant);
            if (orbit_op(members[4], variant) != pi) {
                fail(rep, freq_token(pi), "fifth iterate is the identity", "it is not");
                return;
            }
            const Partition* least = &members[0];
            for (const Partition& m : members)
                if (m < *least) least = &m;
            if (*least != pi) return;  // count each orbit at its least member
            std::set<int> cranks;
            std::set<Partition> distinct;
            for (const Partition& m : members) {
                cranks.insert(five_core_crank(m));
                distinct.insert(m);
                if (m.weight() != n) {
                    fail(rep, freq_token(pi), "weight preserved", freq_token(m));
                    return;
                }
                if (srank_variant && mod_floor(srank(m), 4) != cls) {
                    fail(rep, freq_token(pi), "constant srank class along orbit",
                         freq_token(m));
                    return;
                }
            }
            if (distinct.size() != 5 || cranks.size() != 5) {
                fail(rep, freq_token(pi), "five distinct members and crank residues",
                     str(static_cast<long long>(distinct.size())) + " members, " +
                         str(static_cast<long long>(cranks.size())) + " residues");
                return;
            }
            for (int i = 1; i < 5; ++i) {
                if (five_core_crank(members[static_cast<size_t>(i)]) !=
                    (five_core_crank(members[static_cast<size_t>(i - 1)]) + 1) % 5) {
                    fail(rep, freq_token(pi), "crank increments along orbit", "it does not");
                    return;
                }
            }
            orbits_per_class[cls] += 1;
        });
        if (!rep.pass) break;
        for (auto& [cls, total] : partitions_per_class) {
            if (total != orbits_per_class[cls] * 5) {
                fail(rep, "n=" + str(n) + ", class " + str(cls),
                     BigInt(total / 5).str() + " orbits", orbits_per_class[cls].str());
                break;
            }
        }
    }
    return rep;
}

CheckReport run_orbit_structure(const CheckParams& p) {
    return run_orbit_structure_impl(p, OrbitVariant::Plain);
}

CheckReport run_srank_orbit_structure(const CheckParams& p) {
    return run_orbit_structure_impl(p, OrbitVariant::SrankPreserving);
}

CheckReport run_five_core_scaling(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(40);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        BigInt lhs = core_count(5 * n + 4, 5);
        BigInt rhs = 5 * core_count(n, 5);
        if (lhs != rhs)
            fail(rep, "a_5(" + str(5 * n + 4) + ") vs 5*a_5(" + str(n) + ")", rhs.str(),
                 lhs.str());
    }
    return rep;
}

CheckReport run_theta_bijection(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(30);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        std::set<Partition> images;
        for (const Partition& core : five_cores_of(n)) {
            Partition image = theta_map(core);
            if (image.weight() != 5 * n + 4) {
                fail(rep, freq_token(core), str(5 * n + 4), str(image.weight()));
                break;
            }
            if (!is_t_core(image, 5)) {
                fail(rep, freq_token(core), "5-core image", freq_token(image));
                break;
            }
            if (five_core_crank(image) != 0) {
                fail(rep, freq_token(core), "crank 0 image",
                     str(five_core_crank(image)));
                break;
            }
            if (mod_floor(srank(image), 4) != mod_floor(srank(core), 4)) {
                fail(rep, freq_token(core), "srank class preserved",
                     str(srank(core)) + " -> " + str(srank(image)));
                break;
            }
            int cubes_in = srank_from_n_vector(phi2(core, 5));
            int cubes_out = srank_from_n_vector(phi2(image, 5));
            if (cubes_in != cubes_out) {
                fail(rep, freq_token(core), "cube sums agree mod 4",
                     str(cubes_in) + " vs " + str(cubes_out));
                break;
            }
            images.insert(image);
        }
        if (!rep.pass) break;
        BigInt target = core_count(5 * n + 4, 5, 0);
        if (BigInt(static_cast<long long>(images.size())) != target)
            fail(rep, "n=" + str(n), target.str() + " crank-0 5-cores of " + str(5 * n + 4),
                 str(static_cast<long long>(images.size())) + " distinct images");
    }
    return rep;
}

CheckReport run_five_core_refinements(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(30);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        for (int i : {0, 2}) {
            BigInt refined = core_count(5 * n + 4, 5, std::nullopt, i);
            if (refined % 5 != 0) {
                fail(rep, "a_5," + str(i) + "(" + str(5 * n + 4) + ")", "multiple of 5",
                     refined.str());
                break;
            }
            for (int j = 0; j < 5; ++j) {
                BigInt cell = core_count(5 * n + 4, 5, j, i);
                if (cell * 5 != refined) {
                    fail(rep, "a_5," + str(i) + "^" + str(j) + "(" + str(5 * n + 4) + ")",
                         BigInt(refined / 5).str(), cell.str());
                    break;
                }
            }
            if (!rep.pass) break;
            BigInt base = core_count(n, 5, std::nullopt, i);
            if (refined != 5 * base) {
                fail(rep, "a_5," + str(i) + "(" + str(5 * n + 4) + ")",
                     BigInt(5 * base).str(), refined.str());
                break;
            }
            BigInt crank0 = core_count(5 * n + 4, 5, 0, i);
            if (crank0 != base) {
                fail(rep, "a_5," + str(i) + "^0(" + str(5 * n + 4) + ")", base.str(),
                     crank0.str());
                break;
            }
        }
    }
    return rep;
}

CheckReport run_srank_cube_formula(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(40);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        for (const Partition& core : five_cores_of(n)) {
            NVector nv = phi2(core, 5);
            int direct = mod_floor(srank(core), 4);
            int via_cubes = srank_from_n_vector(nv);
            if (via_cubes != direct) {
                fail(rep, freq_token(core), str(direct), str(via_cubes));
                break;
            }
            if (n % 5 == 4) {
                int via_alpha = srank_from_alpha(alpha_from_n(nv));
                if (via_alpha != direct) {
                    fail(rep, freq_token(core) + " (alpha form)", str(direct),
                         str(via_alpha));
                    break;
                }
            }
        }
    }
    return rep;
}

CheckReport run_srank_decomposition(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(25);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        for_each_partition(n, [&](const Partition& pi) {
            if (!rep.pass) return;
            int direct = mod_floor(srank(pi), 4);
            int assembled = srank_decompose(pi);
            if (assembled != direct) {
                fail(rep, freq_token(pi), str(direct), str(assembled));
                return;
            }
            if (n % 5 == 4) {
                // alpha-vector form: cross terms pair each quotient weight
                // with a sum of two alpha components.
                CoreQuotient cq = littlewood_decompose(pi, 5);
                AlphaVector av = alpha_from_n(phi2(cq.core, 5));
                static constexpr int kPairs[5][2] = {{0, 4}, {2, 3}, {1, 2}, {0, 1}, {3, 4}};
                long long total = srank_from_alpha(av);
                for (int i = 0; i < 5; ++i) {
                    total += srank(cq.quotient[static_cast<size_t>(i)]);
                    total += 2 *
                             (av.a[static_cast<size_t>(kPairs[i][0])] +
                              av.a[static_cast<size_t>(kPairs[i][1])]) *
                             cq.quotient[static_cast<size_t>(i)].weight();
                }
                if (mod_floor(total, 4) != direct)
                    fail(rep, freq_token(pi) + " (alpha form)", str(direct),
                         str(mod_floor(total, 4)));
            }
        });
    }
    return rep;
}

CheckReport run_quadrupling_structure(const CheckParams& p) {
    CheckReport rep;
    int max_n = p.max_n.value_or(25);
    rep.params["max_n"] = str(max_n);
    for (int n = 0; n <= max_n && rep.pass; ++n) {
        std::set<Partition> images;
        for (const Partition& core : five_cores_of(n)) {
            Partition image = quadrupling_map(core);
            if (image.weight() != 4 * n + 3) {
                fail(rep, freq_token(core), str(4 * n + 3), str(image.weight()));
                break;
            }
            if (!is_t_core(image, 5)) {
                fail(rep, freq_token(core), "5-core image", freq_token(image));
                break;
            }
            if (mod_floor(srank(image), 4) != 0) {
                fail(rep, freq_token(core), "srank 0 mod 4", str(srank(image)));
                break;
            }
            images.insert(image);
        }
        if (!rep.pass) break;
        BigInt target = core_count(4 * n + 3, 5, std::nullopt, 0);
        if (BigInt(static_cast<long long>(images.size())) != target)
            fail(rep, "n=" + str(n),
                 target.str() + " srank-0 5-cores of " + str(4 * n + 3),
                 str(static_cast<long long>(images.size())) + " distinct images");
    }
    return rep;
}

CheckReport run_a50_formulas(const CheckParams& p) {
    CheckReport rep;
    int max_arg = p.max_n.value_or(60);
    rep.params["max_arg"] = str(max_arg);
    for (int m = 0; m <= max_arg && rep.pass; ++m) {
        BigInt lhs = core_count(m, 5, std::nullopt, 0);
        BigInt rhs;
        switch (m % 4) {
            case 0:
            case 1: rhs = core_count(m, 5); break;
            case 2: rhs = 0; break;
            case 3: rhs = core_count((m - 3) / 4, 5); break;
        }
        if (lhs != rhs)
            fail(rep, "a_5,0(" + str(m) + ")", rhs.str(), lhs.str());
    }
    return rep;
}

// ---------------------------------------------------------------------------
// reference tables for n = 9
// ---------------------------------------------------------------------------

CheckReport run_classification_grid_9(const CheckParams&) {
    CheckReport rep;
    rep.params["n"] = "9";
    const auto& expected = reference_grid_9();
    std::array<std::array<std::multiset<std::string>, 5>, 2> actual;
    int total = 0;
    for_each_partition(9, [&](const Partition& pi) {
        int row = mod_floor(srank(pi), 4) / 2;  // srank class 0 -> 0, 2 -> 1
        int col = mod_floor(stcrank(pi), 5);
        actual[static_cast<size_t>(row)][static_cast<size_t>(col)].insert(freq_token(pi));
        ++total;
    });
    if (total != 30) fail(rep, "partitions of 9", "30", str(total));
    for (int row = 0; row < 2 && rep.pass; ++row) {
        for (int col = 0; col < 5 && rep.pass; ++col) {
            std::multiset<std::string> want(
                expected[static_cast<size_t>(row)][static_cast<size_t>(col)].begin(),
                expected[static_cast<size_t>(row)][static_cast<size_t>(col)].end());
            if (actual[static_cast<size_t>(row)][static_cast<size_t>(col)] != want) {
                std::ostringstream got;
                for (const auto& tok :
                     actual[static_cast<size_t>(row)][static_cast<size_t>(col)])
                    got << tok << " ";
                fail(rep, "cell srank=" + str(2 * row) + ", stcrank=" + str(col),
                     "reference cell contents", got.str());
            }
        }
    }
    return rep;
}

CheckReport run_orbit_table_9(const CheckParams&) {
    CheckReport rep;
    rep.params["n"] = "9";
    auto rows = orbit_rows(9, OrbitVariant::SrankPreserving);
    if (rows.size() != 6) {
        fail(rep, "orbits of 9", "6", str(static_cast<long long>(rows.size())));
        return rep;
    }
    std::multiset<std::string> actual;
    for (const auto& row : rows) {
        std::ostringstream os;
        for (int c = 0; c < 5; ++c) os << freq_token(row[static_cast<size_t>(c)]) << "|";
        actual.insert(os.str());
    }
    std::multiset<std::string> expected;
    for (const auto& row : reference_orbit_rows_9()) {
        std::ostringstream os;
        for (int c = 0; c < 5; ++c) os << row[static_cast<size_t>(c)] << "|";
        expected.insert(os.str());
    }
    if (actual != expected) fail(rep, "orbit rows of 9", "reference rows", "mismatch");
    if (rep.pass) {
        for (const Partition& m : rows.front())
            if (!is_t_core(m, 5))
                fail(rep, "first orbit row", "all 5-cores", freq_token(m));
    }
    return rep;
}

}  // namespace

const std::array<std::array<std::vector<std::string>, 5>, 2>& reference_grid_9() {
    static const std::array<std::array<std::vector<std::string>, 5>, 2> grid = {{
        {{{"3^3", "1^3.2^1.4^1", "1^1.3^1.5^1", "4^1.5^1"},
          {"1^5.2^2", "1^4.5^1", "1^2.2^1.5^1", "9^1"},
          {"1^4.2^1.3^1", "1^3.3^2", "1^1.4^2", "2^2.5^1"},
          {"1^1.2^4", "1^6.3^1", "1^1.2^1.6^1", "2^1.7^1"},
          {"1^9", "1^2.2^2.3^1", "2^3.3^1", "1^2.7^1"}}},
        {{{"1^3.2^3", "1^3.6^1"},
          {"1^1.2^1.3^2", "1^2.3^1.4^1"},
          {"1^5.4^1", "1^1.8^1"},
          {"1^7.2^1", "1^1.2^2.4^1"},
          {"2^1.3^1.4^1", "3^1.6^1"}}},
    }};
    return grid;
}

const std::vector<std::array<std::string, 5>>& reference_orbit_rows_9() {
    static const std::vector<std::array<std::string, 5>> rows = {
        {"1^4.5^1", "1^3.3^2", "1^4.2^1.3^1", "1^1.2^1.6^1", "2^2.5^1"},
        {"1^5.2^2", "2^3.3^1", "1^2.7^1", "4^1.5^1", "1^3.2^1.4^1"},
        {"3^3", "1^9", "1^1.3^1.5^1", "1^2.2^2.3^1", "9^1"},
        {"2^1.7^1", "1^2.2^1.5^1", "1^1.2^4", "1^6.3^1", "1^1.4^2"},
        {"1^3.2^3", "1^3.6^1", "2^1.3^1.4^1", "1^1.8^1", "1^2.3^1.4^1"},
        {"3^1.6^1", "1^1.2^2.4^1", "1^7.2^1", "1^1.2^1.3^2", "1^5.4^1"},
    };
    return rows;
}

const std::vector<CheckDef>& check_catalog() {
    static const std::vector<CheckDef> catalog = {
        {"enumeration-count", "partition enumeration agrees with the pentagonal recurrence",
         {}, run_enumeration_count},
        {"conjugation-involution", "conjugation is an involution", {},
         run_conjugation_involution},
        {"srank-conjugation", "srank is even, negates under conjugation, 0 on self-conjugates",
         {}, run_srank_conjugation},
        {"rank-equidistribution", "rank mod 5 / mod 7 splits p(5n+4), p(7n+5) evenly", {},
         run_rank_equidistribution},
        {"crank-equidistribution", "crank mod 5/7/11 splits p(5n+4), p(7n+5), p(11n+6) evenly",
         {}, run_crank_equidistribution},
        {"crank-mod10-refinement", "M(2k+a,10,5n+4) = M(a,2,5n+4)/5", {}, run_crank_mod10},
        {"bijection1-roundtrip", "even-part extraction inverts and preserves weight/srank",
         {"bijection1"}, run_bijection1_roundtrip},
        {"bijection2-bijection", "type A <-> type B map is a weight/srank-preserving bijection",
         {"bijection2"}, run_bijection2},
        {"type-a-frequency", "type A membership matches the frequency characterization", {},
         run_type_a_frequency},
        {"stcrank-type-formulas", "stcrank = srank/2 -+ 1 on type A / type B", {},
         run_stcrank_type_formulas},
        {"stcrank-equidistribution",
         "stcrank mod 5 splits each srank class of p(5n+4) into five equal parts",
         {"theorem1"}, run_stcrank_equidistribution},
        {"partition-congruences", "p(5n+4), p_0, p_2 mod 5; p_2 mod 10; p(7n+5) mod 7", {},
         run_partition_congruences},
        {"stcrank-gf-factorization",
         "stcrank/srank series factors through the extraction bijection", {},
         run_stcrank_gf_factorization},
        {"stcrank-gf-product", "stcrank/srank series equals its Pochhammer product",
         {"lemma1"}, run_stcrank_gf_product},
        {"joint-odd-gf", "odd-parts joint distribution series equals its product", {},
         run_joint_odd_gf},
        {"crank-gf", "crank series (with the weight-1 correction) equals its product", {},
         run_crank_gf},
        {"stanley-difference-gf", "sum (p_0(n)-p_2(n)) q^n equals its product", {},
         run_stanley_difference_gf},
        {"distinct-even-gf", "srank series over no-repeated-even partitions equals its product",
         {}, run_distinct_even_gf},
        {"pentagonal-gf", "(q;q) matches the pentagonal expansion; 1/(q;q) matches p(n)", {},
         run_pentagonal_gf},
        {"triple-product", "Jacobi triple product, exact Laurent coefficients",
         {"jtp"}, run_triple_product},
        {"triangular-gf", "(q^4;q^4)(-q;q^2) equals the triangular-number series",
         {"jtpa"}, run_triangular_gf},
        {"quintic-root-product", "fifth-root product identity via exponent reduction mod 5",
         {"jtpb"}, run_quintic_root_product},
        {"tcore-gf", "t-core product series equals the zero-sum lattice series, t in {2,3,5,7}",
         {}, run_tcore_gf},
        {"alpha-lattice-sift", "sifted 5-core series equals the alpha-vector lattice series",
         {}, run_alpha_lattice_sift},
        {"partition-sift", "p(5n+4) series equals 1/(q)^5 times the sifted 5-core series", {},
         run_partition_sift},
        {"ramanujan-product", "sum p(5n+4) q^n = 5 (q^5;q^5)^5 / (q;q)^6",
         {"rambest"}, run_ramanujan_product},
        {"roots-of-unity-vanishing",
         "stcrank residue totals agree at q^(5n+4), overall and per srank class", {},
         run_roots_of_unity},
        {"abacus-vs-rimhook", "abacus core agrees with literal rim-hook stripping", {},
         run_abacus_vs_rimhook},
        {"littlewood-roundtrip", "core/quotient decomposition inverts, weight identity holds",
         {}, run_littlewood_roundtrip},
        {"phi2-roundtrip", "t-core <-> n-vector maps invert; quadratic weight formula holds",
         {}, run_phi2_roundtrip},
        {"alpha-roundtrip", "n-vector <-> alpha-vector change of variables inverts", {},
         run_alpha_roundtrip},
        {"five-core-crank-forms", "the three printed forms of the 5-core crank agree", {},
         run_five_core_crank_forms},
        {"orbit-structure", "orbits of size 5 with all crank residues partition p(5n+4)", {},
         run_orbit_structure},
        {"srank-orbit-structure",
         "srank-preserving orbits split each srank class of p(5n+4) into five equal parts",
         {"theorem2"}, run_srank_orbit_structure},
        {"five-core-scaling", "a_5(5n+4) = 5 a_5(n)", {}, run_five_core_scaling},
        {"theta-bijection", "theta maps 5-cores of n onto crank-0 5-cores of 5n+4, srank-preserving",
         {}, run_theta_bijection},
        {"five-core-refinements", "refined 5-core counts by srank class and crank residue", {},
         run_five_core_refinements},
        {"srank-cube-formula", "srank of a 5-core equals sum (n_i+i)^3 mod 4",
         {"elegant1"}, run_srank_cube_formula},
        {"srank-decomposition", "srank mod 4 assembles from core, quotient and cross terms",
         {"elegant2"}, run_srank_decomposition},
        {"quadrupling-structure", "quadrupling maps 5-cores of n onto srank-0 5-cores of 4n+3",
         {}, run_quadrupling_structure},
        {"a50-formulas", "a_5,0 equals a_5, 0, or a_5(n) according to the argument mod 4", {},
         run_a50_formulas},
        {"classification-grid-9", "the 30 partitions of 9 land in the reference srank/stcrank grid",
         {}, run_classification_grid_9},
        {"orbit-table-9", "the 6 orbit rows of 9 match the reference table", {},
         run_orbit_table_9},
    };
    return catalog;
}

const CheckDef* find_check(const std::string& name_or_alias) {
    for (const CheckDef& def : check_catalog()) {
        if (def.name == name_or_alias) return &def;
        for (const std::string& alias : def.aliases)
            if (alias == name_or_alias) return &def;
    }
    return nullptr;
}

CheckReport run_check(const std::string& name_or_alias, const CheckParams& params) {
    const CheckDef* def = find_check(name_or_alias);
    if (def == nullptr)
        throw std::invalid_argument("unknown check '" + name_or_alias + "'");
    auto start = std::chrono::steady_clock::now();
    CheckReport rep = def->run(params);
    auto stop = std::chrono::steady_clock::now();
    rep.name = def->name;
    rep.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    return rep;
}

}  // namespace rpl
