#include "rpl/series.hpp"

#include <algorithm>

#include "rpl/stanley.hpp"
#include "rpl/tcore.hpp"

namespace rpl {

Series::Series(int order) {
    if (order < 1) throw std::domain_error("Series: order must be >= 1");
    coeffs_.assign(static_cast<size_t>(order), LaurentPoly{});
}

Series Series::one(int order) {
    Series s(order);
    s.coeffs_[0] = LaurentPoly::constant(1);
    return s;
}

Series& Series::operator+=(const Series& rhs) {
    if (order() != rhs.order()) throw std::invalid_argument("Series: order mismatch");
    for (int k = 0; k < order(); ++k) coeffs_[static_cast<size_t>(k)] += rhs[k];
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    if (order() != rhs.order()) throw std::invalid_argument("Series: order mismatch");
    for (int k = 0; k < order(); ++k) coeffs_[static_cast<size_t>(k)] -= rhs[k];
    return *this;
}

Series operator+(Series lhs, const Series& rhs) {
    lhs += rhs;
    return lhs;
}

Series operator-(Series lhs, const Series& rhs) {
    lhs -= rhs;
    return lhs;
}

Series operator*(const Series& lhs, const Series& rhs) {
    if (lhs.order() != rhs.order()) throw std::invalid_argument("Series: order mismatch");
    Series out(lhs.order());
    for (int i = 0; i < lhs.order(); ++i) {
        if (lhs[i].is_zero()) continue;
        for (int j = 0; i + j < rhs.order(); ++j) {
            if (rhs[j].is_zero()) continue;
            out.coeffs_[static_cast<size_t>(i + j)] += lhs[i] * rhs[j];
        }
    }
    return out;
}

Series& Series::scale(const LaurentPoly& c) {
    for (auto& coeff : coeffs_) coeff = coeff * c;
    return *this;
}

Series& Series::mul_one_minus(const BigInt& c, int xexp, int yexp, int shift) {
    if (shift < 1) throw std::domain_error("mul_one_minus: shift must be >= 1");
    LaurentPoly mono = LaurentPoly::monomial(c, xexp, yexp);
    for (int k = order() - 1; k >= shift; --k)
        coeffs_[static_cast<size_t>(k)] -= mono * coeffs_[static_cast<size_t>(k - shift)];
    return *this;
}

Series Series::inverse() const {
    if (!coeffs_[0].is_one())
        throw std::domain_error("Series::inverse: constant coefficient must be 1");
    Series out = Series::one(order());
    for (int n = 1; n < order(); ++n) {
        LaurentPoly acc;
        for (int k = 1; k <= n; ++k) {
            if (coeffs_[static_cast<size_t>(k)].is_zero()) continue;
            acc -= coeffs_[static_cast<size_t>(k)] * out[n - k];
        }
        out.coeffs_[static_cast<size_t>(n)] = std::move(acc);
    }
    return out;
}

Series Series::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Series out = Series::one(order());
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
}

Series Series::x_reduced_mod(int m) const {
    Series out(order());
    for (int k = 0; k < order(); ++k)
        out.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)].x_reduced_mod(m);
    return out;
}

Series Series::y_residue_part(int m, int residue) const {
    Series out(order());
    for (int k = 0; k < order(); ++k)
        out.coeffs_[static_cast<size_t>(k)] =
            coeffs_[static_cast<size_t>(k)].y_residue_part(m, residue);
    return out;
}

Series pochhammer_inf(const BigInt& c, int xexp, int yexp, int q_shift, int q_step,
                      int order) {
    if (q_shift < 1)
        throw std::domain_error("pochhammer_inf: q-shift must be >= 1");
    if (q_step < 1) throw std::domain_error("pochhammer_inf: q-step must be >= 1");
    Series out = Series::one(order);
    for (int shift = q_shift; shift < order; shift += q_step)
        out.mul_one_minus(c, xexp, yexp, shift);
    return out;
}

Series enumerative_series(int order, SeriesWeight weight) {
    if (order > kEnumerationBudget)
        throw std::domain_error("enumerative_series: order exceeds the enumeration budget");
    Series out(order);
    bool restricted = weight == SeriesWeight::DistinctEvenSrank ||
                      weight == SeriesWeight::DistinctEvenHalf;
    if (weight == SeriesWeight::CrankQuadrupled) {
        for (int n = 0; 4 * n < order; ++n) {
            for_each_partition(n, [&](const Partition& pi) {
                LaurentPoly w;
                if (pi.parts() == std::vector<int>{1}) {
                    w.add_term(1, 0, 1);
                    w.add_term(-1, 0, 1);
                    w.add_term(0, 0, -1);
                } else {
                    w = LaurentPoly::monomial(1, ag_crank(pi), 0);
                }
                out.at(4 * n) += w;
            });
        }
        return out;
    }
    for (int n = 0; n < order; ++n) {
        for_each_partition(n, [&](const Partition& pi) {
            if (restricted && has_repeated_even_part(pi)) return;
            switch (weight) {
                case SeriesWeight::StcrankSrank:
                    out.at(n).add_term(stcrank(pi), srank(pi), 1);
                    break;
                case SeriesWeight::CrankStatistic:
                    out.at(n).add_term(ag_crank(pi), 0, 1);
                    break;
                case SeriesWeight::CrankAnomalous:
                    if (pi.parts() == std::vector<int>{1}) {
                        out.at(n).add_term(1, 0, 1);
                        out.at(n).add_term(-1, 0, 1);
                        out.at(n).add_term(0, 0, -1);
                    } else {
                        out.at(n).add_term(ag_crank(pi), 0, 1);
                    }
                    break;
                case SeriesWeight::OddBoth:
                    out.at(n).add_term(odd_parts(pi), odd_parts(pi.conjugate()), 1);
                    break;
                case SeriesWeight::SrankOnly:
                    out.at(n).add_term(0, srank(pi), 1);
                    break;
                case SeriesWeight::SrankSign:
                    out.at(n).add_term(0, 0, mod_floor(srank(pi), 4) == 0 ? 1 : -1);
                    break;
                case SeriesWeight::DistinctEvenSrank:
                    out.at(n).add_term(0, srank(pi), 1);
                    break;
                case SeriesWeight::DistinctEvenHalf:
                    out.at(n).add_term(srank(pi) / 2, srank(pi), 1);
                    break;
                case SeriesWeight::CrankQuadrupled:
                    break;  // handled above
            }
        });
    }
    return out;
}

namespace {

Series lattice_series(int t, int order) {
    Series out(order);
    for (const NVector& nv : n_vector_lattice(t, order))
        out.at(static_cast<int>(n_vector_weight(nv))).add_term(0, 0, 1);
    return out;
}

Series alpha_lattice_series(int order) {
    Series out(order);
    for (const AlphaVector& av : alpha_lattice(order))
        out.at(static_cast<int>(alpha_quadratic(av))).add_term(0, 0, 1);
    return out;
}

Series triangular_series(int order) {
    Series out(order);
    for (int k = 0; k * (k + 1) / 2 < order; ++k) out.at(k * (k + 1) / 2).add_term(0, 0, 1);
    return out;
}

Series jtp_lattice(int order) {
    Series out(order);
    out.at(0).add_term(0, 0, 1);
    for (int n = 1; n * n < order; ++n) {
        out.at(n * n).add_term(n, 0, 1);
        out.at(n * n).add_term(-n, 0, 1);
    }
    return out;
}

Series jtpb_lhs(int order) {
    // (1 - x^2) (q^2 x^2; q^2) (q^2 x^3; q^2) (q^2; q^2) with x-exponents
    // reduced mod 5; x stands for a primitive fifth root of unity, so x^-2
    // enters as x^3.
    Series prod = pochhammer_inf(1, 2, 0, 2, 2, order) *
                  pochhammer_inf(1, 3, 0, 2, 2, order) *
                  pochhammer_inf(1, 0, 0, 2, 2, order);
    LaurentPoly front;
    front.add_term(0, 0, 1);
    front.add_term(2, 0, -1);
    prod.scale(front);
    return prod.x_reduced_mod(5);
}

Series jtpb_rhs(int order) {
    Series out(order);
    for (int m = 0; m * (m + 1) < order; ++m) {
        int power = m * (m + 1);  // 2 * T_m
        BigInt sign = (m % 2 == 0) ? 1 : -1;
        out.at(power).add_term(mod_floor(-2 * m, 5), 0, sign);
        out.at(power).add_term(mod_floor(2 * m + 2, 5), 0, -sign);
    }
    return out;
}

Series p_5n_plus_4(int order) {
    Series out(order);
    for (int k = 0; k < order; ++k)
        out.at(k).add_term(0, 0, partition_count(5 * k + 4));
    return out;
}

}  // namespace

Series build_named_series(const std::string& name, int order, int t) {
    if (name == "pentagonal") return pochhammer_inf(1, 0, 0, 1, 1, order);
    if (name == "euler_inv") return pochhammer_inf(1, 0, 0, 1, 1, order).inverse();
    if (name == "rsgf_rhs") {
        Series num = pochhammer_inf(-1, 1, 1, 1, 2, order);
        Series den = pochhammer_inf(1, 0, 0, 4, 4, order) *
                     pochhammer_inf(1, 2, 0, 2, 4, order) *
                     pochhammer_inf(1, 0, 2, 2, 4, order);
        return num * den.inverse();
    }
    if (name == "crankgf_rhs") {
        Series num = pochhammer_inf(1, 0, 0, 1, 1, order);
        Series den = pochhammer_inf(1, 1, 0, 1, 1, order) *
                     pochhammer_inf(1, -1, 0, 1, 1, order);
        return num * den.inverse();
    }
    if (name == "lemma1_rhs") {
        Series num = pochhammer_inf(1, 0, 0, 4, 4, order) *
                     pochhammer_inf(-1, 0, 0, 1, 2, order);
        Series den = pochhammer_inf(1, 1, 0, 4, 4, order) *
                     pochhammer_inf(1, -1, 0, 4, 4, order) *
                     pochhammer_inf(1, 1, 2, 2, 4, order) *
                     pochhammer_inf(1, -1, -2, 2, 4, order);
        return num * den.inverse();
    }
    if (name == "p02_rhs") {
        Series num = pochhammer_inf(-1, 0, 0, 1, 2, order);
        Series den = pochhammer_inf(1, 0, 0, 4, 4, order) *
                     pochhammer_inf(-1, 0, 0, 2, 4, order).pow(2);
        return num * den.inverse();
    }
    if (name == "srankprod_rhs") {
        Series num = pochhammer_inf(-1, 0, 0, 1, 2, order);
        Series den = pochhammer_inf(1, 0, 2, 2, 4, order) *
                     pochhammer_inf(1, 0, -2, 2, 4, order);
        return num * den.inverse();
    }
    if (name == "tcore_rhs")
        return pochhammer_inf(1, 0, 0, t, t, order).pow(t) *
               pochhammer_inf(1, 0, 0, 1, 1, order).inverse();
    if (name == "theta_lattice") return lattice_series(t, order);
    if (name == "alpha_lattice") return alpha_lattice_series(order);
    if (name == "rambest_rhs") {
        Series s = pochhammer_inf(1, 0, 0, 5, 5, order).pow(5) *
                   pochhammer_inf(1, 0, 0, 1, 1, order).inverse().pow(6);
        s.scale(LaurentPoly::constant(5));
        return s;
    }
    if (name == "p_5n_plus_4") return p_5n_plus_4(order);
    if (name == "jtp_lhs") return jtp_lattice(order);
    if (name == "jtp_rhs")
        return pochhammer_inf(1, 0, 0, 2, 2, order) *
               pochhammer_inf(-1, 1, 0, 1, 2, order) *
               pochhammer_inf(-1, -1, 0, 1, 2, order);
    if (name == "jtpa_lhs")
        return pochhammer_inf(1, 0, 0, 4, 4, order) * pochhammer_inf(-1, 0, 0, 1, 2, order);
    if (name == "jtpa_quartic")
        return pochhammer_inf(1, 0, 0, 4, 4, order) * pochhammer_inf(-1, 0, 0, 3, 4, order) *
               pochhammer_inf(-1, 0, 0, 1, 4, order);
    if (name == "jtpa_rhs") return triangular_series(order);
    if (name == "jtpb_lhs") return jtpb_lhs(order);
    if (name == "jtpb_rhs") return jtpb_rhs(order);
    throw std::invalid_argument("build_named_series: unknown name '" + name + "'");
}

std::vector<std::string> named_series_catalog() {
    return {"pentagonal", "euler_inv",  "rsgf_rhs",      "crankgf_rhs", "lemma1_rhs",
            "p02_rhs",    "srankprod_rhs", "tcore_rhs",  "theta_lattice",
            "alpha_lattice", "rambest_rhs", "p_5n_plus_4", "jtp_lhs",   "jtp_rhs",
            "jtpa_lhs",   "jtpa_quartic", "jtpa_rhs",    "jtpb_lhs",    "jtpb_rhs"};
}

Series arithmetic_slice(const Series& s, int delta, int step) {
    if (delta < 0 || step < 1)
        throw std::domain_error("arithmetic_slice: need delta >= 0 and step >= 1");
    int count = 0;
    while (delta + count * step < s.order()) ++count;
    Series out(count > 0 ? count : 1);
    for (int k = 0; k < count; ++k) out.at(k) = s[delta + k * step];
    return out;
}

Series shifted(const Series& s, int w) {
    if (w < 0) throw std::domain_error("shifted: negative shift");
    Series out(s.order());
    for (int k = 0; k + w < s.order(); ++k) out.at(k + w) = s[k];
    return out;
}

SeriesComparison assert_equal(const Series& lhs, const Series& rhs) {
    if (lhs.order() != rhs.order())
        throw std::invalid_argument("assert_equal: order mismatch");
    for (int k = 0; k < lhs.order(); ++k) {
        if (lhs[k] == rhs[k]) continue;
        return {false, k, lhs[k] - rhs[k]};
    }
    return {};
}

CyclicReduceResult cyclic_reduce_check(const Series& s, int m, int r, int step) {
    if (m < 1 || step < 1)
        throw std::domain_error("cyclic_reduce_check: modulus and step must be >= 1");
    for (int k = mod_floor(r, step); k < s.order(); k += step) {
        std::vector<BigInt> totals = s[k].x_residue_totals(m);
        bool equal = std::all_of(totals.begin(), totals.end(),
                                 [&](const BigInt& v) { return v == totals[0]; });
        if (!equal) return {false, k, std::move(totals)};
    }
    return {};
}

}  // namespace rpl
