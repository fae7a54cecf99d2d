#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpl/laurent.hpp"

namespace rpl {

/// A q-power series truncated at a fixed order: coefficients of q^0..q^(N-1)
/// are tracked exactly, everything above is discarded deterministically.
class Series {
public:
    explicit Series(int order);
    static Series one(int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()); }
    const LaurentPoly& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    LaurentPoly& at(int k) { return coeffs_.at(static_cast<size_t>(k)); }

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    friend Series operator+(Series lhs, const Series& rhs);
    friend Series operator-(Series lhs, const Series& rhs);
    friend Series operator*(const Series& lhs, const Series& rhs);
    friend bool operator==(const Series&, const Series&) = default;

    Series& scale(const LaurentPoly& c);

    /// Multiply by the single Pochhammer factor 1 - c*x^u*y^v*q^shift.
    Series& mul_one_minus(const BigInt& c, int xexp, int yexp, int shift);

    /// Series inverse; requires constant coefficient 1.
    Series inverse() const;

    Series pow(int exponent) const;

    /// Coefficients with y set to 1 and x-exponents reduced mod m.
    Series x_reduced_mod(int m) const;

    /// Keep only terms whose y-exponent lies in the residue class mod m.
    Series y_residue_part(int m, int residue) const;

private:
    std::vector<LaurentPoly> coeffs_;
};

/// Truncated infinite Pochhammer product over j >= 0 of
/// (1 - c * x^xexp * y^yexp * q^(q_shift + j*q_step)).
/// q_shift must be >= 1 for the product to converge formally.
Series pochhammer_inf(const BigInt& c, int xexp, int yexp, int q_shift, int q_step,
                      int order);

/// Statistic weighting attached to each partition when forming the
/// brute-force generating series.
enum class SeriesWeight {
    StcrankSrank,     ///< x^stcrank * y^srank over all partitions
    CrankStatistic,   ///< x^crank over all partitions
    CrankAnomalous,   ///< x^crank except (1) contributes x + 1/x - 1
    OddBoth,          ///< x^(odd parts) * y^(odd parts of conjugate)
    SrankOnly,        ///< y^srank over all partitions
    SrankSign,        ///< +1 when srank = 0 mod 4, -1 when srank = 2 mod 4
    DistinctEvenSrank,///< y^srank over partitions with no repeated even part
    DistinctEvenHalf, ///< (x*y^2)^(srank/2) over the same restricted set
    CrankQuadrupled,  ///< x-weight of CrankAnomalous with q -> q^4
};

/// Largest order enumerative_series accepts; beyond this the partition count
/// per coefficient makes brute force pointless.
inline constexpr int kEnumerationBudget = 64;

/// Sum over all partitions of n < order of q^|pi| times the selected
/// monomial; the brute-force side of every identity check. Orders above
/// kEnumerationBudget are rejected.
Series enumerative_series(int order, SeriesWeight weight);

/// Closed-form constructors for the named product/lattice series. Unknown
/// names are rejected; `t` feeds the families that depend on it.
Series build_named_series(const std::string& name, int order, int t = 5);

/// Names accepted by build_named_series, in catalog order.
std::vector<std::string> named_series_catalog();

/// Series picking out coefficients on an arithmetic progression:
/// result[k] = s[delta + k*step].
Series arithmetic_slice(const Series& s, int delta, int step);

/// Multiply by q^w at the same order (top coefficients fall off).
Series shifted(const Series& s, int w);

struct SeriesComparison {
    bool equal = true;
    int first_difference = -1;   ///< q-power of the first differing coefficient
    LaurentPoly delta;           ///< lhs - rhs at that power
};

/// Exact coefficientwise comparison; orders must match.
SeriesComparison assert_equal(const Series& lhs, const Series& rhs);

struct CyclicReduceResult {
    bool all_equal = true;
    int first_failure = -1;               ///< q-power of the first failure
    std::vector<BigInt> failing_totals;   ///< residue-class totals there
};

/// For every tracked power k = r (mod step), reduce the coefficient's
/// x-exponents mod m and report whether the m residue-class totals agree;
/// equivalent to vanishing at every primitive m-th root of unity when m is
/// prime.
CyclicReduceResult cyclic_reduce_check(const Series& s, int m, int r, int step);

}  // namespace rpl
