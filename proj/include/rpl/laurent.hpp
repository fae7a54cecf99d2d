#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rpl/partition.hpp"

namespace rpl {

/// Finitely supported map from integer exponent pairs (x-degree, y-degree) to
/// exact integer coefficients. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Exponents = std::pair<int, int>;

    LaurentPoly() = default;
    static LaurentPoly constant(BigInt c);
    static LaurentPoly monomial(BigInt c, int xexp, int yexp);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
    BigInt coeff(int xexp, int yexp) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    void add_term(int xexp, int yexp, const BigInt& c);

    /// Totals by x-exponent residue class mod m (the y variable is set to 1).
    std::vector<BigInt> x_residue_totals(int m) const;

    /// Terms whose y-exponent is congruent to the residue mod m.
    LaurentPoly y_residue_part(int m, int residue) const;

    /// Collapse x-exponents mod m (reduction modulo x^m - 1).
    LaurentPoly x_reduced_mod(int m) const;

    /// Deterministic rendering such as "x^2*y^-1 - 3".
    std::string str() const;

private:
    std::map<Exponents, BigInt> terms_;
};

}  // namespace rpl
