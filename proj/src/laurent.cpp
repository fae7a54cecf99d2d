#include "rpl/laurent.hpp"

#include <sstream>

namespace rpl {

LaurentPoly LaurentPoly::constant(BigInt c) { return monomial(std::move(c), 0, 0); }

LaurentPoly LaurentPoly::monomial(BigInt c, int xexp, int yexp) {
    LaurentPoly p;
    if (c != 0) p.terms_[{xexp, yexp}] = std::move(c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
           terms_.begin()->second == 1;
}

BigInt LaurentPoly::coeff(int xexp, int yexp) const {
    auto it = terms_.find({xexp, yexp});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int xexp, int yexp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({xexp, yexp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
}

LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_)
            out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
}

std::vector<BigInt> LaurentPoly::x_residue_totals(int m) const {
    std::vector<BigInt> totals(static_cast<size_t>(m), 0);
    for (const auto& [e, c] : terms_)
        totals[static_cast<size_t>(mod_floor(e.first, m))] += c;
    return totals;
}

LaurentPoly LaurentPoly::y_residue_part(int m, int residue) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        if (mod_floor(e.second, m) == mod_floor(residue, m)) out.terms_[e] = c;
    return out;
}

LaurentPoly LaurentPoly::x_reduced_mod(int m) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(mod_floor(e.first, m), e.second, c);
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = e.first != 0 || e.second != 0;
        if (mag != 1 || !has_vars) os << mag.str();
        if (mag != 1 && has_vars) os << "*";
        if (e.first != 0) {
            os << "x";
            if (e.first != 1) os << "^" << e.first;
            if (e.second != 0) os << "*";
        }
        if (e.second != 0) {
            os << "y";
            if (e.second != 1) os << "^" << e.second;
        }
    }
    return os.str();
}

}  // namespace rpl
