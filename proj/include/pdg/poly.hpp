#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace pdg {

// Exact integer Laurent polynomial in one variable; zero coefficients are
// never stored, so equality is map equality.
class Poly {
public:
    Poly() = default;
    static Poly monomial(long long coeff, int exp) {
        Poly p;
        p.add_term(exp, coeff);
        return p;
    }
    static Poly constant(long long c) { return monomial(c, 0); }

    void add_term(int exp, long long coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (auto [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }

    Poly& operator-=(const Poly& o) {
        for (auto [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (auto [ea, ca] : a.terms_)
            for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    long long coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }
    const std::map<int, long long>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // "2*t^1 + -2*t^0", highest exponent first; "0" when empty.
    std::string to_string(char var) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += std::to_string(it->second);
            out += "*";
            out += var;
            out += "^";
            out += std::to_string(it->first);
        }
        return out;
    }

    bool operator==(const Poly&) const = default;

private:
    std::map<int, long long> terms_;
};

// Intersection-index polynomial in t.
using IntPolynomial = Poly;
// Normalized bracket polynomial in A.
using LaurentPolynomial = Poly;

}  // namespace pdg
