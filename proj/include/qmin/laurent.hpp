#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmin {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in the single central parameter q, with
/// arbitrary-precision integer coefficients.  This is the coefficient ring
/// of the whole engine; equality-to-zero must be exact, which rules out any
/// fixed-width or floating representation.
///
/// Canonical form: a sparse map exponent -> coefficient with no zero entries;
/// the zero element is the empty map.  Values are immutable in spirit (all
/// operations return new values) and safe to share between threads.
class LaurentScalar {
public:
    using Terms = std::map<int, BigInt>;

    LaurentScalar() = default;

    /// Constant polynomial n (implicit: scalars embed into the ring).
    LaurentScalar(long n) { add_term(0, BigInt(n)); }
    LaurentScalar(const BigInt& n) { add_term(0, n); }

    /// Monomial a * q^k.
    static LaurentScalar q_power(int k, const BigInt& a = 1) {
        LaurentScalar s;
        s.add_term(k, a);
        return s;
    }

    static LaurentScalar zero() { return LaurentScalar(); }
    static LaurentScalar one() { return LaurentScalar(1); }

    /// q - q^-1, the ubiquitous correction coefficient.
    static LaurentScalar q_minus_qinv() {
        LaurentScalar s;
        s.add_term(1, 1);
        s.add_term(-1, -1);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    /// Units of Z[q,q^-1] are exactly +-q^k.
    bool is_unit() const {
        if (terms_.size() != 1) return false;
        const BigInt& a = terms_.begin()->second;
        return a == 1 || a == -1;
    }

    const Terms& terms() const { return terms_; }

    /// Coefficient of q^k (zero if absent).
    BigInt coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// Sum of all coefficients, i.e. the value at q = 1.
    BigInt at_one() const {
        BigInt s = 0;
        for (const auto& [k, a] : terms_) s += a;
        return s;
    }

    friend LaurentScalar operator+(const LaurentScalar& x, const LaurentScalar& y) {
        LaurentScalar r = x;
        for (const auto& [k, a] : y.terms_) r.add_term(k, a);
        return r;
    }

    friend LaurentScalar operator-(const LaurentScalar& x, const LaurentScalar& y) {
        LaurentScalar r = x;
        for (const auto& [k, a] : y.terms_) r.add_term(k, -a);
        return r;
    }

    friend LaurentScalar operator-(const LaurentScalar& x) {
        LaurentScalar r;
        for (const auto& [k, a] : x.terms_) r.terms_.emplace(k, -a);
        return r;
    }

    friend LaurentScalar operator*(const LaurentScalar& x, const LaurentScalar& y) {
        LaurentScalar r;
        for (const auto& [kx, ax] : x.terms_)
            for (const auto& [ky, ay] : y.terms_) r.add_term(kx + ky, ax * ay);
        return r;
    }

    LaurentScalar& operator+=(const LaurentScalar& y) { return *this = *this + y; }
    LaurentScalar& operator-=(const LaurentScalar& y) { return *this = *this - y; }
    LaurentScalar& operator*=(const LaurentScalar& y) { return *this = *this * y; }

    /// Multiply by q^k (exponent shift).
    LaurentScalar shifted(int k) const {
        LaurentScalar r;
        for (const auto& [e, a] : terms_) r.terms_.emplace(e + k, a);
        return r;
    }

    /// Inverse of a unit +-q^k; nullopt otherwise.
    std::optional<LaurentScalar> unit_inverse() const {
        if (!is_unit()) return std::nullopt;
        const auto& [k, a] = *terms_.begin();
        return q_power(-k, a);
    }

    bool operator==(const LaurentScalar& y) const { return terms_ == y.terms_; }
    bool operator!=(const LaurentScalar& y) const { return !(*this == y); }
    bool operator<(const LaurentScalar& y) const { return terms_ < y.terms_; }

    /// Exact quotient x/y in Z[q,q^-1], or nullopt when none exists.
    static std::optional<LaurentScalar> divide_exact(const LaurentScalar& x,
                                                     const LaurentScalar& y);

    /// Canonical text form: terms by ascending exponent, e.g. "-1 + q^2".
    std::string str() const;

private:
    void add_term(int k, const BigInt& a) {
        if (a == 0) return;
        auto [it, inserted] = terms_.emplace(k, a);
        if (!inserted) {
            it->second += a;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

inline std::optional<LaurentScalar> LaurentScalar::divide_exact(const LaurentScalar& x,
                                                                const LaurentScalar& y) {
    if (y.is_zero()) return std::nullopt;
    if (x.is_zero()) return LaurentScalar::zero();
    // Shift so both operands start at exponent 0, divide by ascending powers.
    // Each step eliminates the current lowest term, so the working exponent k
    // strictly increases; an exact quotient cannot have exponents above
    // deg(x) - deg(y), which bounds the loop.
    const int lx = x.terms_.begin()->first;
    const int ly = y.terms_.begin()->first;
    LaurentScalar rem = x.shifted(-lx);
    const LaurentScalar den = y.shifted(-ly);
    const BigInt& low = den.terms_.begin()->second;
    const int max_quot_exp = rem.terms_.rbegin()->first - den.terms_.rbegin()->first;
    LaurentScalar quot;
    while (!rem.is_zero()) {
        const auto& [k, a] = *rem.terms_.begin();
        if (k > max_quot_exp) return std::nullopt;
        BigInt c = a / low;
        if (c * low != a) return std::nullopt;
        LaurentScalar t = q_power(k, c);
        quot += t;
        rem -= t * den;
    }
    return quot.shifted(lx - ly);
}

inline std::string LaurentScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, a] : terms_) {
        BigInt mag = a < 0 ? BigInt(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            if (k == 1)
                os << "q";
            else
                os << "q^" << k;
        }
    }
    return os.str();
}

}  // namespace qmin
