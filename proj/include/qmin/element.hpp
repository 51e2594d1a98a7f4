#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmin/errors.hpp"
#include "qmin/laurent.hpp"

namespace qmin {

/// An element of a noncommutative algebra given by a presentation P, stored
/// as a canonical LaurentScalar-combination of normal-form monomials.
///
/// A presentation supplies:
///   - Monomial                 normal-form monomial value type
///   - MonomialLess             the term order (stateless comparator)
///   - Monomial unit_monomial()
///   - mul_monomials(a, b)      product of two normal monomials as a vector
///                              of (scalar, normal monomial) pairs
///   - monomial_str(m)          factor part of the text form ("" for the unit)
///   - equals(other)            structural presentation equality
///
/// Elements are immutable values; presentations are immutable after
/// construction, so everything here can be shared freely between threads.
template <class P>
class Element {
public:
    using Monomial = typename P::Monomial;
    using Terms = std::map<Monomial, LaurentScalar, typename P::MonomialLess>;

    explicit Element(std::shared_ptr<const P> pres) : pres_(std::move(pres)) {}

    static Element zero(std::shared_ptr<const P> pres) { return Element(std::move(pres)); }

    static Element unit(std::shared_ptr<const P> pres) {
        Monomial m = pres->unit_monomial();
        return monomial(std::move(pres), std::move(m));
    }

    static Element monomial(std::shared_ptr<const P> pres, Monomial m,
                            LaurentScalar c = LaurentScalar::one()) {
        Element e(std::move(pres));
        e.add_term(std::move(m), std::move(c));
        return e;
    }

    static Element scalar(std::shared_ptr<const P> pres, LaurentScalar c) {
        return monomial(std::move(pres), pres->unit_monomial(), std::move(c));
    }

    const std::shared_ptr<const P>& presentation() const { return pres_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Leading (maximal) term under the presentation's term order.
    const std::pair<const Monomial, LaurentScalar>& leading() const {
        if (terms_.empty()) throw Error("leading term of zero element");
        return *terms_.rbegin();
    }

    /// Trailing (minimal) term under the term order.
    const std::pair<const Monomial, LaurentScalar>& trailing() const {
        if (terms_.empty()) throw Error("trailing term of zero element");
        return *terms_.begin();
    }

    friend Element operator+(const Element& x, const Element& y) {
        x.check_same(y);
        Element r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, c);
        return r;
    }

    friend Element operator-(const Element& x, const Element& y) {
        x.check_same(y);
        Element r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
        return r;
    }

    friend Element operator-(const Element& x) {
        Element r(x.pres_);
        for (const auto& [m, c] : x.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Element operator*(const Element& x, const Element& y) {
        x.check_same(y);
        Element r(x.pres_);
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_)
                for (auto& [cz, mz] : x.pres_->mul_monomials(mx, my))
                    r.add_term(std::move(mz), cx * cy * cz);
        return r;
    }

    friend Element operator*(const LaurentScalar& c, const Element& x) {
        Element r(x.pres_);
        if (c.is_zero()) return r;
        for (const auto& [m, a] : x.terms_) r.add_term(m, c * a);
        return r;
    }

    Element& operator+=(const Element& y) { return *this = *this + y; }
    Element& operator-=(const Element& y) { return *this = *this - y; }
    Element& operator*=(const Element& y) { return *this = *this * y; }

    bool operator==(const Element& y) const {
        return pres_->equals(*y.pres_) && terms_ == y.terms_;
    }
    bool operator!=(const Element& y) const { return !(*this == y); }

    /// Canonical text form: terms ascending in the term order, each as
    /// "(scalar)" or "(scalar)*factors", e.g. "(q^-1)*x[1,1]*x[1,2]".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            std::string f = pres_->monomial_str(m);
            if (!f.empty()) os << "*" << f;
        }
        return os.str();
    }

    void add_term(Monomial m, const LaurentScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    void check_same(const Element& y) const {
        if (!pres_->equals(*y.pres_))
            throw PresentationMismatch("elements belong to different presentations");
    }

    std::shared_ptr<const P> pres_;
    Terms terms_;
};

}  // namespace qmin
