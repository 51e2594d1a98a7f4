#pragma once

#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmin/element.hpp"
#include "qmin/errors.hpp"
#include "qmin/laurent.hpp"

namespace qmin {

/// A quantum torus: invertible generators g_0..g_{N-1} subject only to
/// g_u g_v = q^{c(u,v)} g_v g_u with an antisymmetric integer matrix c.
/// Normal form: integer exponent vectors over the fixed generator order
/// (negative exponents allowed).  A torus is a domain and every monomial is
/// invertible, which is what makes exact left division possible.
class TorusAlgebra {
public:
    using Monomial = std::vector<int>;  // dense exponent vector, one slot per generator

    /// Term order: total degree, then lexicographic on exponent vectors.
    /// Translation-invariant, hence compatible with monomial multiplication.
    struct MonomialLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            long da = std::accumulate(a.begin(), a.end(), 0L);
            long db = std::accumulate(b.begin(), b.end(), 0L);
            if (da != db) return da < db;
            return a < b;
        }
    };

    TorusAlgebra(std::vector<std::string> names, std::vector<std::vector<int>> comm)
        : names_(std::move(names)), comm_(std::move(comm)) {
        const std::size_t N = names_.size();
        if (comm_.size() != N) throw Error("commutation matrix size mismatch");
        for (std::size_t u = 0; u < N; ++u) {
            if (comm_[u].size() != N) throw Error("commutation matrix size mismatch");
            for (std::size_t v = 0; v < N; ++v)
                if (comm_[u][v] != -comm_[v][u])
                    throw Error("commutation matrix must be antisymmetric");
        }
    }

    /// Generators named g1..gN.
    static std::shared_ptr<const TorusAlgebra> make(std::vector<std::vector<int>> comm) {
        std::vector<std::string> names(comm.size());
        for (std::size_t g = 0; g < names.size(); ++g) names[g] = "g" + std::to_string(g + 1);
        return std::make_shared<const TorusAlgebra>(std::move(names), std::move(comm));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t g) const { return names_[g]; }
    int comm(std::size_t u, std::size_t v) const { return comm_[u][v]; }

    Monomial unit_monomial() const { return Monomial(size(), 0); }

    Monomial gen_monomial(std::size_t g, int e = 1) const {
        Monomial m = unit_monomial();
        m[g] = e;
        return m;
    }

    /// Names are cosmetic; structural equality is size + commutation matrix.
    bool equals(const TorusAlgebra& o) const { return comm_ == o.comm_; }

    /// Product of two normal monomials: q-power and exponent sum.  Moving
    /// g_i^{b_i} left past the tail g_j^{a_j} (j > i) of a contributes
    /// c(j,i) * a_j * b_i to the exponent of q.
    std::pair<int, Monomial> mul_mono(const Monomial& a, const Monomial& b) const {
        const std::size_t N = size();
        int qpow = 0;
        Monomial m(N);
        for (std::size_t i = 0; i < N; ++i) {
            m[i] = a[i] + b[i];
            if (b[i] == 0) continue;
            for (std::size_t j = i + 1; j < N; ++j)
                if (a[j] != 0) qpow += comm_[j][i] * a[j] * b[i];
        }
        return {qpow, std::move(m)};
    }

    std::vector<std::pair<LaurentScalar, Monomial>> mul_monomials(const Monomial& a,
                                                                  const Monomial& b) const {
        auto [k, m] = mul_mono(a, b);
        std::vector<std::pair<LaurentScalar, Monomial>> out;
        out.emplace_back(LaurentScalar::q_power(k), std::move(m));
        return out;
    }

    /// q-power and exponent vector of the two-sided inverse of a monomial.
    std::pair<int, Monomial> invert_mono(const Monomial& a) const {
        Monomial neg(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
        auto [s, unit] = mul_mono(a, neg);
        (void)unit;
        return {-s, std::move(neg)};
    }

    std::string monomial_str(const Monomial& m) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t g = 0; g < m.size(); ++g) {
            if (m[g] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << names_[g];
            if (m[g] != 1) os << "^" << m[g];
        }
        return os.str();
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> comm_;
};

using TorusElement = Element<TorusAlgebra>;

inline TorusElement torus_generator(const std::shared_ptr<const TorusAlgebra>& t, std::size_t g,
                                    int e = 1) {
    return TorusElement::monomial(t, t->gen_monomial(g, e));
}

/// Inverse of a single-monomial element whose coefficient is a unit +-q^k.
inline TorusElement torus_inverse(const TorusElement& x) {
    if (x.term_count() != 1)
        throw NotInvertible("element is not a monomial: " + x.str());
    const auto& [m, c] = x.leading();
    auto cinv = c.unit_inverse();
    if (!cinv) throw NotInvertible("coefficient is not a unit: " + x.str());
    auto [k, minv] = x.presentation()->invert_mono(m);
    return TorusElement::monomial(x.presentation(), std::move(minv), cinv->shifted(k));
}

/// Solves p * x = r exactly (left division by p).  Monomials are invertible
/// and the term order is multiplication-compatible, so when a quotient
/// exists, leading-term elimination emits exactly its terms, largest first.
/// When none exists the loop is stopped either by a coefficient that fails
/// to divide, or by the trailing-term bound: every true quotient monomial
/// lies order-between tt(r)-tt(p) and lt(r)-lt(p).
inline TorusElement torus_left_divide(const TorusElement& p, const TorusElement& r) {
    if (p.is_zero()) throw NotDivisible("left division by the zero element");
    const auto& pres = p.presentation();
    TorusElement x(pres);
    if (r.is_zero()) return x;
    if (!pres->equals(*r.presentation()))
        throw PresentationMismatch("division operands over different tori");

    const auto& [pm, pc] = p.leading();
    const std::size_t N = pres->size();
    TorusAlgebra::Monomial low_bound(N);
    {
        const auto& [rm, rc] = r.trailing();
        const auto& ptm = p.trailing().first;
        for (std::size_t i = 0; i < N; ++i) low_bound[i] = rm[i] - ptm[i];
        (void)rc;
    }

    TorusAlgebra::MonomialLess less;
    TorusElement rem = r;
    // Internal safety bound; exact quotients terminate long before it.
    for (long steps = 0; !rem.is_zero(); ++steps) {
        if (steps > 1000000) throw NotDivisible("left division did not terminate");
        const auto& [rm, rc] = rem.leading();
        TorusAlgebra::Monomial cand(N);
        for (std::size_t i = 0; i < N; ++i) cand[i] = rm[i] - pm[i];
        if (less(cand, low_bound))
            throw NotDivisible("no exact left quotient of " + r.str() + " by " + p.str());
        auto [k, prod] = pres->mul_mono(pm, cand);
        (void)prod;
        auto coeff = LaurentScalar::divide_exact(rc, pc.shifted(k));
        if (!coeff)
            throw NotDivisible("no exact left quotient of " + r.str() + " by " + p.str());
        TorusElement t = TorusElement::monomial(pres, std::move(cand), *coeff);
        x += t;
        rem -= p * t;
    }
    return x;
}

}  // namespace qmin
