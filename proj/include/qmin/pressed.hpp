#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qmin/cortege.hpp"
#include "qmin/errors.hpp"
#include "qmin/grid.hpp"
#include "qmin/qmatrix.hpp"
#include "qmin/torus.hpp"

namespace qmin {

/// The nonempty pressed corteges pi(i,j), (i,j) in [m] x [n], row-major.
/// This fixed enumeration doubles as the generator order of the pressed
/// torus and matches the grid's inner-vertex order.
inline std::vector<Cortege> pressed_corteges(int m, int n) {
    std::vector<Cortege> out;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) out.push_back(pressed_map(m, n, i, j));
    return out;
}

/// Values on the pressed corteges, to be extended to a full QI-function:
/// a quantum torus plus a map f0 sending every nonempty pressed cortege to
/// an invertible monomial (and the empty cortege to 1).  The values must
/// pairwise quasi-commute with the interval exponents; this is validated at
/// construction.  In generic mode f0(pi) is the generator y_pi itself, which
/// realizes algebraically independent values.
class PressedAssignment {
public:
    PressedAssignment(int m, int n, std::shared_ptr<const TorusAlgebra> torus,
                      std::map<Cortege, TorusElement> values)
        : m_(m), n_(n), torus_(std::move(torus)), values_(std::move(values)) {
        validate();
    }

    /// Free pressed-generator torus: one generator y_pi per nonempty pressed
    /// cortege, commutation exponents given by the interval calculus.
    static PressedAssignment generic(int m, int n) {
        const auto pressed = pressed_corteges(m, n);
        const std::size_t N = pressed.size();
        std::vector<std::string> names(N);
        std::vector<std::vector<int>> comm(N, std::vector<int>(N, 0));
        for (std::size_t a = 0; a < N; ++a) {
            names[a] = "y" + pressed[a].str();
            for (std::size_t b = 0; b < N; ++b) {
                auto e = interval_qc(pressed[a], pressed[b]);
                if (!e)
                    throw Error("pressed corteges failed to quasi-commute: " + pressed[a].str() +
                                " vs " + pressed[b].str());
                comm[a][b] = *e;
            }
        }
        auto torus = std::make_shared<const TorusAlgebra>(std::move(names), std::move(comm));
        std::map<Cortege, TorusElement> values;
        for (std::size_t a = 0; a < N; ++a)
            values.emplace(pressed[a], torus_generator(torus, a));
        return PressedAssignment(m, n, std::move(torus), std::move(values));
    }

    int m() const { return m_; }
    int n() const { return n_; }
    const std::shared_ptr<const TorusAlgebra>& torus() const { return torus_; }

    /// f0 at a pressed cortege; the empty cortege is the unit.
    const TorusElement& value(const Cortege& c) const {
        if (c.empty()) return unit_;
        auto it = values_.find(c);
        if (it == values_.end())
            throw NotPressed("no value assigned to cortege " + c.str());
        return it->second;
    }

    const std::map<Cortege, TorusElement>& values() const { return values_; }

private:
    void validate() {
        unit_ = TorusElement::unit(torus_);
        const auto pressed = pressed_corteges(m_, n_);
        for (const auto& c : pressed) {
            auto it = values_.find(c);
            if (it == values_.end())
                throw NotPressed("missing value for pressed cortege " + c.str());
            const auto& v = it->second;
            if (v.term_count() != 1 || !v.leading().second.is_unit())
                throw NotInvertible("value at " + c.str() + " is not an invertible monomial: " +
                                    v.str());
        }
        if (values_.size() != pressed.size())
            throw NotPressed("assignment contains a non-pressed cortege");
        // Extension hypothesis: values quasi-commute with the interval exponents.
        for (const auto& [c1, v1] : values_)
            for (const auto& [c2, v2] : values_) {
                const int e = interval_qc(c1, c2).value();
                if (v1 * v2 != LaurentScalar::q_power(e) * (v2 * v1))
                    throw Error("values at " + c1.str() + ", " + c2.str() +
                                " violate the required quasi-commutation exponent " +
                                std::to_string(e));
            }
    }

    int m_, n_;
    std::shared_ptr<const TorusAlgebra> torus_;
    std::map<Cortege, TorusElement> values_;
    TorusElement unit_{nullptr};
};

/// Vertex weights from pressed values:
///   w(i,j) = f0({i}|{j})                                 if min(i,j) = 1,
///   w(i,j) = f0(pi(i-1,j-1))^-1 f0(pi(i,j))              otherwise.
/// Telescoping along the diagonal recovers f0(pi(i,j)) as the weight of the
/// unique pressed flow.
inline std::map<std::pair<int, int>, TorusElement> build_weights(const PressedAssignment& pa) {
    std::map<std::pair<int, int>, TorusElement> w;
    for (int i = 1; i <= pa.m(); ++i)
        for (int j = 1; j <= pa.n(); ++j) {
            const Cortege here = pressed_map(pa.m(), pa.n(), i, j);
            if (std::min(i, j) == 1) {
                w.emplace(std::make_pair(i, j), pa.value(here));
            } else {
                const Cortege prev = pressed_map(pa.m(), pa.n(), i - 1, j - 1);
                w.emplace(std::make_pair(i, j),
                          torus_inverse(pa.value(prev)) * pa.value(here));
            }
        }
    return w;
}

/// One failed weight commutation relation.
struct WcastIssue {
    int i, j, i2, j2;
    std::string clause;
    std::string residual;
};

/// Checks the grid commutation laws on computed weights:
///   (i)  same row, j < j':    w(i,j) w(i,j')  = q w(i,j') w(i,j)
///   (ii) same column, i > i': w(i',j) w(i,j)  = q w(i,j) w(i',j)
///   (iii) otherwise they commute.
/// The extension theorem predicts an empty result; violations are data, not
/// errors.
inline std::vector<WcastIssue> verify_wcast(const std::map<std::pair<int, int>, TorusElement>& w,
                                            const PressedAssignment& pa) {
    std::vector<WcastIssue> issues;
    const LaurentScalar q = LaurentScalar::q_power(1);
    auto weight = [&](int i, int j) -> const TorusElement& { return w.at({i, j}); };
    for (int i = 1; i <= pa.m(); ++i)
        for (int j = 1; j <= pa.n(); ++j)
            for (int i2 = i; i2 <= pa.m(); ++i2)
                for (int j2 = (i2 == i ? j + 1 : 1); j2 <= pa.n(); ++j2) {
                    TorusElement res(pa.torus());
                    const char* clause = nullptr;
                    if (i == i2) {  // same row, j < j2
                        res = weight(i, j) * weight(i2, j2) - q * (weight(i2, j2) * weight(i, j));
                        clause = "same-row";
                    } else if (j == j2) {  // same column, i2 > i
                        res = weight(i, j) * weight(i2, j2) - q * (weight(i2, j2) * weight(i, j));
                        clause = "same-column";
                    } else {
                        res = weight(i, j) * weight(i2, j2) - weight(i2, j2) * weight(i, j);
                        clause = "commute";
                    }
                    if (!res.is_zero()) issues.push_back({i, j, i2, j2, clause, res.str()});
                }
    return issues;
}

/// min-style boundary counts for an ordered pair of interval sets; both
/// reduce to the plain counts when |P| >= |P'|, and zero when either side is
/// empty.
inline int alpha_min(const std::vector<int>& P, const std::vector<int>& Pp) {
    if (P.empty() || Pp.empty()) return 0;
    const int a1 = detail::count_less(Pp, P.front());
    const int a2 = detail::count_greater(P, Pp.back());
    return std::min(a1, a2);
}

inline int beta_min(const std::vector<int>& P, const std::vector<int>& Pp) {
    if (P.empty() || Pp.empty()) return 0;
    const int b1 = detail::count_greater(Pp, P.back());
    const int b2 = detail::count_less(P, Pp.front());
    return std::min(b1, b2);
}

/// The exponent bookkeeping behind the weight commutation proof, for a pair
/// of nonempty pressed corteges (I|J) = pi(i,j), (I'|J') = pi(i',j'):
/// with A = f0(I|J), B = f0(I-i|J-j), C = f0(I'|J'), D = f0(I'-i'|J'-j'),
/// the c's are the quasi-commutation exponents AC = q^c1 CA, AD = q^c2 DA,
/// BC = q^c3 CB, BD = q^c4 DB, and d = c1 - c2 - c3 + c4 is the exponent in
/// w(i,j) w(i',j') = q^d w(i',j') w(i,j).  phi and psi are the row and
/// column contributions computed from the min-style counts; phi + psi = d.
struct ExponentWitness {
    Cortege first, second;
    int i = 0, j = 0, i2 = 0, j2 = 0;
    int c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    int phi = 0, psi = 0;
    int d = 0;
};

inline ExponentWitness exponent_witness(const Cortege& p1, const Cortege& p2,
                                        const PressedAssignment& pa) {
    if (p1.empty() || !p1.is_pressed() || !p1.within(pa.m(), pa.n()))
        throw NotPressed("cortege " + p1.str() + " is not a nonempty pressed double interval");
    if (p2.empty() || !p2.is_pressed() || !p2.within(pa.m(), pa.n()))
        throw NotPressed("cortege " + p2.str() + " is not a nonempty pressed double interval");
    const auto [i, j] = pressed_preimage(p1);
    const auto [i2, j2] = pressed_preimage(p2);
    const Cortege t1 = std::min(i, j) >= 2 ? pressed_map(pa.m(), pa.n(), i - 1, j - 1) : Cortege();
    const Cortege t2 =
        std::min(i2, j2) >= 2 ? pressed_map(pa.m(), pa.n(), i2 - 1, j2 - 1) : Cortege();

    ExponentWitness w;
    w.first = p1;
    w.second = p2;
    w.i = i;
    w.j = j;
    w.i2 = i2;
    w.j2 = j2;
    w.c1 = interval_qc(p1, p2).value();
    w.c2 = interval_qc(p1, t2).value();
    w.c3 = interval_qc(t1, p2).value();
    w.c4 = interval_qc(t1, t2).value();
    w.d = w.c1 - w.c2 - w.c3 + w.c4;

    auto ba = [](const std::vector<int>& P, const std::vector<int>& Pp) {
        return beta_min(P, Pp) - alpha_min(P, Pp);
    };
    w.phi = ba(p1.rows(), p2.rows()) - ba(p1.rows(), t2.rows()) - ba(t1.rows(), p2.rows()) +
            ba(t1.rows(), t2.rows());
    w.psi = ba(p1.cols(), p2.cols()) - ba(p1.cols(), t2.cols()) - ba(t1.cols(), p2.cols()) +
            ba(t1.cols(), t2.cols());

    if (w.phi + w.psi != w.d)
        throw Error("exponent witness inconsistent at " + p1.str() + ", " + p2.str());
    return w;
}

}  // namespace qmin
