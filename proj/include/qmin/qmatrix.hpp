#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmin/cortege.hpp"
#include "qmin/element.hpp"
#include "qmin/errors.hpp"
#include "qmin/qmatrix_algebra.hpp"

namespace qmin {

/// An m x n matrix with entries in one presentation.  The interesting
/// instances are fine q-matrices (entries pairwise obeying the Manin
/// relations): the generic quantum matrix by construction, path matrices by
/// the grid commutation laws (checkable with check_manin at desk sizes).
template <class P>
class QMatrix {
public:
    QMatrix(int m, int n, std::shared_ptr<const P> pres)
        : m_(m), n_(n), pres_(std::move(pres)),
          entries_(static_cast<std::size_t>(m) * n, Element<P>(pres_)) {}

    int rows() const { return m_; }
    int cols() const { return n_; }
    const std::shared_ptr<const P>& presentation() const { return pres_; }

    const Element<P>& at(int i, int j) const { return entries_[index(i, j)]; }
    void set(int i, int j, Element<P> e) { entries_[index(i, j)] = std::move(e); }

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || i > m_ || j < 1 || j > n_) throw OutOfBounds("matrix entry out of range");
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    int m_, n_;
    std::shared_ptr<const P> pres_;
    std::vector<Element<P>> entries_;
};

/// The generic m x n quantum matrix: entry (i,j) is the generator x_ij.
inline QMatrix<QMatrixAlgebra> generic_qmatrix(int m, int n) {
    auto pres = std::make_shared<const QMatrixAlgebra>(m, n);
    QMatrix<QMatrixAlgebra> X(m, n, pres);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            X.set(i, j, Element<QMatrixAlgebra>::monomial(pres, {pres->gen(i, j)}));
    return X;
}

/// Number of inversions (the length) of a permutation of [k], given as
/// images sigma(1..k) in one-based values.
inline int inversions(const std::vector<int>& sigma) {
    std::vector<bool> seen(sigma.size() + 1, false);
    for (int v : sigma) {
        if (v < 1 || v > static_cast<int>(sigma.size()) || seen[v])
            throw PreconditionViolated("not a permutation of [k]");
        seen[v] = true;
    }
    int inv = 0;
    for (std::size_t a = 0; a < sigma.size(); ++a)
        for (std::size_t b = a + 1; b < sigma.size(); ++b)
            if (sigma[a] > sigma[b]) ++inv;
    return inv;
}

/// Quantum minor of X on the cortege (I|J):
///
///   sum over permutations sigma of [k] of (-q)^{l(sigma)} *
///   x_{i_1 j_sigma(1)} ... x_{i_k j_sigma(k)}   (ordered left to right),
///
/// reduced to normal form.  The empty minor is the unit.  The permutation
/// sum is the single source of truth here; there is no Laplace expansion.
template <class P>
Element<P> quantum_minor(const QMatrix<P>& X, const Cortege& c) {
    if (!c.within(X.rows(), X.cols())) throw OutOfBounds("cortege " + c.str() + " out of range");
    const int k = static_cast<int>(c.size());
    Element<P> acc(X.presentation());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        Element<P> prod = Element<P>::unit(X.presentation());
        for (int d = 0; d < k; ++d) prod *= X.at(c.rows()[d], c.cols()[perm[d] - 1]);
        int l = inversions(perm);
        LaurentScalar w = LaurentScalar::q_power(l, (l % 2 == 0) ? 1 : -1);  // (-q)^l
        acc += w * prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

namespace detail {
inline int count_less(const std::vector<int>& v, int bound) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), bound) - v.begin());
}
inline int count_greater(const std::vector<int>& v, int bound) {
    return static_cast<int>(v.end() - std::upper_bound(v.begin(), v.end(), bound));
}
}  // namespace detail

/// Universal quasi-commutation test for double-interval corteges.
/// Returns the exponent c with D(I|J) D(I'|J') = q^c D(I'|J') D(I|J) when the
/// minors quasi-commute universally, and nullopt when they do not.
///
/// For |I| >= |I'| set
///   alpha = #{i' in I' : i' < min I},  beta  = #{i' in I' : i' > max I},
///   gamma = #{j' in J' : j' < min J},  delta = #{j' in J' : j' > max J};
/// the pair quasi-commutes iff alpha*gamma = beta*delta = 0, with
/// c = beta + delta - alpha - gamma.  For |I| < |I'| the roles swap and the
/// exponent is negated.
inline std::optional<int> interval_qc(const Cortege& c1, const Cortege& c2) {
    if (!c1.is_double_interval())
        throw NotDoubleInterval("cortege " + c1.str() + " is not a double interval");
    if (!c2.is_double_interval())
        throw NotDoubleInterval("cortege " + c2.str() + " is not a double interval");
    if (c1.size() < c2.size()) {
        auto e = interval_qc(c2, c1);
        if (!e) return std::nullopt;
        return -*e;
    }
    if (c1.empty() || c2.empty()) return 0;
    const int alpha = detail::count_less(c2.rows(), c1.min_row());
    const int beta = detail::count_greater(c2.rows(), c1.max_row());
    const int gamma = detail::count_less(c2.cols(), c1.min_col());
    const int delta = detail::count_greater(c2.cols(), c1.max_col());
    if (alpha * gamma != 0 || beta * delta != 0) return std::nullopt;
    return beta + delta - alpha - gamma;
}

/// One failed Manin relation between two entries of a matrix.
struct ManinViolation {
    int i1, j1, i2, j2;
    std::string relation;
    std::string residual;
};

/// Checks every entry pair of X against the four Manin relations, returning
/// the violations (empty for a fine q-matrix).
template <class P>
std::vector<ManinViolation> check_manin(const QMatrix<P>& X) {
    std::vector<ManinViolation> out;
    const LaurentScalar q = LaurentScalar::q_power(1);
    auto record = [&](int i1, int j1, int i2, int j2, const char* rel, const Element<P>& res) {
        if (!res.is_zero()) out.push_back({i1, j1, i2, j2, rel, res.str()});
    };
    for (int i1 = 1; i1 <= X.rows(); ++i1)
        for (int j1 = 1; j1 <= X.cols(); ++j1)
            for (int i2 = i1; i2 <= X.rows(); ++i2)
                for (int j2 = (i2 == i1 ? j1 + 1 : 1); j2 <= X.cols(); ++j2) {
                    const auto& a = X.at(i1, j1);
                    const auto& b = X.at(i2, j2);
                    if (i1 == i2) {
                        record(i1, j1, i2, j2, "same-row", a * b - q * (b * a));
                    } else if (j1 == j2) {
                        record(i1, j1, i2, j2, "same-column", a * b - q * (b * a));
                    } else if (j1 > j2) {
                        record(i1, j1, i2, j2, "antidiagonal-commute", a * b - b * a);
                    } else {
                        Element<P> corr = X.at(i1, j2) * X.at(i2, j1);
                        record(i1, j1, i2, j2, "diagonal",
                               a * b - b * a - LaurentScalar::q_minus_qinv() * corr);
                    }
                }
    return out;
}

}  // namespace qmin
