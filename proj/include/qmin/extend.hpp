#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qmin/cortege.hpp"
#include "qmin/errors.hpp"
#include "qmin/grid.hpp"
#include "qmin/pressed.hpp"
#include "qmin/qi_expr.hpp"
#include "qmin/qmatrix.hpp"
#include "qmin/torus.hpp"

namespace qmin {

/// A total map from every cortege of the m x n index range to a torus
/// element, normalized to 1 at the empty cortege.
class QIFunctionTable {
public:
    QIFunctionTable(int m, int n, std::shared_ptr<const TorusAlgebra> torus,
                    std::map<Cortege, TorusElement> values)
        : m_(m), n_(n), torus_(std::move(torus)), values_(std::move(values)) {
        for (const auto& c : all_corteges(m_, n_))
            if (values_.find(c) == values_.end())
                throw Error("table is missing cortege " + c.str());
        if (at(Cortege()) != TorusElement::unit(torus_))
            throw Error("table is not normalized at the empty cortege");
    }

    int m() const { return m_; }
    int n() const { return n_; }
    const std::shared_ptr<const TorusAlgebra>& torus() const { return torus_; }
    const std::map<Cortege, TorusElement>& values() const { return values_; }

    const TorusElement& at(const Cortege& c) const {
        auto it = values_.find(c);
        if (it == values_.end()) throw OutOfBounds("no table value at " + c.str());
        return it->second;
    }

    /// Restriction to the pressed corteges (including the empty one).
    std::map<Cortege, TorusElement> restrict_pressed() const {
        std::map<Cortege, TorusElement> out;
        for (const auto& [c, v] : values_)
            if (c.is_pressed()) out.emplace(c, v);
        return out;
    }

    bool operator==(const QIFunctionTable& o) const {
        return m_ == o.m_ && n_ == o.n_ && values_ == o.values_;
    }

    /// JSON object: cortege text form -> canonical element text form.
    nlohmann::json to_json() const {
        nlohmann::json obj = nlohmann::json::object();
        for (const auto& [c, v] : values_) obj[c.str()] = v.str();
        return obj;
    }

private:
    int m_, n_;
    std::shared_ptr<const TorusAlgebra> torus_;
    std::map<Cortege, TorusElement> values_;
};

/// Extension pipeline: turn pressed values into vertex weights, verify the
/// grid commutation laws on them, and read the full QI-function off the
/// quantum minors of the resulting path matrix.  The extension restricts to
/// f0 on the pressed corteges by the telescoping of pressed flows.
inline QIFunctionTable extend_f0(const PressedAssignment& pa) {
    const auto weights = build_weights(pa);
    const auto issues = verify_wcast(weights, pa);
    if (!issues.empty())
        throw WcastViolation("weight commutation fails on " + std::to_string(issues.size()) +
                             " vertex pairs; first: (" + std::to_string(issues[0].i) + "," +
                             std::to_string(issues[0].j) + ") vs (" + std::to_string(issues[0].i2) +
                             "," + std::to_string(issues[0].j2) + ")");
    const ExtendedGrid g(pa.m(), pa.n());
    const auto M = path_matrix(g, pa.torus(), [&](int i, int j) { return weights.at({i, j}); });
    std::map<Cortege, TorusElement> values;
    for (const auto& c : all_corteges(pa.m(), pa.n())) values.emplace(c, quantum_minor(M, c));
    return QIFunctionTable(pa.m(), pa.n(), pa.torus(), std::move(values));
}

/// Evaluates a QI expression against a function table.
inline TorusElement evaluate_qi(const QIExpr& e, const QIFunctionTable& f) {
    if (e.m() != f.m() || e.n() != f.n())
        throw DimensionMismatch("expression is " + std::to_string(e.m()) + "x" +
                                std::to_string(e.n()) + " but table is " + std::to_string(f.m()) +
                                "x" + std::to_string(f.n()));
    TorusElement acc(f.torus());
    for (const auto& t : e.terms())
        acc += LaurentScalar::q_power(t.delta, t.sign) * (f.at(t.left) * f.at(t.right));
    return acc;
}

namespace detail {

inline std::vector<int> set_insert(std::vector<int> v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x)
        throw PreconditionViolated("index " + std::to_string(x) + " already present");
    v.insert(it, x);
    return v;
}

inline std::vector<int> set_remove(std::vector<int> v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x)
        throw PreconditionViolated("index " + std::to_string(x) + " not present");
    v.erase(it);
    return v;
}

}  // namespace detail

/// Rebuilds the full table from its pressed restriction by running the
/// uniqueness proof forward:
///
///   Case 3 first: non-pressed double intervals in increasing
///   eta = max I + min I + max J + min J, each solved from the Dodgson
///   relation by exact left division by f(Ai|Bj);
///
///   then Cases 1-2: corteges with a non-interval side in increasing
///   sigma = (max I - min I) + (max J - min J), rows taking precedence,
///   each solved from the Pluecker (resp. co-Pluecker) relation with the
///   fixed choices l = max(J) (resp. max(I)) and j = the smallest gap.
///
/// Every dependency's measure is asserted to drop, every pivot must be
/// nonzero and every quotient exact; otherwise the input was not the
/// restriction of a QI-function and DivisionFailure is raised.
inline QIFunctionTable reconstruct(const std::map<Cortege, TorusElement>& f0_values,
                                   const std::shared_ptr<const TorusAlgebra>& torus, int m,
                                   int n) {
    std::map<Cortege, TorusElement> table;
    {
        std::vector<Cortege> pint = pressed_corteges(m, n);
        pint.push_back(Cortege());
        for (const auto& c : pint) {
            auto it = f0_values.find(c);
            if (it == f0_values.end())
                throw NotPressed("input lacks a value at pressed cortege " + c.str());
            if (it->second.is_zero())
                throw DivisionFailure("zero value at pressed cortege " + c.str());
            table.emplace(c, it->second);
        }
        if (f0_values.size() != pint.size())
            throw NotPressed("input contains a value at a non-pressed cortege");
        if (table.at(Cortege()) != TorusElement::unit(torus))
            throw Error("input is not normalized at the empty cortege");
    }

    const LaurentScalar q = LaurentScalar::q_power(1);
    auto lookup = [&](const Cortege& c) -> const TorusElement& {
        auto it = table.find(c);
        if (it == table.end()) throw Error("dependency " + c.str() + " not yet computed");
        return it->second;
    };
    auto divide = [&](const Cortege& target, const Cortege& pivot, const TorusElement& rhs) {
        const TorusElement& p = lookup(pivot);
        if (p.is_zero())
            throw DivisionFailure("zero pivot f(" + pivot.str() + ") while solving " +
                                  target.str());
        try {
            table.emplace(target, torus_left_divide(p, rhs));
        } catch (const NotDivisible& e) {
            throw DivisionFailure("inexact quotient while solving " + target.str() + ": " +
                                  e.what());
        }
    };

    // Case 3: non-pressed double intervals by ascending eta.
    std::vector<Cortege> case3;
    for (const auto& c : all_corteges(m, n))
        if (!c.empty() && c.is_double_interval() && !c.is_pressed()) case3.push_back(c);
    std::stable_sort(case3.begin(), case3.end(),
                     [](const Cortege& a, const Cortege& b) { return eta_sum(a) < eta_sum(b); });
    for (const auto& c : case3) {
        const int i = c.min_row() - 1, k = c.max_row();
        const int j = c.min_col() - 1, l = c.max_col();
        const Cortege pivot = Cortege::interval(i, k - 1, j, l - 1);       // (Ai|Bj)
        const Cortege big = Cortege::interval(i, k, j, l);                 // (Aik|Bjl)
        const Cortege inner = Cortege::interval(i + 1, k - 1, j + 1, l - 1);  // (A|B)
        const Cortege ne = Cortege::interval(i, k - 1, j + 1, l);          // (Ai|Bl)
        const Cortege sw = Cortege::interval(i + 1, k, j, l - 1);          // (Ak|Bj)
        for (const auto& dep : {pivot, big, inner, ne, sw})
            if (!dep.empty() && eta_sum(dep) >= eta_sum(c))
                throw Error("eta failed to drop for " + dep.str() + " under " + c.str());
        const TorusElement rhs =
            lookup(big) * lookup(inner) + q * (lookup(ne) * lookup(sw));
        divide(c, pivot, rhs);
    }

    // Cases 1-2: corteges with a non-interval side by ascending sigma.
    std::vector<Cortege> case12;
    for (const auto& c : all_corteges(m, n))
        if (!c.empty() && !c.is_double_interval()) case12.push_back(c);
    std::stable_sort(case12.begin(), case12.end(), [](const Cortege& a, const Cortege& b) {
        return sigma_spread(a) < sigma_spread(b);
    });
    auto smallest_gap = [](const std::vector<int>& v) {
        for (int x = v.front() + 1; x < v.back(); ++x)
            if (!std::binary_search(v.begin(), v.end(), x)) return x;
        throw Error("interval has no gap");
    };
    for (const auto& c : case12) {
        Cortege pivot, t2a, t2b, t3a, t3b;
        if (!c.rows_interval()) {
            // Case 1: Pluecker relation along the rows; unknown is f(Aik|Bl).
            const int i = c.min_row(), k = c.max_row(), j = smallest_gap(c.rows());
            const int l = c.max_col();
            const auto A = detail::set_remove(detail::set_remove(c.rows(), i), k);
            const auto B = detail::set_remove(c.cols(), l);
            pivot = Cortege(detail::set_insert(A, j), B);
            t2a = Cortege(detail::set_insert(detail::set_insert(A, i), j), c.cols());
            t2b = Cortege(detail::set_insert(A, k), B);
            t3a = Cortege(detail::set_insert(detail::set_insert(A, j), k), c.cols());
            t3b = Cortege(detail::set_insert(A, i), B);
        } else {
            // Case 2: co-Pluecker relation along the columns.
            const int i = c.min_col(), k = c.max_col(), j = smallest_gap(c.cols());
            const int l = c.max_row();
            const auto B = detail::set_remove(detail::set_remove(c.cols(), i), k);
            const auto A = detail::set_remove(c.rows(), l);
            pivot = Cortege(A, detail::set_insert(B, j));
            t2a = Cortege(c.rows(), detail::set_insert(detail::set_insert(B, i), j));
            t2b = Cortege(A, detail::set_insert(B, k));
            t3a = Cortege(c.rows(), detail::set_insert(detail::set_insert(B, j), k));
            t3b = Cortege(A, detail::set_insert(B, i));
        }
        for (const auto& dep : {pivot, t2a, t2b, t3a, t3b})
            if (sigma_spread(dep) >= sigma_spread(c))
                throw Error("sigma failed to drop for " + dep.str() + " under " + c.str());
        const TorusElement rhs = lookup(t2a) * lookup(t2b) + lookup(t3a) * lookup(t3b);
        divide(c, pivot, rhs);
    }

    return QIFunctionTable(m, n, torus, std::move(table));
}

}  // namespace qmin
