#pragma once

#include <array>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmin/element.hpp"
#include "qmin/errors.hpp"
#include "qmin/laurent.hpp"

namespace qmin {

/// The quantum-matrix algebra on generators x_{ij}, i in [m], j in [n],
/// presented by the four quasi-commutation relations (for i < l, j < k):
///
///   x_ij x_ik = q x_ik x_ij            x_ij x_lj = q x_lj x_ij
///   x_ik x_lj = x_lj x_ik              x_ij x_lk - x_lk x_ij = (q - q^-1) x_ik x_lj
///
/// Normal form: LaurentScalar-combinations of lex-nondecreasing words in the
/// generator order (i, j) ascending.  Rewriting swaps adjacent inversions;
/// each step strictly decreases the word lexicographically (the correction
/// term x_ik x_lj of the fourth relation is already ordered), so reduction
/// terminates.
///
/// The two-letter reduction table is filled in the constructor and never
/// mutated afterwards, so concurrent reads are safe.
class QMatrixAlgebra {
public:
    using Gen = int;  // (row-1)*cols + (col-1); integer order == lex order on (row, col)
    using Monomial = std::vector<Gen>;

    /// Term order: degree, then lexicographic.
    struct MonomialLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        }
    };

    QMatrixAlgebra(int m, int n) : m_(m), n_(n) {
        if (m < 1 || n < 1) throw OutOfBounds("matrix dimensions must be positive");
        const int N = m * n;
        table_.resize(static_cast<std::size_t>(N) * N);
        for (Gen u = 0; u < N; ++u)
            for (Gen v = 0; v < N; ++v)
                if (u > v) table_[static_cast<std::size_t>(u) * N + v] = reduce_pair(u, v);
    }

    int rows() const { return m_; }
    int cols() const { return n_; }

    Gen gen(int i, int j) const {
        if (i < 1 || i > m_ || j < 1 || j > n_) throw OutOfBounds("generator index out of range");
        return (i - 1) * n_ + (j - 1);
    }
    int row_of(Gen g) const { return g / n_ + 1; }
    int col_of(Gen g) const { return g % n_ + 1; }

    Monomial unit_monomial() const { return {}; }

    bool equals(const QMatrixAlgebra& o) const { return m_ == o.m_ && n_ == o.n_; }

    /// PBW normal form of an arbitrary word, as (scalar, normal word) pairs.
    std::vector<std::pair<LaurentScalar, Monomial>> reduce(const Monomial& word) const {
        std::vector<std::pair<LaurentScalar, Monomial>> out;
        std::vector<std::pair<LaurentScalar, Monomial>> work;
        work.emplace_back(LaurentScalar::one(), word);
        while (!work.empty()) {
            auto [c, w] = std::move(work.back());
            work.pop_back();
            std::size_t p = 0;
            while (p + 1 < w.size() && w[p] <= w[p + 1]) ++p;
            if (p + 1 >= w.size()) {
                out.emplace_back(std::move(c), std::move(w));
                continue;
            }
            for (const auto& [c2, pair] : pair_table(w[p], w[p + 1])) {
                Monomial w2 = w;
                w2[p] = pair[0];
                w2[p + 1] = pair[1];
                work.emplace_back(c * c2, std::move(w2));
            }
        }
        return out;
    }

    std::vector<std::pair<LaurentScalar, Monomial>> mul_monomials(const Monomial& a,
                                                                  const Monomial& b) const {
        Monomial w = a;
        w.insert(w.end(), b.begin(), b.end());
        return reduce(w);
    }

    std::string monomial_str(const Monomial& m) const {
        std::ostringstream os;
        for (std::size_t p = 0; p < m.size();) {
            std::size_t run = p;
            while (run < m.size() && m[run] == m[p]) ++run;
            if (p > 0) os << "*";
            os << "x[" << row_of(m[p]) << "," << col_of(m[p]) << "]";
            if (run - p > 1) os << "^" << (run - p);
            p = run;
        }
        return os.str();
    }

private:
    using Expansion = std::vector<std::pair<LaurentScalar, std::array<Gen, 2>>>;

    const Expansion& pair_table(Gen u, Gen v) const {
        return table_[static_cast<std::size_t>(u) * (m_ * n_) + v];
    }

    /// Normal form of the inverted two-letter word u v with u > v.
    Expansion reduce_pair(Gen u, Gen v) const {
        const int a = row_of(u), b = col_of(u);
        const int c = row_of(v), d = col_of(v);
        Expansion e;
        if (a == c || b == d) {
            // same row or same column: u v = q^-1 v u
            e.push_back({LaurentScalar::q_power(-1), {v, u}});
        } else if (b < d) {
            // u strictly south-west of v: commute
            e.push_back({LaurentScalar::one(), {v, u}});
        } else {
            // u strictly south-east of v: u v = v u - (q - q^-1) x_{cb} x_{ad}
            e.push_back({LaurentScalar::one(), {v, u}});
            e.push_back({-LaurentScalar::q_minus_qinv(), {gen(c, b), gen(a, d)}});
        }
        return e;
    }

    int m_, n_;
    std::vector<Expansion> table_;
};

/// PBW normal form of a word, returned as an algebra element.
inline Element<QMatrixAlgebra> pbw_reduce(const std::shared_ptr<const QMatrixAlgebra>& pres,
                                          const QMatrixAlgebra::Monomial& word) {
    Element<QMatrixAlgebra> r(pres);
    for (auto& [c, m] : pres->reduce(word)) r.add_term(std::move(m), c);
    return r;
}

}  // namespace qmin
