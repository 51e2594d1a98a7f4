#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmin/cortege.hpp"
#include "qmin/errors.hpp"
#include "qmin/laurent.hpp"
#include "qmin/qmatrix.hpp"

namespace qmin {

/// One summand of a quadratic identity: sign * q^delta * D(left) * D(right).
struct QITerm {
    int sign = 1;  // +1 or -1
    int delta = 0;
    Cortege left, right;

    bool operator==(const QITerm& o) const {
        return sign == o.sign && delta == o.delta && left == o.left && right == o.right;
    }
};

/// A formal quadratic identity in "sum equals zero" form over an ambient
/// m x n index range.  Homogeneity is a checkable predicate, not an
/// invariant: the parser accepts inhomogeneous input.
class QIExpr {
public:
    QIExpr(int m, int n, std::vector<QITerm> terms)
        : m_(m), n_(n), terms_(std::move(terms)) {
        if (terms_.empty()) throw PreconditionViolated("expression needs at least one term");
        for (const auto& t : terms_)
            if (!t.left.within(m_, n_) || !t.right.within(m_, n_))
                throw IndexOutOfRange("cortege outside the ambient " + std::to_string(m_) + "x" +
                                      std::to_string(n_) + " range");
    }

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<QITerm>& terms() const { return terms_; }

    bool operator==(const QIExpr& o) const {
        return m_ == o.m_ && n_ == o.n_ && terms_ == o.terms_;
    }

private:
    int m_, n_;
    std::vector<QITerm> terms_;
};

/// True iff I u I', I n I', J u J', J n J' are each constant across terms.
inline bool is_homogeneous(const QIExpr& e) {
    auto set_union = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    };
    auto set_inter = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    };
    const auto& t0 = e.terms().front();
    const auto ru = set_union(t0.left.rows(), t0.right.rows());
    const auto ri = set_inter(t0.left.rows(), t0.right.rows());
    const auto cu = set_union(t0.left.cols(), t0.right.cols());
    const auto ci = set_inter(t0.left.cols(), t0.right.cols());
    for (const auto& t : e.terms()) {
        if (set_union(t.left.rows(), t.right.rows()) != ru) return false;
        if (set_inter(t.left.rows(), t.right.rows()) != ri) return false;
        if (set_union(t.left.cols(), t.right.cols()) != cu) return false;
        if (set_inter(t.left.cols(), t.right.cols()) != ci) return false;
    }
    return true;
}

namespace detail {

class QIParser {
public:
    QIParser(const std::string& text, int m, int n) : s_(text), m_(m), n_(n) {}

    QIExpr parse() {
        std::vector<QITerm> terms;
        skip_ws();
        while (pos_ < s_.size()) {
            terms.push_back(parse_term());
            skip_ws();
        }
        if (terms.empty()) throw SyntaxError("empty expression", 0);
        return QIExpr(m_, n_, std::move(terms));
    }

private:
    QITerm parse_term() {
        QITerm t;
        skip_ws();
        if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-'))
            throw SyntaxError("expected '+' or '-'", pos_);
        t.sign = s_[pos_] == '+' ? 1 : -1;
        ++pos_;
        skip_ws();
        if (pos_ + 1 < s_.size() && s_[pos_] == 'q' && s_[pos_ + 1] == '^') {
            pos_ += 2;
            t.delta = parse_int();
            skip_ws();
        }
        t.left = parse_minor();
        skip_ws();
        t.right = parse_minor();
        return t;
    }

    Cortege parse_minor() {
        const std::size_t start = pos_;
        expect('[');
        auto rows = parse_intlist(']', '|');
        expect('|');
        auto cols = parse_intlist(']', ']');
        expect(']');
        if (rows.size() != cols.size())
            throw SyntaxError("minor has " + std::to_string(rows.size()) + " rows but " +
                                  std::to_string(cols.size()) + " columns",
                              start);
        for (int i : rows)
            if (i < 1 || i > m_)
                throw IndexOutOfRange("row index " + std::to_string(i) + " outside [1.." +
                                      std::to_string(m_) + "]");
        for (int j : cols)
            if (j < 1 || j > n_)
                throw IndexOutOfRange("column index " + std::to_string(j) + " outside [1.." +
                                      std::to_string(n_) + "]");
        try {
            return Cortege(std::move(rows), std::move(cols));
        } catch (const PreconditionViolated& e) {
            throw SyntaxError(e.what(), start);
        }
    }

    std::vector<int> parse_intlist(char stop1, char stop2) {
        std::vector<int> v;
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == stop1 || s_[pos_] == stop2)) return v;
        v.push_back(parse_int());
        skip_ws();
        while (pos_ < s_.size() && s_[pos_] == ',') {
            ++pos_;
            v.push_back(parse_int());
            skip_ws();
        }
        return v;
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw SyntaxError("expected an integer", start);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) throw SyntaxError("integer too large", start);
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    void expect(char ch) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != ch)
            throw SyntaxError(std::string("expected '") + ch + "'", pos_);
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int m_, n_;
};

}  // namespace detail

/// Parses the ASCII form, e.g. "+ [2|1][1,3|1,2] - q^1 [1,2|1,2][3|1]".
/// Grammar: expr := term+ ; term := sign ('q^' int)? minor minor ;
/// minor := '[' intlist '|' intlist ']'.  Whitespace is insignificant
/// between tokens; an omitted q-power means delta = 0.
inline QIExpr parse_qi(const std::string& text, int m, int n) {
    return detail::QIParser(text, m, n).parse();
}

inline std::string print_qi(const QIExpr& e) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : e.terms()) {
        if (!first) os << " ";
        first = false;
        os << (t.sign > 0 ? "+" : "-") << " ";
        if (t.delta != 0) os << "q^" << t.delta << " ";
        os << t.left.str() << t.right.str();
    }
    return os.str();
}

namespace detail {

inline std::vector<int> with_index(std::vector<int> v, int x, const char* clause) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x)
        throw PreconditionViolated(std::string("disjointness violated: ") + clause);
    v.insert(it, x);
    return v;
}

inline void require(bool ok, const char* clause) {
    if (!ok) throw PreconditionViolated(clause);
}

inline void check_set(const std::vector<int>& v, int bound, const char* clause) {
    for (std::size_t p = 0; p < v.size(); ++p) {
        require(v[p] >= 1 && v[p] <= bound, clause);
        require(p + 1 >= v.size() || v[p] < v[p + 1], clause);
    }
}

}  // namespace detail

/// Pluecker-type relation with a row triple (sum-equals-zero form):
///   + D(Aj|B) D(Aik|Bl) - D(Aij|Bl) D(Ak|B) - D(Ajk|Bl) D(Ai|B).
inline QIExpr make_plucker(int m, int n, std::vector<int> A, std::vector<int> B, int i, int j,
                           int k, int l) {
    using detail::require;
    using detail::with_index;
    detail::check_set(A, m, "A must be a strictly increasing subset of [m]");
    detail::check_set(B, n, "B must be a strictly increasing subset of [n]");
    require(A.size() + 1 == B.size(), "|A| + 1 = |B|");
    require(1 <= i && i < j && j < k && k <= m, "rows must satisfy 1 <= i < j < k <= m");
    require(1 <= l && l <= n, "column l within [n]");
    require(!std::binary_search(A.begin(), A.end(), i) &&
                !std::binary_search(A.begin(), A.end(), j) &&
                !std::binary_search(A.begin(), A.end(), k),
            "{i,j,k} disjoint from A");
    require(!std::binary_search(B.begin(), B.end(), l), "l not in B");
    const auto Aj = with_index(A, j, "Aj");
    const auto Aik = with_index(with_index(A, i, "Ai"), k, "Aik");
    const auto Aij = with_index(with_index(A, i, "Ai"), j, "Aij");
    const auto Ajk = with_index(with_index(A, j, "Aj"), k, "Ajk");
    const auto Ai = with_index(A, i, "Ai");
    const auto Ak = with_index(A, k, "Ak");
    const auto Bl = with_index(B, l, "Bl");
    std::vector<QITerm> terms{
        {+1, 0, Cortege(Aj, B), Cortege(Aik, Bl)},
        {-1, 0, Cortege(Aij, Bl), Cortege(Ak, B)},
        {-1, 0, Cortege(Ajk, Bl), Cortege(Ai, B)},
    };
    return QIExpr(m, n, std::move(terms));
}

/// Co-Pluecker-type relation with a column triple:
///   + D(A|Bj) D(Al|Bik) - D(Al|Bij) D(A|Bk) - D(Al|Bjk) D(A|Bi).
inline QIExpr make_coplucker(int m, int n, std::vector<int> A, std::vector<int> B, int l, int i,
                             int j, int k) {
    using detail::require;
    using detail::with_index;
    detail::check_set(A, m, "A must be a strictly increasing subset of [m]");
    detail::check_set(B, n, "B must be a strictly increasing subset of [n]");
    require(A.size() == B.size() + 1, "|A| = |B| + 1");
    require(1 <= i && i < j && j < k && k <= n, "columns must satisfy 1 <= i < j < k <= n");
    require(1 <= l && l <= m, "row l within [m]");
    require(!std::binary_search(B.begin(), B.end(), i) &&
                !std::binary_search(B.begin(), B.end(), j) &&
                !std::binary_search(B.begin(), B.end(), k),
            "{i,j,k} disjoint from B");
    require(!std::binary_search(A.begin(), A.end(), l), "l not in A");
    const auto Bj = with_index(B, j, "Bj");
    const auto Bik = with_index(with_index(B, i, "Bi"), k, "Bik");
    const auto Bij = with_index(with_index(B, i, "Bi"), j, "Bij");
    const auto Bjk = with_index(with_index(B, j, "Bj"), k, "Bjk");
    const auto Bi = with_index(B, i, "Bi");
    const auto Bk = with_index(B, k, "Bk");
    const auto Al = with_index(A, l, "Al");
    std::vector<QITerm> terms{
        {+1, 0, Cortege(A, Bj), Cortege(Al, Bik)},
        {-1, 0, Cortege(Al, Bij), Cortege(A, Bk)},
        {-1, 0, Cortege(Al, Bjk), Cortege(A, Bi)},
    };
    return QIExpr(m, n, std::move(terms));
}

/// Dodgson-type relation on the intervals A = [i+1..k-1], B = [j+1..l-1]:
///   + D(Ai|Bj) D(Ak|Bl) - D(Aik|Bjl) D(A|B) - q D(Ai|Bl) D(Ak|Bj).
/// Requires k - i = l - j >= 1; with k = i the corteges degenerate and no
/// identity holds.
inline QIExpr make_dodgson(int m, int n, int i, int k, int j, int l) {
    using detail::require;
    require(k - i == l - j, "k - i = l - j");
    require(k > i, "k - i = l - j >= 1 (distinct rows and columns)");
    require(1 <= i && k <= m && 1 <= j && l <= n, "indices within the m x n range");
    auto iv = [](int a, int b) {
        std::vector<int> v;
        for (int x = a; x <= b; ++x) v.push_back(x);
        return v;
    };
    const auto A = iv(i + 1, k - 1);
    const auto B = iv(j + 1, l - 1);
    std::vector<QITerm> terms{
        {+1, 0, Cortege(iv(i, k - 1), iv(j, l - 1)), Cortege(iv(i + 1, k), iv(j + 1, l))},
        {-1, 0, Cortege(iv(i, k), iv(j, l)), Cortege(A, B)},
        {-1, 1, Cortege(iv(i, k - 1), iv(j + 1, l)), Cortege(iv(i + 1, k), iv(j, l - 1))},
    };
    return QIExpr(m, n, std::move(terms));
}

/// Evaluates the expression against a matrix: sum of
/// sign * q^delta * minor(left) * minor(right), in normal form.
template <class P>
Element<P> evaluate_qi(const QIExpr& e, const QMatrix<P>& X) {
    if (e.m() != X.rows() || e.n() != X.cols())
        throw DimensionMismatch("expression is " + std::to_string(e.m()) + "x" +
                                std::to_string(e.n()) + " but matrix is " +
                                std::to_string(X.rows()) + "x" + std::to_string(X.cols()));
    Element<P> acc(X.presentation());
    for (const auto& t : e.terms()) {
        Element<P> prod = quantum_minor(X, t.left) * quantum_minor(X, t.right);
        acc += LaurentScalar::q_power(t.delta, t.sign) * prod;
    }
    return acc;
}

}  // namespace qmin
