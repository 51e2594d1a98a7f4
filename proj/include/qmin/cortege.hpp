#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "qmin/errors.hpp"

namespace qmin {

/// A cortege (I|J): a pair of equal-cardinality strictly increasing index
/// sets, rows I and columns J.  Value type with canonical sorted storage.
class Cortege {
public:
    Cortege() = default;  // the empty cortege

    Cortege(std::vector<int> rows, std::vector<int> cols)
        : rows_(std::move(rows)), cols_(std::move(cols)) {
        if (rows_.size() != cols_.size())
            throw PreconditionViolated("cortege sides differ in size");
        check_strict(rows_, "row");
        check_strict(cols_, "column");
    }

    /// ([a..b] | [c..d]); an empty side is written with a > b.
    static Cortege interval(int a, int b, int c, int d) {
        return Cortege(make_interval(a, b), make_interval(c, d));
    }

    const std::vector<int>& rows() const { return rows_; }
    const std::vector<int>& cols() const { return cols_; }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    int min_row() const { return front(rows_); }
    int max_row() const { return back(rows_); }
    int min_col() const { return front(cols_); }
    int max_col() const { return back(cols_); }

    bool rows_interval() const { return is_interval(rows_); }
    bool cols_interval() const { return is_interval(cols_); }
    bool is_double_interval() const { return rows_interval() && cols_interval(); }

    /// J is an initial interval [1..k].
    bool is_flag() const { return cols_.empty() || (cols_interval() && cols_[0] == 1); }
    /// I is an initial interval [1..k].
    bool is_coflag() const { return rows_.empty() || (rows_interval() && rows_[0] == 1); }
    /// Double interval with at least one initial side.
    bool is_pressed() const { return is_double_interval() && (is_flag() || is_coflag()); }

    bool contains_row(int i) const { return std::binary_search(rows_.begin(), rows_.end(), i); }
    bool contains_col(int j) const { return std::binary_search(cols_.begin(), cols_.end(), j); }

    bool within(int m, int n) const {
        return (rows_.empty() || (rows_.front() >= 1 && rows_.back() <= m)) &&
               (cols_.empty() || (cols_.front() >= 1 && cols_.back() <= n));
    }

    /// Text form "[1,3|2,4]"; "[|]" for the empty cortege.
    std::string str() const {
        std::ostringstream os;
        os << "[";
        join(os, rows_);
        os << "|";
        join(os, cols_);
        os << "]";
        return os.str();
    }

    bool operator==(const Cortege& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
    bool operator!=(const Cortege& o) const { return !(*this == o); }
    bool operator<(const Cortege& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        return cols_ < o.cols_;
    }

private:
    static std::vector<int> make_interval(int a, int b) {
        std::vector<int> v;
        for (int x = a; x <= b; ++x) v.push_back(x);
        return v;
    }

    static void check_strict(const std::vector<int>& v, const char* side) {
        for (std::size_t p = 0; p < v.size(); ++p) {
            if (v[p] < 1)
                throw PreconditionViolated(std::string(side) + " indices must be >= 1");
            if (p + 1 < v.size() && v[p] >= v[p + 1])
                throw PreconditionViolated(std::string(side) +
                                           " indices must be strictly increasing");
        }
    }

    static bool is_interval(const std::vector<int>& v) {
        return v.empty() || v.back() - v.front() + 1 == static_cast<int>(v.size());
    }

    static int front(const std::vector<int>& v) {
        if (v.empty()) throw PreconditionViolated("min/max of an empty cortege side");
        return v.front();
    }
    static int back(const std::vector<int>& v) {
        if (v.empty()) throw PreconditionViolated("min/max of an empty cortege side");
        return v.back();
    }

    static void join(std::ostringstream& os, const std::vector<int>& v) {
        for (std::size_t p = 0; p < v.size(); ++p) {
            if (p) os << ",";
            os << v[p];
        }
    }

    std::vector<int> rows_, cols_;
};

/// Induction measure of the reconstruction's Cases 1-2:
/// sigma = (max I - min I) + (max J - min J).
inline int sigma_spread(const Cortege& c) {
    return c.max_row() - c.min_row() + c.max_col() - c.min_col();
}

/// Induction measure of Case 3: eta = max I + min I + max J + min J.
inline int eta_sum(const Cortege& c) {
    return c.max_row() + c.min_row() + c.max_col() + c.min_col();
}

/// All size-k subsets of [n], lexicographic.
inline std::vector<std::vector<int>> subsets_of(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = next; x <= n - (k - static_cast<int>(cur.size())) + 1; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Every cortege of an m x n matrix, ordered by size then lexicographically.
inline std::vector<Cortege> all_corteges(int m, int n) {
    std::vector<Cortege> out;
    for (int k = 0; k <= std::min(m, n); ++k)
        for (const auto& I : subsets_of(m, k))
            for (const auto& J : subsets_of(n, k)) out.emplace_back(I, J);
    return out;
}

}  // namespace qmin
