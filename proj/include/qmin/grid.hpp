#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qmin/cortege.hpp"
#include "qmin/errors.hpp"
#include "qmin/qmatrix.hpp"
#include "qmin/torus.hpp"

namespace qmin {

/// A vertex of the extended grid, in Cartesian convention: the first
/// coordinate is the vertical one (row), rows grow upward.
struct GridVertex {
    int row = 0, col = 0;
    bool operator==(const GridVertex& o) const { return row == o.row && col == o.col; }
    bool operator!=(const GridVertex& o) const { return !(*this == o); }
    bool operator<(const GridVertex& o) const {
        return row != o.row ? row < o.row : col < o.col;
    }
};

/// The extended m x n grid: vertices ({0} u [m]) x ({0} u [n]) minus (0,0),
/// sources r_i = (i,0), sinks c_j = (0,j), inner vertices W = [m] x [n];
/// H-edges (i,j-1) -> (i,j) run east, V-edges (i,j) -> (i-1,j) run south.
/// The inner vertices generate a quantum torus with commutation exponents
///   c((i,j),(i,j')) = +1 for j < j'   (same row, west first),
///   c((i,j),(i',j)) = +1 for i < i'   (same column, south first),
///   0 otherwise.
class ExtendedGrid {
public:
    ExtendedGrid(int m, int n) : m_(m), n_(n) {
        if (m < 1 || n < 1) throw OutOfBounds("grid dimensions must be positive");
    }

    int rows() const { return m_; }
    int cols() const { return n_; }

    bool is_source(GridVertex v) const { return v.col == 0 && v.row >= 1 && v.row <= m_; }
    bool is_sink(GridVertex v) const { return v.row == 0 && v.col >= 1 && v.col <= n_; }
    bool is_inner(GridVertex v) const {
        return v.row >= 1 && v.row <= m_ && v.col >= 1 && v.col <= n_;
    }

    /// Generator index of an inner vertex, row-major.
    std::size_t gen_id(int i, int j) const {
        if (i < 1 || i > m_ || j < 1 || j > n_) throw OutOfBounds("inner vertex out of range");
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    int comm_exponent(GridVertex u, GridVertex v) const {
        if (u.row == v.row && u.col != v.col) return u.col < v.col ? 1 : -1;
        if (u.col == v.col && u.row != v.row) return u.row < v.row ? 1 : -1;
        return 0;
    }

    /// The torus of inner-vertex generators, named w(i,j).
    std::shared_ptr<const TorusAlgebra> make_torus() const {
        const std::size_t N = static_cast<std::size_t>(m_) * n_;
        std::vector<std::string> names(N);
        std::vector<std::vector<int>> comm(N, std::vector<int>(N, 0));
        for (int i = 1; i <= m_; ++i)
            for (int j = 1; j <= n_; ++j) {
                names[gen_id(i, j)] = "w(" + std::to_string(i) + "," + std::to_string(j) + ")";
                for (int i2 = 1; i2 <= m_; ++i2)
                    for (int j2 = 1; j2 <= n_; ++j2)
                        comm[gen_id(i, j)][gen_id(i2, j2)] =
                            comm_exponent({i, j}, {i2, j2});
            }
        return std::make_shared<const TorusAlgebra>(std::move(names), std::move(comm));
    }

private:
    int m_, n_;
};

/// A directed source-to-sink path, stored as its vertex sequence.
struct GridPath {
    std::vector<GridVertex> vertices;

    GridVertex source() const { return vertices.front(); }
    GridVertex sink() const { return vertices.back(); }

    /// The turn sequence u_1, v_1, ..., u_d: east-to-south turns at the u's,
    /// south-to-east turns at the v's.  Always starts and ends with an
    /// east-to-south turn, so the length is odd.
    std::vector<GridVertex> turns() const {
        std::vector<GridVertex> out;
        for (std::size_t p = 1; p + 1 < vertices.size(); ++p) {
            const bool in_east = vertices[p].col == vertices[p - 1].col + 1;
            const bool out_east = vertices[p + 1].col == vertices[p].col + 1;
            if (in_east != out_east) out.push_back(vertices[p]);
        }
        return out;
    }
};

/// All monotone paths from source r_i to sink c_j, in a fixed order
/// (east explored before south at every branch).
inline std::vector<GridPath> enumerate_paths(const ExtendedGrid& g, int i, int j) {
    if (i < 1 || i > g.rows() || j < 1 || j > g.cols())
        throw OutOfBounds("source/sink index out of range");
    std::vector<GridPath> out;
    std::vector<GridVertex> cur{{i, 0}};
    auto rec = [&](auto&& self, GridVertex v) -> void {
        if (v.row == 0) {
            if (v.col == j) out.push_back(GridPath{cur});
            return;
        }
        // east, while staying inside column range
        if (v.col < j) {
            cur.push_back({v.row, v.col + 1});
            self(self, {v.row, v.col + 1});
            cur.pop_back();
        }
        // south; never re-enter the source column, and only drop onto the
        // sink row at the target column
        if (v.col >= 1 && (v.row > 1 || v.col == j)) {
            cur.push_back({v.row - 1, v.col});
            self(self, {v.row - 1, v.col});
            cur.pop_back();
        }
    };
    rec(rec, {i, 0});
    return out;
}

/// Weight of a path as the ordered product of its edge weights:
/// w(e) = W(v) for an H-edge leaving a source, W(u)^-1 W(v) for an inner
/// H-edge, 1 for a V-edge.  The telescoped turn form
/// W(u_1) W(v_1)^-1 W(u_2) ... W(u_d) is computed as well and the two are
/// checked against each other.
template <class WeightFn>
TorusElement path_weight(const ExtendedGrid& g, const GridPath& p,
                         const std::shared_ptr<const TorusAlgebra>& torus, WeightFn&& weight) {
    TorusElement edge_prod = TorusElement::unit(torus);
    for (std::size_t e = 1; e < p.vertices.size(); ++e) {
        const GridVertex u = p.vertices[e - 1];
        const GridVertex v = p.vertices[e];
        if (v.col == u.col + 1) {  // H-edge
            if (g.is_source(u))
                edge_prod *= weight(v.row, v.col);
            else
                edge_prod *= torus_inverse(weight(u.row, u.col)) * weight(v.row, v.col);
        }
        // V-edges have weight 1
    }
    TorusElement turn_prod = TorusElement::unit(torus);
    const auto ts = p.turns();
    for (std::size_t t = 0; t < ts.size(); ++t) {
        TorusElement w = weight(ts[t].row, ts[t].col);
        turn_prod *= (t % 2 == 0) ? w : torus_inverse(w);
    }
    if (edge_prod != turn_prod)
        throw Error("edge product and telescoped turn product disagree on a path");
    return edge_prod;
}

/// Path weight over the grid's own torus (vertex (i,j) weighs its generator).
inline TorusElement path_weight(const ExtendedGrid& g, const GridPath& p,
                                const std::shared_ptr<const TorusAlgebra>& torus) {
    return path_weight(g, p, torus, [&](int i, int j) {
        return torus_generator(torus, g.gen_id(i, j));
    });
}

/// A vertex-disjoint system of source-to-sink paths for a cortege, paths
/// ordered by increasing source index.
struct Flow {
    Cortege cortege;
    std::vector<GridPath> paths;
};

/// All (I|J)-flows: by planarity the path from r_{i(l)} must end at
/// c_{j(l)}, so enumeration backtracks over per-source path choices with
/// incremental vertex-occupancy pruning.  Deterministic order.
inline std::vector<Flow> enumerate_flows(const ExtendedGrid& g, const Cortege& c) {
    if (!c.within(g.rows(), g.cols())) throw OutOfBounds("cortege " + c.str() + " out of range");
    const std::size_t k = c.size();
    std::vector<std::vector<GridPath>> choices(k);
    for (std::size_t l = 0; l < k; ++l)
        choices[l] = enumerate_paths(g, c.rows()[l], c.cols()[l]);
    std::vector<Flow> out;
    std::vector<GridPath> cur(k);
    std::vector<std::vector<bool>> used(static_cast<std::size_t>(g.rows()) + 1,
                                        std::vector<bool>(g.cols() + 1, false));
    auto rec = [&](auto&& self, std::size_t l) -> void {
        if (l == k) {
            out.push_back(Flow{c, cur});
            return;
        }
        for (const auto& p : choices[l]) {
            bool free = true;
            for (const auto& v : p.vertices)
                if (used[v.row][v.col]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (const auto& v : p.vertices) used[v.row][v.col] = true;
            cur[l] = p;
            self(self, l + 1);
            for (const auto& v : p.vertices) used[v.row][v.col] = false;
        }
    };
    rec(rec, 0);
    return out;
}

/// Flow weight: the ordered product w(P_1) w(P_2) ... w(P_k).
template <class WeightFn>
TorusElement flow_weight(const ExtendedGrid& g, const Flow& f,
                         const std::shared_ptr<const TorusAlgebra>& torus, WeightFn&& weight) {
    TorusElement prod = TorusElement::unit(torus);
    for (const auto& p : f.paths) prod *= path_weight(g, p, torus, weight);
    return prod;
}

inline TorusElement flow_weight(const ExtendedGrid& g, const Flow& f,
                                const std::shared_ptr<const TorusAlgebra>& torus) {
    return flow_weight(g, f, torus, [&](int i, int j) {
        return torus_generator(torus, g.gen_id(i, j));
    });
}

/// Path matrix: entry (i,j) sums the weights of all r_i -> c_j paths.
template <class WeightFn>
QMatrix<TorusAlgebra> path_matrix(const ExtendedGrid& g,
                                  const std::shared_ptr<const TorusAlgebra>& torus,
                                  WeightFn&& weight) {
    QMatrix<TorusAlgebra> M(g.rows(), g.cols(), torus);
    for (int i = 1; i <= g.rows(); ++i)
        for (int j = 1; j <= g.cols(); ++j) {
            TorusElement sum(torus);
            for (const auto& p : enumerate_paths(g, i, j))
                sum += path_weight(g, p, torus, weight);
            M.set(i, j, std::move(sum));
        }
    return M;
}

inline QMatrix<TorusAlgebra> path_matrix(const ExtendedGrid& g,
                                         const std::shared_ptr<const TorusAlgebra>& torus) {
    return path_matrix(g, torus, [&](int i, int j) {
        return torus_generator(torus, g.gen_id(i, j));
    });
}

/// The pressed interval cortege pi(i,j) = ([i-k+1..i] | [j-k+1..j]) with
/// k = min(i,j); a bijection from [m] x [n] onto the nonempty pressed
/// corteges.
inline Cortege pressed_map(int m, int n, int i, int j) {
    if (i < 1 || i > m || j < 1 || j > n) throw OutOfBounds("pressed_map index out of range");
    const int k = std::min(i, j);
    return Cortege::interval(i - k + 1, i, j - k + 1, j);
}

/// Inverse of pressed_map on nonempty pressed corteges: (max I, max J).
inline std::pair<int, int> pressed_preimage(const Cortege& c) {
    if (c.empty() || !c.is_pressed())
        throw NotPressed("cortege " + c.str() + " is not a nonempty pressed double interval");
    return {c.max_row(), c.max_col()};
}

/// The diagonal D(i|j): vertices (i,j), (i-1,j-1), ..., down k = min(i,j)
/// steps; exactly the turn vertices of the unique pressed flow.
inline std::vector<GridVertex> diagonal(int i, int j) {
    const int k = std::min(i, j);
    std::vector<GridVertex> out;
    for (int t = k - 1; t >= 0; --t) out.push_back({i - t, j - t});
    return out;
}

inline nlohmann::json to_json(const GridPath& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : p.vertices) a.push_back({v.row, v.col});
    return a;
}

inline nlohmann::json to_json(const Flow& f) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : f.paths) a.push_back(to_json(p));
    return a;
}

}  // namespace qmin
