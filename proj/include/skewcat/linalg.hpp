#pragma once

// Exact rational linear algebra: canonical reduced row echelon forms,
// kernels and subspace arithmetic. Everything here is deterministic;
// pivots are chosen as the first nonzero entry in row order so that
// canonical forms are reproducible across runs.

#include <skewcat/rational.hpp>

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace skewcat {

using Vec = std::vector<Rational>;

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

struct Matrix {
    int cols = 0;
    std::vector<Vec> rows;

    Matrix() = default;
    explicit Matrix(int c) : cols(c) {}
    Matrix(int r, int c) : cols(c), rows(r, Vec(c, Rational(0))) {}

    int nrows() const { return static_cast<int>(rows.size()); }
    void add_row(Vec v) {
        assert(static_cast<int>(v.size()) == cols);
        rows.push_back(std::move(v));
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.rows[i][i] = 1;
        return m;
    }

    Matrix transposed() const {
        Matrix t(cols, nrows());
        for (int i = 0; i < nrows(); ++i)
            for (int j = 0; j < cols; ++j) t.rows[j][i] = rows[i][j];
        return t;
    }
};

/// A subspace of Q^cols given by its canonical RREF basis. Two subspaces
/// are equal iff their matrices are identical.
struct Subspace {
    int cols = 0;
    std::vector<Vec> rows;  // reduced echelon, leading ones, sorted by pivot

    int dim() const { return static_cast<int>(rows.size()); }

    bool operator==(const Subspace& o) const { return cols == o.cols && rows == o.rows; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
};

/// Incremental row-space accumulator. Rows are kept internally as
/// primitive integer vectors in (non-reduced) echelon form with distinct
/// pivot columns and positive leading entries; elimination is
/// fraction-free cross-multiplication followed by a content division, so
/// no per-operation rational normalization is paid. to_subspace()
/// back-eliminates and normalizes once, yielding the canonical RREF.
class RowSpace {
public:
    using IVec = std::vector<BigInt>;

    explicit RowSpace(int cols) : cols_(cols), pivot_of_col_(cols, -1) {}

    int cols() const { return cols_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    /// Reduces v against the current basis in place; afterwards v has no
    /// support on pivot columns.
    void reduce(Vec& v) const {
        for (int c = 0; c < cols_; ++c) {
            if (v[c] == 0) continue;
            const int r = pivot_of_col_[c];
            if (r < 0) continue;
            const IVec& p = rows_[r];
            const Rational f = v[c] / Rational(p[c]);
            for (int j = c; j < cols_; ++j)
                if (p[j] != 0) v[j] -= f * Rational(p[j]);
        }
    }

    /// Inserts v if independent of the current basis. Returns true when
    /// the dimension grew.
    bool insert(Vec v) {
        IVec w = to_integer(std::move(v));
        const int lead = eliminate(w);
        if (lead >= cols_) return false;
        if (w[lead] < 0)
            for (auto& x : w) x = -x;
        divide_content(w);
        pivot_of_col_[lead] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(w));
        return true;
    }

    bool contains(Vec v) const {
        IVec w = to_integer(std::move(v));
        return eliminate(w) >= cols_;
    }

    Subspace to_subspace() const {
        std::vector<int> order;
        for (int c = 0; c < cols_; ++c)
            if (pivot_of_col_[c] >= 0) order.push_back(pivot_of_col_[c]);
        Subspace s;
        s.cols = cols_;
        for (int idx : order) {
            Vec r(cols_);
            for (int j = 0; j < cols_; ++j) r[j] = Rational(rows_[idx][j]);
            s.rows.push_back(std::move(r));
        }
        // back-eliminate later pivot columns and normalize, last row first
        for (int i = static_cast<int>(s.rows.size()) - 1; i >= 0; --i) {
            Vec& r = s.rows[i];
            for (size_t j = i + 1; j < s.rows.size(); ++j) {
                const int c = lead_col(s.rows[j]);
                if (r[c] == 0) continue;
                const Rational f = r[c];
                for (int k = c; k < cols_; ++k)
                    if (s.rows[j][k] != 0) r[k] -= f * s.rows[j][k];
            }
            const Rational inv = Rational(1) / r[lead_col(r)];
            for (auto& x : r)
                if (x != 0) x *= inv;
        }
        return s;
    }

private:
    IVec to_integer(Vec v) const {
        BigInt l = 1;
        for (const auto& x : v)
            if (x != 0) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
        IVec w(cols_);
        for (int j = 0; j < cols_; ++j)
            if (v[j] != 0) w[j] = boost::multiprecision::numerator(Rational(v[j] * l));
        return w;
    }

    static void divide_content(IVec& w) {
        BigInt g = 0;
        for (const auto& x : w) {
            if (x != 0) g = boost::multiprecision::gcd(g, x);
            if (g == 1) return;
        }
        if (g > 1)
            for (auto& x : w) x /= g;
    }

    /// Fraction-free forward elimination; returns the lead column of the
    /// remainder (cols_ when it vanished).
    int eliminate(IVec& w) const {
        for (int c = 0; c < cols_; ++c) {
            if (w[c] == 0) continue;
            const int r = pivot_of_col_[c];
            if (r < 0) return c;
            const IVec& p = rows_[r];
            const BigInt f = w[c], q = p[c];
            w[c] = 0;
            for (int j = c + 1; j < cols_; ++j) {
                if (p[j] != 0)
                    w[j] = w[j] * q - f * p[j];
                else if (w[j] != 0)
                    w[j] *= q;
            }
            divide_content(w);
        }
        return cols_;
    }

    int lead_col(const Vec& v) const {
        for (int c = 0; c < cols_; ++c)
            if (v[c] != 0) return c;
        return cols_;
    }

    int cols_;
    std::vector<IVec> rows_;
    std::vector<int> pivot_of_col_;
};

namespace detail {

/// Scales a row by the lcm of its denominators and divides out the content,
/// giving a primitive integer row. Keeps fraction-free elimination exact.
inline void make_primitive(Vec& row) {
    BigInt l = 1;
    for (const auto& x : row)
        if (x != 0) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    BigInt g = 0;
    Vec scaled(row.size());
    for (size_t j = 0; j < row.size(); ++j) {
        Rational v = row[j] * l;
        scaled[j] = v;
        if (v != 0) g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(v));
    }
    if (g == 0) { row = scaled; return; }
    for (size_t j = 0; j < row.size(); ++j) scaled[j] /= Rational(g);
    row = std::move(scaled);
}

}  // namespace detail

/// Canonical RREF of the row space. Forward phase is fraction-free
/// Bareiss elimination on primitive integer rows (controls coefficient
/// growth); the final normalization restores rational leading ones.
inline std::pair<Subspace, int> rref(const Matrix& m) {
    std::vector<Vec> rows = m.rows;
    for (auto& r : rows) detail::make_primitive(r);
    const int nr = static_cast<int>(rows.size());
    const int nc = m.cols;

    std::vector<int> pivot_col;
    Rational prev(1);
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int pr = -1;
        for (int i = r; i < nr; ++i)
            if (rows[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(rows[r], rows[pr]);
        const Rational piv = rows[r][c];
        for (int i = r + 1; i < nr; ++i) {
            const Rational mult = rows[i][c];
            for (int j = c; j < nc; ++j)
                rows[i][j] = (piv * rows[i][j] - mult * rows[r][j]) / prev;
        }
        prev = piv;
        pivot_col.push_back(c);
        ++r;
    }
    const int rank = r;

    // normalize leading entries and back-eliminate
    for (int i = 0; i < rank; ++i) {
        const int c = pivot_col[i];
        Rational inv = Rational(1) / rows[i][c];
        for (int j = c; j < nc; ++j)
            if (rows[i][j] != 0) rows[i][j] *= inv;
    }
    for (int i = rank - 1; i >= 0; --i) {
        const int c = pivot_col[i];
        for (int k = 0; k < i; ++k) {
            if (rows[k][c] == 0) continue;
            Rational f = rows[k][c];
            for (int j = c; j < nc; ++j)
                if (rows[i][j] != 0) rows[k][j] -= f * rows[i][j];
        }
    }

    Subspace s;
    s.cols = nc;
    s.rows.assign(rows.begin(), rows.begin() + rank);
    return {std::move(s), rank};
}

/// Canonical basis of the right null space: M v = 0.
inline Subspace kernel(const Matrix& m) {
    auto [ech, rank] = rref(m);
    const int nc = m.cols;
    std::vector<int> pivot_col(rank);
    std::vector<bool> is_pivot(nc, false);
    for (int i = 0; i < rank; ++i) {
        int c = 0;
        while (ech.rows[i][c] == 0) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    RowSpace ker(nc);
    for (int f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        Vec v(nc, Rational(0));
        v[f] = 1;
        for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -ech.rows[i][f];
        ker.insert(std::move(v));
    }
    return ker.to_subspace();
}

inline Matrix as_matrix(const Subspace& s) {
    Matrix m(s.cols);
    m.rows = s.rows;
    return m;
}

inline bool subspace_contains(const Subspace& s, Vec v) {
    for (const auto& row : s.rows) {
        int c = 0;
        while (row[c] == 0) ++c;
        if (v[c] == 0) continue;
        Rational f = v[c];
        for (int j = c; j < s.cols; ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
    return is_zero(v);
}

inline Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.cols != v.cols) throw Error("DimensionMismatch", "subspace_sum: ambient dimensions differ");
    RowSpace acc(u.cols);
    for (const auto& r : u.rows) acc.insert(r);
    for (const auto& r : v.rows) acc.insert(r);
    return acc.to_subspace();
}

/// Intersection via the annihilator: x lies in U iff it is orthogonal to
/// ker(U), so U cap V is the kernel of the stacked constraint system.
inline Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
    if (u.cols != v.cols)
        throw Error("DimensionMismatch", "subspace_intersection: ambient dimensions differ");
    Subspace au = kernel(as_matrix(u));
    Subspace av = kernel(as_matrix(v));
    Matrix stacked(u.cols);
    for (const auto& r : au.rows) stacked.add_row(r);
    for (const auto& r : av.rows) stacked.add_row(r);
    return kernel(stacked);
}

/// Intersection of U with the coordinate subspace spanned by the kept
/// coordinates. Re-echelonize U with the dropped coordinates ordered
/// first: in reduced echelon form a row with its pivot in the kept block
/// is supported entirely in the kept block, and those rows span exactly
/// the vectors of U vanishing on every dropped coordinate.
inline Subspace subspace_intersect_coords(const Subspace& u, const std::vector<bool>& keep) {
    assert(static_cast<int>(keep.size()) == u.cols);
    const int n = u.cols;
    std::vector<int> perm;
    perm.reserve(n);
    for (int c = 0; c < n; ++c)
        if (!keep[c]) perm.push_back(c);
    const int ndrop = static_cast<int>(perm.size());
    for (int c = 0; c < n; ++c)
        if (keep[c]) perm.push_back(c);
    RowSpace rs(n);
    for (const auto& r : u.rows) {
        Vec v(n);
        for (int c = 0; c < n; ++c) v[c] = r[perm[c]];
        rs.insert(std::move(v));
    }
    RowSpace out(n);
    for (const auto& row : rs.to_subspace().rows) {
        if (std::any_of(row.begin(), row.begin() + ndrop,
                        [](const Rational& x) { return x != 0; }))
            continue;
        Vec v(n, Rational(0));
        for (int c = ndrop; c < n; ++c) v[perm[c]] = row[c];
        out.insert(std::move(v));
    }
    return out.to_subspace();
}

/// Sparse echelon accumulator used for very wide 0/1 systems (the
/// regular-bimodule rank oracle). Rows are kept in echelon form only;
/// rank is all that is ever read off.
class SparseRank {
public:
    using Row = std::vector<std::pair<int64_t, Rational>>;  // sorted by index

    int rank() const { return static_cast<int>(rows_.size()); }

    void insert(Row v) {
        while (!v.empty()) {
            const int64_t lead = v.front().first;
            auto it = pivot_.find(lead);
            if (it == pivot_.end()) {
                const Rational inv = Rational(1) / v.front().second;
                if (inv != 1)
                    for (auto& [i, x] : v) x *= inv;
                pivot_[lead] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(v));
                return;
            }
            v = axpy(v, rows_[it->second], -v.front().second);
        }
    }

private:
    static Row axpy(const Row& a, const Row& b, const Rational& f) {
        Row out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                Rational x = f * b[j].second;
                if (x != 0) out.emplace_back(b[j].first, std::move(x));
                ++j;
            } else {
                Rational x = a[i].second + f * b[j].second;
                if (x != 0) out.emplace_back(a[i].first, std::move(x));
                ++i, ++j;
            }
        }
        return out;
    }

    std::vector<Row> rows_;
    std::unordered_map<int64_t, int> pivot_;
};

}  // namespace skewcat
