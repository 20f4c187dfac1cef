#ifndef BISURF_MATRIX_HPP
#define BISURF_MATRIX_HPP

#include <bisurf/rational.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace bisurf {

// Dense matrix over the exact rationals, row major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    void swap_rows(int i, int k) {
        for (int j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
    }

    QMatrix mul(const QMatrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("QMatrix::mul: dimension mismatch");
        QMatrix out(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& x = at(i, k);
                if (is_zero(x)) continue;
                for (int j = 0; j < other.cols_; ++j) {
                    const Rat& y = other.at(k, j);
                    if (!is_zero(y)) out.at(i, j) += x * y;
                }
            }
        return out;
    }

    bool operator==(const QMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

struct RrefResult {
    QMatrix m;
    std::vector<int> pivots;   // pivot column indices, increasing
    int rank = 0;
};

// Reduced row echelon form by exact Gauss-Jordan elimination.  Pivot choice
// is the first nonzero entry in each column, so the result is deterministic.
// GMP keeps every intermediate entry reduced, which bounds coefficient growth
// on the sparse, small-entry matrices this artifact produces.
inline RrefResult rref(QMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int j = 0; j < cols && r < rows; ++j) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m.at(i, j))) { p = i; break; }
        if (p < 0) continue;
        if (p != r) m.swap_rows(p, r);
        if (m.at(r, j) != 1) {
            Rat inv = 1 / Rat(m.at(r, j));
            m.at(r, j) = 1;
            for (int k = j + 1; k < cols; ++k)
                if (!is_zero(m.at(r, k))) m.at(r, k) *= inv;
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rat c = m.at(i, j);
            if (is_zero(c)) continue;
            m.at(i, j) = 0;
            for (int k = j + 1; k < cols; ++k) {
                const Rat& x = m.at(r, k);
                if (!is_zero(x)) m.at(i, k) -= c * x;
            }
        }
        pivots.push_back(j);
        ++r;
    }
    return RrefResult{std::move(m), std::move(pivots), r};
}

inline int rank(const QMatrix& m) { return rref(m).rank; }

// Deterministic basis of the right null space: each free column in
// increasing order contributes one vector with that coordinate set to 1.
inline std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m) {
    const int cols = m.cols();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int j : rr.pivots) is_pivot[j] = true;
    std::vector<std::vector<Rat>> basis;
    for (int j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rat> v(cols);
        v[j] = 1;
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.m.at(int(i), j);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Exact determinant.  Rows are scaled to integers, then eliminated with the
// fraction-free Bareiss recurrence; every division below is exact.
inline Rat det(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
    const int n = m.rows();
    if (n == 0) return rat(1);

    std::vector<mpz_class> z(size_t(n) * n);
    mpz_class row_scale_product = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            mpz_class q = l / m.at(i, j).get_den();
            z[size_t(i) * n + j] = m.at(i, j).get_num() * q;
        }
        row_scale_product *= l;
    }

    auto zat = [&](int i, int j) -> mpz_class& { return z[size_t(i) * n + j]; };
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (zat(i, k) != 0) { p = i; break; }
        if (p < 0) return rat(0);
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(zat(p, j), zat(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = zat(i, j) * zat(k, k) - zat(i, k) * zat(k, j);
                mpz_divexact(zat(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            zat(i, k) = 0;
        }
        prev = zat(k, k);
    }
    return rat(sign * zat(n - 1, n - 1), row_scale_product);
}

} // namespace bisurf

#endif
