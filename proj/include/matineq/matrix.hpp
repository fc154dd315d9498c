// matrix.hpp — dense real matrices.
//
// Two carriers: Matrix (general dense, used for eigenvector bases and
// intermediate products) and SymMatrix (exactly symmetric storage; the
// type every public operation works on).  Dimensions stay small (<= 64),
// so everything is plain row-major arithmetic.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace matineq {

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("Matrix: dimensions must be >= 1");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix multiply: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

// Dense real symmetric matrix.  Entries are mirrored exactly:
// (i,j) and (j,i) always hold the same double.
class SymMatrix {
public:
    SymMatrix() = default;

    explicit SymMatrix(int dim) : dim_(dim), m_(dim, dim) {
        if (dim < 1) throw std::invalid_argument("SymMatrix: dim must be >= 1");
    }

    // Symmetrises raw rows via (M + M^T)/2 and validates finiteness.
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        int n = static_cast<int>(rows.size());
        if (n < 1) throw std::invalid_argument("SymMatrix: dim must be >= 1");
        SymMatrix s(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw std::invalid_argument("SymMatrix: rows must form a square matrix");
            for (int j = 0; j < n; ++j)
                if (!std::isfinite(rows[i][j]))
                    throw std::invalid_argument("SymMatrix: entries must be finite");
        }
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double v = 0.5 * (rows[i][j] + rows[j][i]);
                s.m_(i, j) = v;
                s.m_(j, i) = v;
            }
        return s;
    }

    static SymMatrix from_dense(const Matrix& m) {
        if (m.rows() != m.cols()) throw std::invalid_argument("SymMatrix: matrix not square");
        SymMatrix s(m.rows());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = i; j < m.rows(); ++j) {
                double v = 0.5 * (m(i, j) + m(j, i));
                if (!std::isfinite(v)) throw std::invalid_argument("SymMatrix: entries must be finite");
                s.m_(i, j) = v;
                s.m_(j, i) = v;
            }
        return s;
    }

    static SymMatrix diagonal(const std::vector<double>& d) {
        SymMatrix s(static_cast<int>(d.size()));
        for (int i = 0; i < s.dim_; ++i) {
            if (!std::isfinite(d[i])) throw std::invalid_argument("SymMatrix: entries must be finite");
            s.m_(i, i) = d[i];
        }
        return s;
    }

    static SymMatrix identity(int dim) {
        SymMatrix s(dim);
        for (int i = 0; i < dim; ++i) s.m_(i, i) = 1.0;
        return s;
    }

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return m_(i, j); }

    // sets both (i,j) and (j,i)
    void set(int i, int j, double v) {
        if (!std::isfinite(v)) throw std::invalid_argument("SymMatrix::set: value must be finite");
        m_(i, j) = v;
        m_(j, i) = v;
    }

    const Matrix& dense() const { return m_; }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < dim_; ++i) t += m_(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) m = std::max(m, std::abs(m_(i, j)));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) s += m_(i, j) * m_(i, j);
        return std::sqrt(s);
    }

private:
    int dim_ = 0;
    Matrix m_;

    friend SymMatrix operator+(const SymMatrix&, const SymMatrix&);
    friend SymMatrix operator-(const SymMatrix&, const SymMatrix&);
    friend SymMatrix operator*(double, const SymMatrix&);
    friend SymMatrix operator-(const SymMatrix&);
};

inline void check_same_dim(const SymMatrix& a, const SymMatrix& b, const char* what) {
    if (a.dim() != b.dim()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

inline SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    check_same_dim(a, b, "SymMatrix add");
    SymMatrix c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) c.m_(i, j) = a.m_(i, j) + b.m_(i, j);
    return c;
}

inline SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    check_same_dim(a, b, "SymMatrix subtract");
    SymMatrix c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) c.m_(i, j) = a.m_(i, j) - b.m_(i, j);
    return c;
}

inline SymMatrix operator*(double s, const SymMatrix& a) {
    SymMatrix c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) c.m_(i, j) = s * a.m_(i, j);
    return c;
}

inline SymMatrix operator-(const SymMatrix& a) { return -1.0 * a; }

}  // namespace matineq
