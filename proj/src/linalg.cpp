#include "gaudin/linalg.hpp"

#include <stdexcept>

namespace gaudin {

Matrix matrix_zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, Vector(cols, Scalar(0)));
}

Matrix matrix_identity(std::size_t n) {
    Matrix m = matrix_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    Matrix r = matrix_zero(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (b[t][j].is_zero()) continue;
                r[i][j] += a[i][t] * b[t][j];
            }
        }
    return r;
}

Matrix matadd(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

Matrix matsub(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

Matrix matscale(const Matrix& a, const Scalar& s) {
    Matrix r = a;
    for (auto& row : r)
        for (auto& v : row) v *= s;
    return r;
}

Vector matvec(const Matrix& a, const Vector& v) {
    Vector r(a.size(), Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (a[i][j].is_zero() || v[j].is_zero()) continue;
            r[i] += a[i][j] * v[j];
        }
    return r;
}

bool matrix_is_zero(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

double matrix_max_abs(const Matrix& a) {
    double m = 0.0;
    for (const auto& row : a)
        for (const auto& v : row) m = std::max(m, v.abs_double());
    return m;
}

std::optional<Matrix> invert_exact(const Matrix& a) {
    std::size_t n = a.size();
    for (const auto& row : a)
        for (const auto& v : row)
            if (!v.is_exact()) return std::nullopt;
    Matrix work = a;
    Matrix inv = matrix_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        Scalar p = work[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            work[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || work[i][col].is_zero()) continue;
            Scalar f = work[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                work[i][j] -= f * work[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::optional<Vector> solve_linear(Matrix a, Vector b) {
    std::size_t n = a.size();
    if (n == 0) return Vector{};
    bool exact = true;
    for (const auto& row : a)
        for (const auto& v : row) exact = exact && v.is_exact();
    for (const auto& v : b) exact = exact && v.is_exact();

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        if (exact) {
            while (pivot < n && a[pivot][col].is_zero()) ++pivot;
            if (pivot == n) return std::nullopt;
        } else {
            double best = a[col][col].abs_double();
            for (std::size_t i = col + 1; i < n; ++i)
                if (a[i][col].abs_double() > best) {
                    best = a[i][col].abs_double();
                    pivot = i;
                }
            if (best == 0.0) return std::nullopt;
        }
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            Scalar f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    Vector x(n, Scalar(0));
    for (std::size_t i = n; i-- > 0;) {
        Scalar acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

LinearSystemSolution solve_exact_system(Matrix a, Vector b) {
    LinearSystemSolution out;
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<long> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);
        Scalar p = a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] /= p;
        b[row] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Scalar f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col_of_row.push_back(static_cast<long>(col));
        ++row;
    }
    out.rank = row;
    out.kernel_dim = cols - row;
    for (std::size_t i = row; i < rows; ++i)
        if (!b[i].is_zero()) return out;  // inconsistent
    out.consistent = true;
    out.solution = Vector(cols, Scalar(0));
    for (std::size_t i = 0; i < row; ++i)
        out.solution[pivot_col_of_row[i]] = b[i];
    return out;
}

std::size_t kernel_dimension_exact(Matrix a) {
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    Vector zero(rows, Scalar(0));
    auto sol = solve_exact_system(std::move(a), std::move(zero));
    return cols == 0 ? 0 : sol.kernel_dim;
}

}  // namespace gaudin
