#pragma once

#include <optional>
#include <vector>

#include "gaudin/scalar.hpp"

namespace gaudin {

using Matrix = std::vector<std::vector<Scalar>>;
using Vector = std::vector<Scalar>;

Matrix matrix_zero(std::size_t rows, std::size_t cols);
Matrix matrix_identity(std::size_t n);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matadd(const Matrix& a, const Matrix& b);
Matrix matsub(const Matrix& a, const Matrix& b);
Matrix matscale(const Matrix& a, const Scalar& s);
Vector matvec(const Matrix& a, const Vector& v);
bool matrix_is_zero(const Matrix& a);
double matrix_max_abs(const Matrix& a);

// Exact inverse over rationals; nullopt when singular (or any entry numeric).
std::optional<Matrix> invert_exact(const Matrix& a);

// Gaussian elimination with partial pivoting (|.| pivots for the numeric
// track, exact nonzero tests for rationals). Solves A x = b for a square A;
// nullopt when singular.
std::optional<Vector> solve_linear(Matrix a, Vector b);

struct LinearSystemSolution {
    bool consistent = false;
    Vector solution;       // one particular solution when consistent
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
};

// Solves a possibly rectangular exact system A x = b over rationals.
LinearSystemSolution solve_exact_system(Matrix a, Vector b);

std::size_t kernel_dimension_exact(Matrix a);

}  // namespace gaudin
