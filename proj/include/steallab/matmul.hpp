#pragma once

#include <cstddef>

namespace steallab {

// C = alpha * op(A) * op(B) + beta * C, row-major.
// A is m x k (k x m when transposed), B is k x n (n x k when transposed).
void matmul(bool trans_a, bool trans_b, std::size_t m, std::size_t n, std::size_t k,
            double alpha, const double* a, const double* b, double beta, double* c);

}  // namespace steallab
