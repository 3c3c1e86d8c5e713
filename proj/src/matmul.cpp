#include "steallab/matmul.hpp"

#include <cblas.h>

extern "C" void openblas_set_num_threads(int);

namespace steallab {

namespace {
// One BLAS thread keeps every run bit-reproducible and avoids oversubscription
// when attack sessions run in parallel worker slots.
struct BlasInit {
    BlasInit() { openblas_set_num_threads(1); }
};
}  // namespace

void matmul(bool trans_a, bool trans_b, std::size_t m, std::size_t n, std::size_t k,
            double alpha, const double* a, const double* b, double beta, double* c) {
    static BlasInit init;
    const auto ta = trans_a ? CblasTrans : CblasNoTrans;
    const auto tb = trans_b ? CblasTrans : CblasNoTrans;
    const int lda = static_cast<int>(trans_a ? m : k);
    const int ldb = static_cast<int>(trans_b ? k : n);
    cblas_dgemm(CblasRowMajor, ta, tb, static_cast<int>(m), static_cast<int>(n),
                static_cast<int>(k), alpha, a, lda, b, ldb, beta, c, static_cast<int>(n));
}

}  // namespace steallab
