#include "phtandem/stability.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstddef>

#include "phtandem/errors.hpp"
#include "phtandem/lu.hpp"

namespace phtandem {
namespace {

// In-place Householder reduction to upper Hessenberg form. Only eigenvalues
// are wanted downstream, so the orthogonal factor is not accumulated.
void hessenberg_reduce(Matrix& h) {
    const std::size_t n = h.rows();
    if (n < 3) return;
    std::vector<double> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double norm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = h(i, k);
            norm2 += v[i] * v[i];
        }
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) continue;
        const double alpha = (v[k + 1] >= 0.0) ? -norm : norm;
        v[k + 1] -= alpha;
        double vtv = norm2 - 2.0 * alpha * h(k + 1, k) + alpha * alpha;
        // vtv = 2*norm*(norm + |h(k+1,k)|) analytically; guard the degenerate
        // case where the column is already in reduced form.
        if (vtv <= 0.0) continue;
        const double scale = 2.0 / vtv;
        // Rows k+1..n-1 from the left: H <- P H.
        for (std::size_t j = k; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) s += v[i] * h(i, j);
            s *= scale;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= v[i] * s;
        }
        // Columns k+1..n-1 from the right: H <- H P.
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
            s *= scale;
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= v[j] * s;
        }
        h(k + 1, k) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

// Eigenvalues of the trailing 2x2 block [[a,b],[c,d]].
void eig2x2(double a, double b, double c, double d,
            std::complex<double>& first, std::complex<double>& second) {
    const double half_tr = 0.5 * (a + d);
    const double p = 0.5 * (a - d);
    const double disc = p * p + b * c;
    if (disc >= 0.0) {
        const double w = std::sqrt(disc);
        // Take the larger-magnitude root first to avoid cancellation.
        const double l1 = half_tr + std::copysign(w, half_tr);
        const double det = a * d - b * c;
        const double l2 = (l1 != 0.0) ? det / l1 : half_tr - std::copysign(w, half_tr);
        first = l1;
        second = l2;
    } else {
        const double w = std::sqrt(-disc);
        first = {half_tr, w};
        second = {half_tr, -w};
    }
}

// Apply the 3-element Householder reflector for (x,y,z) to rows k..k+2 of
// the columns [col_lo, col_hi] and to columns k..k+2 of the rows
// [row_lo, row_hi]. A zero input vector leaves the matrix unchanged.
void bulge_reflect(Matrix& h, std::size_t k, double x, double y, double z,
                   std::size_t col_lo, std::size_t col_hi,
                   std::size_t row_lo, std::size_t row_hi) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (norm == 0.0) return;
    const double alpha = (x >= 0.0) ? -norm : norm;
    double v0 = x - alpha;
    const double vtv = v0 * v0 + y * y + z * z;
    if (vtv == 0.0) return;
    const double scale = 2.0 / vtv;
    for (std::size_t j = col_lo; j <= col_hi; ++j) {
        double s = (v0 * h(k, j) + y * h(k + 1, j) + z * h(k + 2, j)) * scale;
        h(k, j) -= v0 * s;
        h(k + 1, j) -= y * s;
        h(k + 2, j) -= z * s;
    }
    for (std::size_t i = row_lo; i <= row_hi; ++i) {
        double s = (h(i, k) * v0 + h(i, k + 1) * y + h(i, k + 2) * z) * scale;
        h(i, k) -= v0 * s;
        h(i, k + 1) -= y * s;
        h(i, k + 2) -= z * s;
    }
}

// Same for the final 2-element reflector of a sweep.
void bulge_reflect2(Matrix& h, std::size_t k, double x, double y,
                    std::size_t col_lo, std::size_t col_hi,
                    std::size_t row_lo, std::size_t row_hi) {
    const double norm = std::sqrt(x * x + y * y);
    if (norm == 0.0) return;
    const double alpha = (x >= 0.0) ? -norm : norm;
    double v0 = x - alpha;
    const double vtv = v0 * v0 + y * y;
    if (vtv == 0.0) return;
    const double scale = 2.0 / vtv;
    for (std::size_t j = col_lo; j <= col_hi; ++j) {
        double s = (v0 * h(k, j) + y * h(k + 1, j)) * scale;
        h(k, j) -= v0 * s;
        h(k + 1, j) -= y * s;
    }
    for (std::size_t i = row_lo; i <= row_hi; ++i) {
        double s = (h(i, k) * v0 + h(i, k + 1) * y) * scale;
        h(i, k) -= v0 * s;
        h(i, k + 1) -= y * s;
    }
}

// One implicit double-shift sweep on the irreducible block h[lo..hi].
// shift_sum and shift_prod are the sum and product of the two shifts.
void francis_sweep(Matrix& h, std::size_t lo, std::size_t hi,
                   double shift_sum, double shift_prod) {
    // First column of (H - s1)(H - s2) restricted to the block.
    double x = h(lo, lo) * h(lo, lo) + h(lo, lo + 1) * h(lo + 1, lo) -
               shift_sum * h(lo, lo) + shift_prod;
    double y = h(lo + 1, lo) * (h(lo, lo) + h(lo + 1, lo + 1) - shift_sum);
    double z = h(lo + 1, lo) * h(lo + 2, lo + 1);
    for (std::size_t k = lo; k + 2 <= hi; ++k) {
        if (k > lo) {  // bulge sits in column k-1
            x = h(k, k - 1);
            y = h(k + 1, k - 1);
            z = h(k + 2, k - 1);
        }
        const std::size_t col_lo = (k > lo) ? k - 1 : lo;
        const std::size_t row_hi = std::min(k + 3, hi);
        bulge_reflect(h, k, x, y, z, col_lo, hi, lo, row_hi);
    }
    bulge_reflect2(h, hi - 1, h(hi - 1, hi - 2), h(hi, hi - 2),
                   hi - 2, hi, lo, hi);
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const Matrix& a) {
    if (a.rows() != a.cols())
        throw DimensionError("eigenvalues: matrix must be square");
    const std::size_t n = a.rows();
    std::vector<std::complex<double>> eig(n);
    if (n == 0) return eig;
    if (n == 1) {
        eig[0] = a(0, 0);
        return eig;
    }

    Matrix h = a;
    hessenberg_reduce(h);

    double anorm = h.inf_norm();
    if (anorm == 0.0) anorm = 1.0;

    const std::size_t max_sweeps = 100 * n;
    std::size_t sweeps = 0;
    std::size_t stagnation = 0;
    std::size_t hi = n - 1;

    while (true) {
        // Split off negligible subdiagonal entries above the active block.
        std::size_t lo = hi;
        while (lo > 0) {
            double s = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
            if (s == 0.0) s = anorm;
            if (std::abs(h(lo, lo - 1)) <= DBL_EPSILON * s) {
                h(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }

        if (lo == hi) {
            eig[hi] = h(hi, hi);
            if (hi == 0) break;
            --hi;
            stagnation = 0;
            continue;
        }
        if (lo + 1 == hi) {
            eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi),
                   eig[lo], eig[hi]);
            if (lo == 0) break;
            hi = lo - 1;
            stagnation = 0;
            continue;
        }

        if (++sweeps > max_sweeps)
            throw NumericError("eigenvalues: QR iteration did not converge");

        double shift_sum = h(hi - 1, hi - 1) + h(hi, hi);
        double shift_prod = h(hi - 1, hi - 1) * h(hi, hi) -
                            h(hi - 1, hi) * h(hi, hi - 1);
        if (++stagnation % 16 == 0) {
            // Ad hoc shifts to break symmetric stalls.
            const double s = std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2));
            shift_sum = 1.5 * s;
            shift_prod = s * s;
        }
        francis_sweep(h, lo, hi, shift_sum, shift_prod);
    }
    return eig;
}

double spectral_abscissa(const Matrix& a) {
    double worst = -HUGE_VAL;
    for (const auto& lambda : eigenvalues(a)) worst = std::max(worst, lambda.real());
    return worst;
}

bool is_stable(const Matrix& a, double margin) {
    if (a.rows() != a.cols())
        throw DimensionError("is_stable: matrix must be square");
    if (a.rows() == 0) return true;
    return spectral_abscissa(a) < -margin;
}

Matrix stable_integral(const Matrix& a) {
    if (!is_stable(a))
        throw StabilityError("stable_integral: matrix exponential does not decay");
    try {
        return -inverse(a);
    } catch (const SingularMatrixError&) {
        throw StabilityError("stable_integral: matrix is numerically singular");
    }
}

}  // namespace phtandem
