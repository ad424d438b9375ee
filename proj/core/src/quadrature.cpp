#include "phtandem/quadrature.hpp"

#include <cmath>
#include <utility>

#include "phtandem/errors.hpp"
#include "phtandem/expm.hpp"

namespace phtandem {
namespace {

constexpr int kMaxDepth = 60;  // halving past this is below double resolution

struct SimpsonState {
    const std::function<Matrix(double)>& f;
    std::size_t budget;       // remaining interval bisections
    bool exhausted = false;   // an interval was force-accepted over tolerance
    double achieved = 0.0;    // accumulated error estimate of accepted intervals
};

Matrix simpson_rule(double a, double b, const Matrix& fa, const Matrix& fm,
                    const Matrix& fb) {
    return ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
}

// Recursive bisection. fa/fm/fb are f at the ends and midpoint of [a, b],
// whole is the Simpson estimate over [a, b].
Matrix adapt(SimpsonState& st, double a, double b, const Matrix& fa,
             const Matrix& fm, const Matrix& fb, const Matrix& whole,
             double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const Matrix flm = st.f(lm);
    const Matrix frm = st.f(rm);
    const Matrix left = simpson_rule(a, m, fa, flm, fm);
    const Matrix right = simpson_rule(m, b, fm, frm, fb);
    const Matrix diff = left + right - whole;
    const double est = diff.max_abs() / 15.0;
    if (est <= tol || st.budget == 0 || depth >= kMaxDepth) {
        if (est > tol) st.exhausted = true;
        st.achieved += est;
        return left + right + (1.0 / 15.0) * diff;  // Richardson extrapolation
    }
    --st.budget;
    const double half_tol = 0.5 * tol;
    return adapt(st, a, m, fa, flm, fm, left, half_tol, depth + 1) +
           adapt(st, m, b, fm, frm, fb, right, half_tol, depth + 1);
}

}  // namespace

Matrix integrate(const std::function<Matrix(double)>& f, double t0, double t1,
                 double abs_tol, std::size_t max_subdivisions) {
    if (!(abs_tol > 0.0))
        throw DomainError("integrate: tolerance must be positive");
    if (!(t1 >= t0))
        throw DomainError("integrate: interval is reversed");
    const Matrix fa = f(t0);
    if (t1 == t0) return Matrix(fa.rows(), fa.cols());
    const Matrix fb = f(t1);
    const Matrix fm = f(0.5 * (t0 + t1));
    const Matrix whole = simpson_rule(t0, t1, fa, fm, fb);
    SimpsonState st{f, max_subdivisions};
    Matrix result = adapt(st, t0, t1, fa, fm, fb, whole, abs_tol, 0);
    result.ensure_finite("integrate");
    if (st.exhausted)
        throw AccuracyError("integrate: subdivision budget exhausted",
                            st.achieved);
    return result;
}

double integrate(const std::function<double(double)>& f, double t0, double t1,
                 double abs_tol, std::size_t max_subdivisions) {
    auto wrapped = [&f](double t) {
        Matrix m(1, 1);
        m(0, 0) = f(t);
        return m;
    };
    return integrate(wrapped, t0, t1, abs_tol, max_subdivisions)(0, 0);
}

double truncation_horizon(const Matrix& a, double tol) {
    if (a.rows() != a.cols())
        throw DimensionError("truncation_horizon: matrix must be square");
    if (!(tol > 0.0))
        throw DomainError("truncation_horizon: tolerance must be positive");

    auto norm_at = [&a](double t) {
        try {
            return expm(t * a).inf_norm();
        } catch (const NumericError&) {
            return HUGE_VAL;  // overflow: certainly not below tol
        }
    };

    constexpr double kCap = 1073741824.0;  // 2^30
    double hi = 1.0;
    while (norm_at(hi) > tol) {
        hi *= 2.0;
        if (hi > kCap)
            throw StabilityError(
                "truncation_horizon: e^{at} does not decay below tolerance");
    }
    double lo = 0.5 * hi;
    if (hi == 1.0) lo = 0.0;  // ||e^{a*0}|| = ||I|| >= 1 > tol
    // Shrink toward the smallest admissible T; hi always satisfies the bound.
    for (int i = 0; i < 80 && hi - lo > 1e-6 * hi + 1e-9; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (norm_at(mid) <= tol)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace phtandem
