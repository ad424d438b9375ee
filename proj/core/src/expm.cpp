#include "phtandem/expm.hpp"

#include <cmath>

#include "phtandem/errors.hpp"
#include "phtandem/lu.hpp"

namespace phtandem {

namespace {

// Degree-13 diagonal Pade coefficients for e^x.
constexpr double kPade13[] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

}  // namespace

Matrix expm(const Matrix& a) {
  if (!a.square()) {
    throw DimensionError("expm: matrix must be square");
  }
  const std::size_t n = a.rows();
  const Matrix eye = Matrix::identity(n);

  // Scale so ||a / 2^s||_inf <= 0.5; the Pade remainder is then far below
  // the 1e-12 relative accuracy target.
  const double norm = a.inf_norm();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  const Matrix scaled = a * std::ldexp(1.0, -squarings);

  const Matrix a2 = scaled * scaled;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a2 * a4;

  const Matrix u =
      scaled * (a6 * (a6 * kPade13[13] + a4 * kPade13[11] + a2 * kPade13[9]) +
                a6 * kPade13[7] + a4 * kPade13[5] + a2 * kPade13[3] +
                eye * kPade13[1]);
  const Matrix v =
      a6 * (a6 * kPade13[12] + a4 * kPade13[10] + a2 * kPade13[8]) +
      a6 * kPade13[6] + a4 * kPade13[4] + a2 * kPade13[2] + eye * kPade13[0];

  Matrix result = lu_solve(v - u, v + u);
  for (int s = 0; s < squarings; ++s) {
    result = result * result;
  }
  result.ensure_finite("expm");
  return result;
}

}  // namespace phtandem
