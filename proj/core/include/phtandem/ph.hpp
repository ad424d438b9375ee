#ifndef PHTANDEM_PH_HPP
#define PHTANDEM_PH_HPP

#include <cstddef>
#include <string>

#include "phtandem/matrix.hpp"

namespace phtandem {

/// Distribution family of a representation. `ph` demands the structural
/// sign pattern of a phase-type generator; `me` (matrix-exponential) keeps
/// only the analytic requirements, so representations with negative
/// off-diagonal rates or positive row sums remain usable.
enum class DistClass { ph, me };

/// Distribution of the time to absorption: cdf F(x) = 1 - a e^{Ax} u with a
/// possible atom of size 1 - a*u at zero. Immutable after construction;
/// construction checks shapes only — call validate() for the class rules.
class PhRepresentation {
 public:
  /// init is 1 x n, generator is n x n, n >= 1. Throws DimensionError on a
  /// shape mismatch.
  PhRepresentation(Matrix init, Matrix generator, DistClass dist_class = DistClass::ph);

  std::size_t order() const { return init_.cols(); }
  const Matrix& init() const { return init_; }
  const Matrix& generator() const { return generator_; }
  DistClass dist_class() const { return dist_class_; }

  /// Exit rate row vector a' = a * A.
  Matrix exit_vector() const { return init_ * generator_; }

  /// Probability mass at zero, 1 - a*u.
  double atom_at_zero() const { return 1.0 - init_.sum(); }

 private:
  Matrix init_;
  Matrix generator_;
  DistClass dist_class_;
};

/// Outcome of validate(): ok, or the first violated rule spelled out.
struct ValidationReport {
  bool ok = true;
  std::string violation;
};

/// Checks the class rules. For `ph`: entries of a in [0,1] with a*u <= 1,
/// negative diagonal, nonnegative off-diagonal, nonpositive row sums, and a
/// stable (hence nonsingular) generator. For `me`: 0 <= a*u <= 1, stable
/// generator, nonnegative total absorption rate -a A u. Failures are
/// reported, never thrown.
ValidationReport validate(const PhRepresentation& rep);

/// F(t) = 1 - a e^{At} u, clamped to [0,1] (drift beyond 1e-10 outside the
/// unit interval throws NumericError). F(0) = 1 - a*u includes the atom.
/// Negative t throws DomainError.
double cdf(const PhRepresentation& rep, double t);

/// Density split into its continuous part and the atom at zero.
struct DensityValue {
  double continuous_part = 0.0;    // -a A e^{At} u, clamped up to 0
  double point_mass_at_zero = 0.0; // 1 - a*u, meaningful at t = 0
};

/// Density at t >= 0; negative t throws DomainError.
DensityValue density(const PhRepresentation& rep, double t);

/// Expected value -a A^{-1} u.
double mean(const PhRepresentation& rep);

}  // namespace phtandem

#endif
