#ifndef PHTANDEM_TESTS_WORKED_EXAMPLE_HPP
#define PHTANDEM_TESTS_WORKED_EXAMPLE_HPP

// The worked three-server example and its published 4-decimal results,
// shared by the solver tests and the acceptance gate. The middle block is
// matrix-exponential: its printed generator's third row sums to +0.4897,
// which fails the phase-type sign rules.

#include "phtandem/matrix.hpp"
#include "phtandem/ph.hpp"
#include "phtandem/tandem.hpp"

namespace testsupport {

inline phtandem::TandemInputs worked_example() {
    using phtandem::DistClass;
    using phtandem::Matrix;
    using phtandem::PhRepresentation;
    PhRepresentation s1(Matrix{{0.5, 0.3}},
                        Matrix{{-1.0330, 0.3099}, {0.3984, -1.3281}},
                        DistClass::ph);
    PhRepresentation s2(Matrix{{0.5, 0.3, 0.2}},
                        Matrix{{-1.6321, 0.8161, 0.8161},
                               {0.0, -3.2643, 0.0},
                               {2.9379, 2.4482, -4.8964}},
                        DistClass::me);
    PhRepresentation s3(Matrix{{1.0, 0.0, 0.0, 0.0}},
                        Matrix{{-4.0, 4.0, 0.0, 0.0},
                               {0.0, -4.0, 4.0, 0.0},
                               {0.0, 0.0, -4.0, 4.0},
                               {0.0, 0.0, 0.0, -4.0}},
                        DistClass::ph);
    return {std::move(s1), std::move(s2), std::move(s3)};
}

// Published values, 4 decimal places; compare with tolerance 5e-3.
inline const phtandem::Matrix kWorkedB{{0.8449, -0.1325, -0.1127, -0.0956},
                                       {0.8139, -0.1496, -0.1207, -0.0978}};
inline const phtandem::Matrix kWorkedC{{-0.0853, -0.0514},
                                       {-0.0598, -0.0361},
                                       {-0.0351, -0.0212},
                                       {-0.0137, -0.0083}};
inline const phtandem::Matrix kWorkedGRow1{{0.8862, 0.0190, 0.0158, 0.0132}};
inline const phtandem::Matrix kWorkedGVec{{0.6315, 0.0614, 0.0512, 0.0426}};
inline const phtandem::Matrix kWorkedR3{{0.7196, 0.0467, 0.0389, 0.0324}};
inline const phtandem::Matrix kWorkedD2{{0.2111, 0.1253}};

// Frozen full-precision solution for regression (independently recomputed
// by the quadrature oracle in the tests).
inline const phtandem::Matrix kWorkedR3Full{{0.719620, 0.046725, 0.038936, 0.032446}};
inline const phtandem::Matrix kWorkedD2Full{{0.211122, 0.125332}};

}  // namespace testsupport

#endif
