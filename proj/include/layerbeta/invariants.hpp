#pragma once

#include "layerbeta/surface_jets.hpp"

namespace layerbeta {

// Frame-independent combinations of the graph coefficients: the trace of the
// second fundamental form (H0), its square norm (H1), and the eight
// weight-four monomials built from derivatives of the second fundamental
// form that the surface residue formulas consume. Each polynomial below was
// validated symbolically against the covariant-derivative definitions
// (II contracted with itself and with its first and second derivatives)
// before being frozen here; they are exact, not fitted.
//
// All weight-four fields are even under b,c,d -> -b,-c,-d, so residues do not
// depend on the normal orientation; H0 itself is reported in the graph
// convention (positive on spheres).
struct InvariantMonomials {
    double H0 = 0;     // weight 1
    double H1 = 0;     // weight 2
    double H0_pow4 = 0; // weight 4 monomials:
    double H1_sq = 0;
    double H0sq_H1 = 0;
    double H2 = 0;
    double H0H3 = 0;
    double H4 = 0;
    double H5 = 0;
    double H6 = 0;
};

inline InvariantMonomials invariant_monomials(const SurfaceJet& jet) {
    double b1 = jet.b[0], b2 = jet.b[1], b3 = jet.b[2];
    double c1 = jet.c[0], c2 = jet.c[1], c3 = jet.c[2], c4 = jet.c[3];
    double d1 = jet.d[0], d2 = jet.d[1], d3 = jet.d[2], d4 = jet.d[3],
           d5 = jet.d[4];

    InvariantMonomials m;
    m.H0 = 2.0 * (b1 + b3);
    m.H1 = 4.0 * b1 * b1 + 2.0 * b2 * b2 + 4.0 * b3 * b3;
    double h0sq = m.H0 * m.H0;
    m.H0_pow4 = h0sq * h0sq;
    m.H1_sq = m.H1 * m.H1;
    m.H0sq_H1 = h0sq * m.H1;

    m.H2 = 36.0 * c4 * c4 + 12.0 * c3 * c3 + 12.0 * c2 * c2 + 36.0 * c1 * c1;

    m.H0H3 = 48.0 * b3 * d5 + 48.0 * b1 * d5 + 16.0 * b3 * d3 +
             16.0 * b1 * d3 - 48.0 * b3 * b3 * b3 * b3 -
             64.0 * b1 * b3 * b3 * b3 - 32.0 * b2 * b2 * b3 * b3 -
             32.0 * b1 * b1 * b3 * b3 - 64.0 * b1 * b2 * b2 * b3 +
             48.0 * d1 * b3 - 64.0 * b1 * b1 * b1 * b3 -
             32.0 * b1 * b1 * b2 * b2 + 48.0 * b1 * d1 -
             48.0 * b1 * b1 * b1 * b1;

    m.H4 = 48.0 * b3 * d5 + 12.0 * b2 * d4 + 8.0 * b3 * d3 + 8.0 * b1 * d3 -
           48.0 * b3 * b3 * b3 * b3 - 48.0 * b2 * b2 * b3 * b3 -
           32.0 * b1 * b1 * b3 * b3 - 32.0 * b1 * b2 * b2 * b3 +
           12.0 * b2 * d2 - 8.0 * b2 * b2 * b2 * b2 -
           48.0 * b1 * b1 * b2 * b2 + 48.0 * b1 * d1 -
           48.0 * b1 * b1 * b1 * b1;

    m.H5 = 48.0 * b3 * d5 + 12.0 * b2 * d4 + 8.0 * b3 * d3 + 8.0 * b1 * d3 -
           48.0 * b3 * b3 * b3 * b3 - 16.0 * b1 * b3 * b3 * b3 -
           44.0 * b2 * b2 * b3 * b3 - 56.0 * b1 * b2 * b2 * b3 -
           16.0 * b1 * b1 * b1 * b3 + 12.0 * b2 * d2 -
           4.0 * b2 * b2 * b2 * b2 - 44.0 * b1 * b1 * b2 * b2 +
           48.0 * b1 * d1 - 48.0 * b1 * b1 * b1 * b1;

    m.H6 = 36.0 * c4 * c4 + 24.0 * c2 * c4 + 4.0 * c3 * c3 + 24.0 * c1 * c3 +
           4.0 * c2 * c2 + 36.0 * c1 * c1;
    return m;
}

} // namespace layerbeta
