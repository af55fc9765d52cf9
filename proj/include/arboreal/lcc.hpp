#pragma once

#include "arboreal/complex.hpp"

namespace arboreal {

struct CoverResult {
    MComplex complex;
    MorphismMap projection; // cover -> input
    int splits = 0;         // multicells that were split
};

// Splits every multicell with a disconnected link into one copy per link component, for
// dimensions d-2 down to -1. Each coface is glued to the copy owning its component.
CoverResult linkConnectedCover(const MComplex& X);

// g o f on multicells.
MorphismMap compose(const MorphismMap& g, const MorphismMap& f);

struct UniversalityResult {
    MorphismMap psi;
    Diagnostics diag;
    bool ok() const { return diag.ok(); }
};
// Builds psi: Z -> Y by root propagation and checks that it is a morphism with pi o psi = phi.
UniversalityResult verifyUniversality(const MComplex& Z, const MorphismMap& phi, const MComplex& Y,
                                      const MorphismMap& pi, const Exemptions& exemptZ = {});

// Merges vertex v2 into v1 (global vertex ids of one color): every gluing to v2 is redirected to
// v1 and v2 is removed.
MComplex identifyVertices(const MComplex& X, int v1, int v2);

} // namespace arboreal
