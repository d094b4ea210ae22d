#pragma once

// Derivatives and Schwarzian-type operators of catalog functions on |z| > 1.

#include "univalence/function_catalog.hpp"

namespace univalence {

/// Jet (f, f', f'', f''') at z. Throws OutsideDomain for |z| <= 1 and
/// PoleAtPoint at poles.
ComplexJet derivatives_of(const MeromorphicFn& f, cplx z);

/// f'' / f' from a jet; throws CriticalPoint when f' = 0.
cplx pre_schwarzian(const ComplexJet& jet, cplx at = {});

/// f''' / f' - (3/2) (f'' / f')^2 from a jet; throws CriticalPoint when f' = 0.
cplx schwarzian(const ComplexJet& jet, cplx at = {});

cplx pre_schwarzian(const MeromorphicFn& f, cplx z);
cplx schwarzian(const MeromorphicFn& f, cplx z);

}  // namespace univalence
