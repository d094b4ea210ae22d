#include "univalence/differential.hpp"

#include <cmath>

namespace univalence {

namespace {

void require_critical_free(const ComplexJet& jet, cplx at) {
  if (is_critical(jet, at)) throw Error(ErrorKind::CriticalPoint, "f' vanishes", at);
}

}  // namespace

ComplexJet derivatives_of(const MeromorphicFn& f, cplx z) {
  if (!(std::abs(z) > 1.0)) throw Error(ErrorKind::OutsideDomain, "point must satisfy |z| > 1", z);
  return f.jet<3>(z);
}

cplx pre_schwarzian(const ComplexJet& jet, cplx at) {
  require_critical_free(jet, at);
  return jet.d2() / jet.d1();
}

cplx schwarzian(const ComplexJet& jet, cplx at) {
  require_critical_free(jet, at);
  const cplx p = jet.d2() / jet.d1();
  return jet.d3() / jet.d1() - 1.5 * p * p;
}

cplx pre_schwarzian(const MeromorphicFn& f, cplx z) { return pre_schwarzian(derivatives_of(f, z), z); }

cplx schwarzian(const MeromorphicFn& f, cplx z) { return schwarzian(derivatives_of(f, z), z); }

}  // namespace univalence
