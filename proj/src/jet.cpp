#include "univalence/jet.hpp"

namespace univalence {

ComplexJet jet_combine(JetOp op, const ComplexJet& a, const ComplexJet& b) {
  switch (op) {
    case JetOp::add: return require_finite(a + b);
    case JetOp::sub: return require_finite(a - b);
    case JetOp::mul: return require_finite(a * b);
    case JetOp::div: return require_finite(a / b);
    case JetOp::exp: return exp(a);
    case JetOp::log: return log(a);
    case JetOp::pow: return pow(a, b.value());
  }
  throw Error(ErrorKind::InvalidSpec, "unknown jet operation");
}

ComplexJet jet_combine(JetOp op, const ComplexJet& a, cplx exponent) {
  if (op != JetOp::pow) {
    throw Error(ErrorKind::InvalidSpec, "scalar operand is only valid for pow");
  }
  return pow(a, exponent);
}

}  // namespace univalence
