#include "epzeta/hecke.hpp"

namespace epzeta {

HaarMeasure hattori_stallings_rank(const HeckeAlgebra<BigRational>& algebra,
                                   const HeckeMatrix<BigRational>& e,
                                   const std::string& base) {
  if (!algebra.is_idempotent(e)) throw Error("not idempotent");
  return HaarMeasure(algebra.matrix_trace(e), base);
}

}  // namespace epzeta
