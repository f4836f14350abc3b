#include "posalg/tensor.hpp"

namespace posalg {

RatVec tensor_product_basis(const StructureTensor& mult, long i, long j) {
  RatVec out(mult.dim(), Rational(0));
  mult.for_slice(i, j, [&](long k, const Rational& v) { out[k] = v; });
  return out;
}

RatVec tensor_product(const StructureTensor& mult, const RatVec& u,
                      const RatVec& v) {
  RatVec out(mult.dim(), Rational(0));
  for (long i = 0; i < mult.dim(); ++i) {
    if (is_zero(u[i])) continue;
    for (long j = 0; j < mult.dim(); ++j) {
      if (is_zero(v[j])) continue;
      Rational scale = u[i] * v[j];
      mult.for_slice(i, j,
                     [&](long k, const Rational& c) { out[k] += scale * c; });
    }
  }
  return out;
}

RatMat tensor_coproduct(const StructureTensor& comult, const RatVec& v) {
  RatMat out(comult.dim(), RatVec(comult.dim(), Rational(0)));
  for (long i = 0; i < comult.dim(); ++i) {
    if (is_zero(v[i])) continue;
    comult.for_row(i, [&](long j, long k, const Rational& c) {
      out[j][k] += v[i] * c;
    });
  }
  return out;
}

}  // namespace posalg
