#pragma once

#include <array>
#include <map>
#include <string>

#include "posalg/rational.hpp"

namespace posalg {

// Sparse rank-3 array of rationals. Read as a multiplication it stores
// x_i . x_j = sum_k c[i][j][k] x_k; read as a comultiplication it stores
// Delta x_i = sum_{j,k} d[i][j][k] x_j (x) x_k.
class StructureTensor {
 public:
  using Key = std::array<long, 3>;
  using Map = std::map<Key, Rational>;

  StructureTensor() : dim_(0) {}
  explicit StructureTensor(long dim) : dim_(dim) {}

  long dim() const { return dim_; }

  void set(long i, long j, long k, Rational value) {
    check_index(i, j, k);
    if (is_zero(value))
      entries_.erase({i, j, k});
    else
      entries_[{i, j, k}] = std::move(value);
  }

  void add(long i, long j, long k, const Rational& value) {
    check_index(i, j, k);
    auto it = entries_.find({i, j, k});
    if (it == entries_.end()) {
      if (!is_zero(value)) entries_[{i, j, k}] = value;
      return;
    }
    it->second += value;
    if (is_zero(it->second)) entries_.erase(it);
  }

  Rational get(long i, long j, long k) const {
    auto it = entries_.find({i, j, k});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  const Map& entries() const { return entries_; }

  // All (k, value) with nonzero entry (i, j, k): one product expansion.
  template <typename Fn>
  void for_slice(long i, long j, Fn&& fn) const {
    auto lo = entries_.lower_bound({i, j, 0});
    auto hi = entries_.lower_bound({i, j + 1, 0});
    for (auto it = lo; it != hi; ++it) fn((*it).first[2], (*it).second);
  }

  // All (j, k, value) with nonzero entry (i, j, k): one comultiplication row.
  template <typename Fn>
  void for_row(long i, Fn&& fn) const {
    auto lo = entries_.lower_bound({i, 0, 0});
    auto hi = entries_.lower_bound({i + 1, 0, 0});
    for (auto it = lo; it != hi; ++it)
      fn((*it).first[1], (*it).first[2], (*it).second);
  }

  bool operator==(const StructureTensor& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
  }

 private:
  void check_index(long i, long j, long k) const {
    if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
      throw Error("tensor index out of range");
  }

  long dim_;
  Map entries_;
};

// x_i . x_j as a dense coefficient vector.
RatVec tensor_product_basis(const StructureTensor& mult, long i, long j);

// u . v for dense coefficient vectors.
RatVec tensor_product(const StructureTensor& mult, const RatVec& u,
                      const RatVec& v);

// Delta(v) for a dense coefficient vector, as a dense dim x dim matrix
// indexed (left leg, right leg).
RatMat tensor_coproduct(const StructureTensor& comult, const RatVec& v);

}  // namespace posalg
