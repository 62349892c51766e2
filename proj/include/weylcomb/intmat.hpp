#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weylcomb {

using Int = std::int64_t;
using Coeffs = std::vector<Int>;

/// Dense square integer matrix, used for Cartan data and root-lattice actions.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  static IntMatrix identity(int n);

  int dim() const { return n_; }
  Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  Int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transposed() const;

  /// Matrix times column vector.
  Coeffs apply(const Coeffs& v) const;
  /// Column c as a vector (the image of the c-th basis vector).
  Coeffs column(int c) const;

  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  bool operator<(const IntMatrix& o) const;

  const std::vector<Int>& flat() const { return a_; }
  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<Int> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

}  // namespace weylcomb
