#include "weylcomb/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace weylcomb {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Int aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Coeffs IntMatrix::apply(const Coeffs& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("IntMatrix: vector dimension mismatch");
  Coeffs r(n_, 0);
  for (int i = 0; i < n_; ++i) {
    Int s = 0;
    for (int j = 0; j < n_; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Coeffs IntMatrix::column(int c) const {
  Coeffs r(n_, 0);
  for (int i = 0; i < n_; ++i) r[i] = at(i, c);
  return r;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return a_ < o.a_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    os << (i == 0 ? "[" : " [");
    for (int j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]" << (i + 1 < n_ ? "\n" : "");
  }
  return os.str();
}

Int determinant(const IntMatrix& m) {
  const int n = m.dim();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  Int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace weylcomb
