#ifndef CONTMAT_MAT2_HPP
#define CONTMAT_MAT2_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "contmat/errors.hpp"

namespace contmat {

using Int = boost::multiprecision::cpp_int;

/// A coefficient sequence (c_1,...,c_n); the word denotes M(c_1)...M(c_n).
using Word = std::vector<Int>;

/// 2x2 integer matrix, row-major. Plain value; determinant and PSL
/// normalization are checked by the functions below.
struct Mat2 {
  Int a, b, c, d;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  // cpp_int has no <=>, so spell out the lexicographic order
  friend bool operator<(const Mat2& x, const Mat2& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
  }
};

inline Int det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

inline Mat2 identity() { return Mat2{1, 0, 0, 1}; }

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Mat2 negate(const Mat2& m) { return Mat2{-m.a, -m.b, -m.c, -m.d}; }

/// Inverse of a determinant-1 matrix.
inline Mat2 inverse(const Mat2& m) { return Mat2{m.d, -m.b, -m.c, m.a}; }

/// The elementary continuant matrix M(c) = ((c,-1),(1,0)). Un-normalized.
inline Mat2 single(const Int& c) { return Mat2{c, -1, 1, 0}; }

/// Fixed PSL(2,Z) representative: c > 0, or c = 0 and a > 0.
inline Mat2 psl_normalize(const Mat2& m) {
  if (det(m) != 1) throw DeterminantError("psl_normalize: determinant is not 1");
  if (m.c < 0 || (m.c == 0 && m.a < 0)) return negate(m);
  return m;
}

/// Equality in PSL(2,Z): entrywise equal up to a global sign.
inline bool psl_equal(const Mat2& x, const Mat2& y) {
  if (det(x) != 1 || det(y) != 1) throw DeterminantError("psl_equal: determinant is not 1");
  return x == y || x == negate(y);
}

/// Raw SL(2,Z) product M(c_1)...M(c_n); empty word gives the identity.
inline Mat2 continuant_raw(const Word& w) {
  Mat2 g = identity();
  for (const Int& c : w) g = mul(g, single(c));
  return g;
}

/// PSL-normalized continuant product.
inline Mat2 continuant(const Word& w) { return psl_normalize(continuant_raw(w)); }

/// If M(c_1,...,c_n) = eps*Id exactly, returns eps; otherwise nullopt.
/// Computed on the raw product: normalization would erase the sign.
inline std::optional<int> quiddity_sign(const Word& w) {
  Mat2 g = continuant_raw(w);
  if (g == identity()) return 1;
  if (g == negate(identity())) return -1;
  return std::nullopt;
}

/// Cyclic rotation (c_{k+1},...,c_n,c_1,...,c_k); k is reduced mod n.
inline Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

}  // namespace contmat

#endif
