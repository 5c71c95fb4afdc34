#ifndef CONTMAT_CONTFRAC_HPP
#define CONTMAT_CONTFRAC_HPP

#include <cstddef>
#include <vector>

#include "contmat/mat2.hpp"

namespace contmat {

/// Reduced fraction with positive denominator.
struct Rational {
  Int num;
  Int den;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Coefficients [[q_1,...,q_k]] of a negative continued fraction,
/// q_i >= 2 for i >= 2.
using NegCF = std::vector<Int>;

/// Coefficients [a_1,...,a_{2m}] of a regular continued fraction of even
/// length, a_i >= 1 for i >= 2.
using RegCF = std::vector<Int>;

inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

/// ceil(x/y) for y > 0.
inline Int ceil_div(const Int& x, const Int& y) {
  Int q = x / y;  // truncates toward zero
  if (x % y > 0) ++q;
  return q;
}

/// Negative Euclidean algorithm: the unique q_1,...,q_k with q_i >= 2 for
/// i >= 2 such that a/c = [[q_1,...,q_k]]. Remainders strictly decrease
/// to zero, so the output has at most c entries.
inline NegCF negative_euclid(const Int& a, const Int& c) {
  if (c <= 0) throw DomainError("negative_euclid: c must be positive");
  if (gcd(a, c) != 1) throw GcdError("negative_euclid: gcd(a, c) != 1");
  NegCF qs;
  Int x = a, y = c;
  while (y > 0) {
    Int q = ceil_div(x, y);
    Int r = q * y - x;
    qs.push_back(q);
    x = y;
    y = r;
  }
  return qs;
}

/// Evaluates [[q_1,...,q_k]] = q_1 - 1/(q_2 - 1/(...)) right to left.
inline Rational ncf_eval(const NegCF& q) {
  if (q.empty()) throw DomainError("ncf_eval: empty coefficient list");
  // value = num/den, starting from the innermost coefficient
  Int num = q.back(), den = 1;
  for (std::size_t i = q.size() - 1; i-- > 0;) {
    if (num == 0) throw DivisionByZero("ncf_eval: zero intermediate tail");
    // q_i - den/num = (q_i*num - den)/num
    Int nnum = q[i] * num - den;
    den = num;
    num = nnum;
  }
  return make_rational(num, den);
}

/// Evaluates [a_1,...,a_n] = a_1 + 1/(a_2 + 1/(...)).
inline Rational regcf_eval(const RegCF& a) {
  if (a.empty()) throw DomainError("regcf_eval: empty coefficient list");
  Int num = a.back(), den = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    if (num == 0) throw DivisionByZero("regcf_eval: zero intermediate tail");
    // a_i + den/num = (a_i*num + den)/num
    Int nnum = a[i] * num + den;
    den = num;
    num = nnum;
  }
  return make_rational(num, den);
}

/// Regular-to-negative conversion:
/// (a_1+1, 2 x (a_2-1), a_3+2, 2 x (a_4-1), ...).
/// Only even-length regular CFs are accepted; the bijection onto rationals
/// uses exactly the even-length expansions.
inline NegCF regcf_to_ncf(const RegCF& a) {
  if (a.empty() || a.size() % 2 != 0)
    throw DomainError("regcf_to_ncf: length must be even and positive");
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] < 1) throw DomainError("regcf_to_ncf: coefficients after the first must be >= 1");
  NegCF out;
  for (std::size_t i = 0; i < a.size(); i += 2) {
    out.push_back(i == 0 ? a[0] + 1 : a[i] + 2);
    for (Int k = 0; k < a[i + 1] - 1; ++k) out.push_back(2);
  }
  return out;
}

}  // namespace contmat

#endif
