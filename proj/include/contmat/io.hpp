#ifndef CONTMAT_IO_HPP
#define CONTMAT_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "contmat/conjugacy.hpp"
#include "contmat/mat2.hpp"

namespace contmat {

namespace detail {

// One decimal integer with optional sign; start/end are byte offsets into
// the surrounding text, used for error reporting.
inline Int parse_int_field(std::string_view text, std::size_t start, std::size_t end) {
  std::size_t i = start, j = end;
  while (i < j && (text[i] == ' ' || text[i] == '\t')) ++i;
  while (j > i && (text[j - 1] == ' ' || text[j - 1] == '\t')) --j;
  if (i == j) throw ParseError("empty field", start);
  std::size_t k = i;
  if (text[k] == '+' || text[k] == '-') ++k;
  if (k == j) throw ParseError("sign without digits", i);
  for (std::size_t p = k; p < j; ++p)
    if (text[p] < '0' || text[p] > '9') throw ParseError("invalid character in integer", p);
  if (text[i] == '+') ++i;  // cpp_int's parser rejects an explicit plus
  return Int(std::string(text.substr(i, j - i)));
}

}  // namespace detail

/// Comma-separated integers; the empty string is the empty word.
inline Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  std::size_t j = text.size();
  while (j > i && (text[j - 1] == ' ' || text[j - 1] == '\t')) --j;
  if (i == j) return w;
  std::size_t field_start = i;
  for (std::size_t p = i; p <= j; ++p) {
    if (p == j || text[p] == ',') {
      w.push_back(detail::parse_int_field(text, field_start, p));
      field_start = p + 1;
    }
  }
  return w;
}

/// "a,b,c,d" row-major; the result is PSL-normalized. det != 1 is rejected.
inline Mat2 parse_matrix(std::string_view text) {
  Word entries = parse_word(text);
  if (entries.size() != 4) throw ParseError("matrix needs exactly 4 entries", text.size());
  Mat2 m{entries[0], entries[1], entries[2], entries[3]};
  Int dt = det(m);
  if (dt != 1)
    throw DeterminantError("determinant is " + dt.str() + ", expected 1");
  return psl_normalize(m);
}

inline std::string render_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += w[i].str();
  }
  return out;
}

inline std::string render_matrix(const Mat2& m) {
  return m.a.str() + "," + m.b.str() + "," + m.c.str() + "," + m.d.str();
}

inline std::string render_classform(const ClassForm& f) {
  return (f.kind == ClassForm::Kind::Cyclic ? std::string("cyclic: ") : std::string("short: ")) +
         render_word(f.coeffs);
}

}  // namespace contmat

#endif
