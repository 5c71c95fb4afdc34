#ifndef CONTMAT_ORACLE_HPP
#define CONTMAT_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "contmat/mat2.hpp"

namespace contmat {

struct SearchBounds {
  std::size_t max_len = 6;
  int coeff_bound = 4;
  std::uint64_t max_nodes = 50'000'000;
};

namespace detail {

// Enumerates all words of exactly length n with entries in [-bound, bound],
// lexicographic order, calling visit(word, product) at each leaf. The
// running raw product is maintained incrementally. Returns false when the
// node budget runs out.
template <typename Visit>
bool for_each_word(std::size_t n, int bound, std::uint64_t& nodes_left, Visit&& visit) {
  Word w(n, Int(0));
  std::vector<Mat2> prefix(n + 1);
  prefix[0] = identity();

  // odometer over digits in [-bound, bound]
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = -bound;
    prefix[i + 1] = mul(prefix[i], single(w[i]));
  }
  while (true) {
    if (nodes_left == 0) return false;
    --nodes_left;
    visit(static_cast<const Word&>(w), prefix[n]);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == bound) --i;
    if (i == 0) return true;
    w[i - 1] += 1;
    prefix[i] = mul(prefix[i - 1], single(w[i - 1]));
    for (std::size_t j = i; j < n; ++j) {
      w[j] = -bound;
      prefix[j + 1] = mul(prefix[j], single(w[j]));
    }
  }
}

}  // namespace detail

/// All words of minimum length <= max_len whose continuant psl-equals A,
/// complete per level, in lexicographic order. Empty when nothing is found
/// within the bounds. The empty word is reserved for the trivial product,
/// so the search starts at length 1 and the identity's minimum is 2.
/// Throws BudgetExceeded if max_nodes runs out before the level that first
/// produced a hit is finished.
inline std::vector<Word> shortest_words(const Mat2& A_in, const SearchBounds& b) {
  Mat2 A = psl_normalize(A_in);
  std::uint64_t nodes_left = b.max_nodes;
  for (std::size_t len = 1; len <= b.max_len; ++len) {
    std::vector<Word> hits;
    bool complete = detail::for_each_word(len, b.coeff_bound, nodes_left,
                                          [&](const Word& w, const Mat2& prod) {
                                            if (psl_equal(prod, A)) hits.push_back(w);
                                          });
    if (!complete) throw BudgetExceeded("shortest_words: node budget exhausted");
    if (!hits.empty()) return hits;
  }
  return {};
}

/// All length-n quiddity cycles with entries in [-coeff_bound, coeff_bound],
/// each paired with its sign.
inline std::vector<std::pair<Word, int>> enumerate_quiddity_cycles(std::size_t n, int coeff_bound) {
  std::vector<std::pair<Word, int>> out;
  std::uint64_t nodes_left = UINT64_MAX;
  detail::for_each_word(n, coeff_bound, nodes_left, [&](const Word& w, const Mat2& prod) {
    if (prod == identity()) out.emplace_back(w, 1);
    else if (prod == negate(identity())) out.emplace_back(w, -1);
  });
  return out;
}

enum class OracleConjugacy { Yes, NoWithinBounds, Unresolved };

struct ConjugacyWitness {
  OracleConjugacy result;
  Word conjugator;  // valid when result == Yes
};

/// Bounded conjugacy search: looks for g of length <= max_len with entries
/// in [-coeff_bound, coeff_bound] such that M(g) A M(g)^{-1} = B. Explores
/// one conjugating letter per level so witnesses are reconstructible.
inline ConjugacyWitness oracle_conjugate(const Mat2& A_in, const Mat2& B_in, const SearchBounds& b) {
  Mat2 A = psl_normalize(A_in);
  Mat2 B = psl_normalize(B_in);
  if (A == B) return {OracleConjugacy::Yes, {}};

  // visited matrix -> witness word g with g . A . g^{-1} = matrix
  std::map<Mat2, Word> seen;
  seen.emplace(A, Word{});
  std::vector<Mat2> frontier{A};
  std::uint64_t nodes_left = b.max_nodes;

  for (std::size_t level = 1; level <= b.max_len; ++level) {
    std::vector<Mat2> next;
    for (const Mat2& X : frontier) {
      for (int c = -b.coeff_bound; c <= b.coeff_bound; ++c) {
        if (nodes_left == 0) return {OracleConjugacy::Unresolved, {}};
        --nodes_left;
        Mat2 m = single(c);
        Mat2 Y = psl_normalize(mul(mul(m, X), inverse(m)));
        auto it = seen.find(X);
        Word g = it->second;
        g.insert(g.begin(), Int(c));  // new letter acts last, so it leads
        if (seen.emplace(Y, g).second) {
          if (Y == B) return {OracleConjugacy::Yes, g};
          next.push_back(Y);
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return {OracleConjugacy::NoWithinBounds, {}};
}

}  // namespace contmat

#endif
