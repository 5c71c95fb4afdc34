#ifndef CONTMAT_PRESENTATION_HPP
#define CONTMAT_PRESENTATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "contmat/contfrac.hpp"
#include "contmat/mat2.hpp"

namespace contmat {

// ---------------------------------------------------------------------------
// Staircase presentation (q_1,...,q_k,m,0)

/// The unique presentation of A ending on zero with q_2,...,q_k >= 2:
/// (negative_euclid(a,c), ceil(d/c), 0), or (b/a, 0) when c = 0.
inline Word staircase(const Mat2& m_in) {
  Mat2 A = psl_normalize(m_in);
  Word w;
  if (A.c != 0) {
    w = negative_euclid(A.a, A.c);
    w.push_back(ceil_div(A.d, A.c));
  } else {
    // c = 0 forces a = d = 1 after normalization, so m = b.
    w.push_back(A.b);
  }
  w.push_back(0);
  return w;
}

inline bool is_staircase_word(const Word& w) {
  if (w.size() < 2 || w.back() != 0) return false;
  for (std::size_t i = 1; i + 2 < w.size(); ++i)
    if (w[i] < 2) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Surgery moves

enum class MoveKind {
  DropOne,           // inner 1 removed, neighbors decremented
  DropMinusOne,      // inner -1 removed, neighbors incremented
  DropZero,          // inner 0 removed, neighbors merged
  InsertOne,         // 1 inserted after pos, flanks incremented
  InsertMinusOne,    // -1 inserted after pos, flanks decremented
  SplitZero,         // c -> (c - z, 0, z)
  ExpandNegative,    // inner -k -> run of (k-1) twos, neighbors incremented
  CollapseTwos,      // inner run of k twos -> -(k+1), neighbors decremented
  CollapseMinusTwos, // inner run of k -2's -> k+1, neighbors incremented
  TailToStaircase,   // trailing -k -> (..+1, 2 x (k-1), 1, 0)
  Run232ToNeg,       // (a,2,3 x l,2,b) -> (a-1, -3 x (l+1), b-1)
  RunNeg232ToPos,    // (a,-2,-3 x l,-2,b) -> (a+1, 3 x (l+1), b+1)
};

inline const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::DropOne: return "DropOne";
    case MoveKind::DropMinusOne: return "DropMinusOne";
    case MoveKind::DropZero: return "DropZero";
    case MoveKind::InsertOne: return "InsertOne";
    case MoveKind::InsertMinusOne: return "InsertMinusOne";
    case MoveKind::SplitZero: return "SplitZero";
    case MoveKind::ExpandNegative: return "ExpandNegative";
    case MoveKind::CollapseTwos: return "CollapseTwos";
    case MoveKind::CollapseMinusTwos: return "CollapseMinusTwos";
    case MoveKind::TailToStaircase: return "TailToStaircase";
    case MoveKind::Run232ToNeg: return "Run232ToNeg";
    case MoveKind::RunNeg232ToPos: return "RunNeg232ToPos";
  }
  return "?";
}

/// One rewrite step. pos anchors the move (0-based); param carries the run
/// length k / l, or the split value z for SplitZero.
struct Move {
  MoveKind kind;
  std::size_t pos = 0;
  Int param = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

namespace detail {
inline void require(bool ok, const char* msg) {
  if (!ok) throw InvalidMove(msg);
}
}  // namespace detail

/// Applies mv to w. Every move preserves the PSL class of the continuant.
/// Throws InvalidMove when pos/param do not match the word's contents.
inline Word apply_move(const Word& w, const Move& mv) {
  using detail::require;
  const std::size_t n = w.size();
  Word out;
  switch (mv.kind) {
    case MoveKind::DropOne:
    case MoveKind::DropMinusOne:
    case MoveKind::DropZero: {
      require(mv.pos >= 1 && mv.pos + 1 < n, "drop: position not inner");
      const Int want = mv.kind == MoveKind::DropOne ? 1 : mv.kind == MoveKind::DropMinusOne ? -1 : 0;
      require(w[mv.pos] == want, "drop: entry mismatch");
      out = w;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(mv.pos));
      if (mv.kind == MoveKind::DropOne) {
        out[mv.pos - 1] -= 1;
        out[mv.pos] -= 1;
      } else if (mv.kind == MoveKind::DropMinusOne) {
        out[mv.pos - 1] += 1;
        out[mv.pos] += 1;
      } else {
        out[mv.pos - 1] += out[mv.pos];
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(mv.pos));
      }
      return out;
    }
    case MoveKind::InsertOne:
    case MoveKind::InsertMinusOne: {
      require(mv.pos + 1 < n, "insert: needs a right neighbor");
      const Int delta = mv.kind == MoveKind::InsertOne ? 1 : -1;
      out = w;
      out[mv.pos] += delta;
      out[mv.pos + 1] += delta;
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(mv.pos) + 1, delta);
      return out;
    }
    case MoveKind::SplitZero: {
      require(mv.pos < n, "split: position out of range");
      out = w;
      Int z = mv.param;
      out[mv.pos] -= z;
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(mv.pos) + 1, {Int(0), z});
      return out;
    }
    case MoveKind::ExpandNegative: {
      require(mv.pos >= 1 && mv.pos + 1 < n, "expand: position not inner");
      require(w[mv.pos] <= -1, "expand: entry must be negative");
      Int k = -w[mv.pos];
      out.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(mv.pos));
      out.back() += 1;
      for (Int i = 0; i < k - 1; ++i) out.push_back(2);
      out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(mv.pos) + 1, w.end());
      out[out.size() - (n - mv.pos - 1)] += 1;
      return out;
    }
    case MoveKind::CollapseTwos:
    case MoveKind::CollapseMinusTwos: {
      const Int val = mv.kind == MoveKind::CollapseTwos ? 2 : -2;
      require(mv.param >= 1, "collapse: run length must be >= 1");
      std::size_t k = static_cast<std::size_t>(mv.param);
      require(mv.pos >= 1 && mv.pos + k < n, "collapse: run not inner");
      for (std::size_t i = 0; i < k; ++i)
        require(w[mv.pos + i] == val, "collapse: run entry mismatch");
      const Int delta = mv.kind == MoveKind::CollapseTwos ? -1 : 1;
      out.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(mv.pos));
      out.back() += delta;
      out.push_back(delta * (mv.param + 1));
      out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(mv.pos + k), w.end());
      out[mv.pos + 1] += delta;
      return out;
    }
    case MoveKind::TailToStaircase: {
      require(n >= 2 && mv.pos + 1 == n, "tail: anchors at the last entry");
      require(w.back() <= -1, "tail: last entry must be negative");
      Int k = -w.back();
      out.assign(w.begin(), w.end() - 1);
      out.back() += 1;
      for (Int i = 0; i < k - 1; ++i) out.push_back(2);
      out.push_back(1);
      out.push_back(0);
      return out;
    }
    case MoveKind::Run232ToNeg:
    case MoveKind::RunNeg232ToPos: {
      const Int two = mv.kind == MoveKind::Run232ToNeg ? 2 : -2;
      const Int three = mv.kind == MoveKind::Run232ToNeg ? 3 : -3;
      require(mv.param >= 0, "232: negative run length");
      std::size_t l = static_cast<std::size_t>(mv.param);
      require(mv.pos >= 1 && mv.pos + l + 2 < n, "232: run not flanked");
      require(w[mv.pos] == two && w[mv.pos + l + 1] == two, "232: run ends mismatch");
      for (std::size_t i = 1; i <= l; ++i)
        require(w[mv.pos + i] == three, "232: run interior mismatch");
      const Int delta = mv.kind == MoveKind::Run232ToNeg ? -1 : 1;
      out.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(mv.pos));
      out.back() += delta;
      for (std::size_t i = 0; i <= l; ++i) out.push_back(delta * 3);
      out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(mv.pos + l + 2), w.end());
      out[mv.pos + l + 1] += delta;
      return out;
    }
  }
  throw InvalidMove("unknown move kind");
}

/// Enumerates the reducing moves applicable to w, sorted by (pos, kind).
/// Expanding moves (inserts, SplitZero, ExpandNegative) carry free
/// parameters or grow the word; they are applied via apply_move but not
/// enumerated here.
inline std::vector<Move> applicable_moves(const Word& w) {
  std::vector<Move> out;
  const std::size_t n = w.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (w[i] == 1) out.push_back({MoveKind::DropOne, i});
    if (w[i] == -1) out.push_back({MoveKind::DropMinusOne, i});
    if (w[i] == 0) out.push_back({MoveKind::DropZero, i});
    // maximal inner runs of 2's / -2's of length >= 2
    for (Int val : {Int(2), Int(-2)}) {
      if (w[i] == val && w[i - 1] != val) {
        std::size_t k = 0;
        while (i + k < n && w[i + k] == val) ++k;
        if (k >= 2 && i + k < n)
          out.push_back({val == 2 ? MoveKind::CollapseTwos : MoveKind::CollapseMinusTwos, i, Int(k)});
      }
    }
    // (2, 3 x l, 2) runs with both flanks present
    for (Int sgn : {Int(1), Int(-1)}) {
      if (w[i] == sgn * 2) {
        std::size_t j = i + 1;
        while (j < n && w[j] == sgn * 3) ++j;
        if (j + 1 < n && w[j] == sgn * 2)
          out.push_back({sgn > 0 ? MoveKind::Run232ToNeg : MoveKind::RunNeg232ToPos, i, Int(j - i - 1)});
      }
    }
  }
  if (n >= 2 && w.back() <= -1) out.push_back({MoveKind::TailToStaircase, n - 1});
  return out;
}

// ---------------------------------------------------------------------------
// Reduction engine

/// Eliminates inner runs of consecutive twos left to right: a run of k >= 2
/// twos at position i becomes -(k+1) with both neighbors decremented.
/// A leading run (i = 0) is exempt, as are runs touching the last entry.
inline Word reduce_twos(const Word& w) {
  Word r = w;
  std::size_t i = 1;
  while (r.size() >= 1 && i < r.size() - 1) {
    if (r[i] == 2) {
      std::size_t count = 1;
      while (i + count < r.size() && r[i + count] == 2) ++count;
      if (count > 1 && i + count < r.size()) {
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i + 1),
                r.begin() + static_cast<std::ptrdiff_t>(i + count));
        r[i - 1] -= 1;
        r[i] = -Int(count) - 1;
        r[i + 1] -= 1;
      }
    }
    ++i;
  }
  return r;
}

/// Eliminates inner subsequences (a, 2, 3 x l, 2, b) left to right,
/// replacing them by (a-1, -3 x (l+1), b-1); l = 0 handles (a,2,2,b).
inline Word reduce_232(const Word& w) {
  Word r = w;
  std::size_t i = 1;
  while (r.size() >= 1 && i < r.size() - 1) {
    if (r[i] == 2) {
      std::size_t count = 1;
      while (i + count < r.size() && r[i + count] == 3) ++count;
      if (i + count + 1 < r.size() && r[i + count] == 2) {
        for (std::size_t k = 0; k < count; ++k) r[i + k] = -3;
        r[i - 1] -= 1;
        r[i + count + 1] -= 1;
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i + count));
      }
    }
    ++i;
  }
  return r;
}

/// One pass of the tail case analysis on the second-to-last entry:
/// 1 drops with both neighbors decremented, -1 drops with both neighbors
/// incremented, 0 merges its neighbors, -2 flips to 2 with both neighbors
/// incremented. The cases chain on the mutated word within a single call.
/// Words shorter than 3 are returned unchanged.
inline Word reduce_tail(const Word& w) {
  Word r = w;
  if (r.size() > 2 && r[r.size() - 2] == 1) {
    r[r.size() - 3] -= 1;
    r[r.size() - 1] -= 1;
    r.erase(r.end() - 2);
  }
  if (r.size() > 2 && r[r.size() - 2] == -1) {
    r[r.size() - 3] += 1;
    r[r.size() - 1] += 1;
    r.erase(r.end() - 2);
  }
  if (r.size() > 2 && r[r.size() - 2] == 0) {
    r[r.size() - 3] += r[r.size() - 1];
    r.erase(r.end() - 2, r.end());
  }
  if (r.size() > 2 && r[r.size() - 2] == -2) {
    r[r.size() - 3] += 1;
    r[r.size() - 1] += 1;
    r[r.size() - 2] = 2;
  }
  return r;
}

/// Full reduction of a staircase word to the unique minimal presentation
/// with no inner -2: two-run elimination, 232-run elimination, the tail loop
/// on the second-to-last entry, and an interior sweep, repeated to a fixed
/// point. The sweep and the repeat matter: a collapse decrements its
/// neighbors, which can strand a 1, -1, 0 or -2 anywhere in the interior and
/// can open a fresh two-run for the next pass. E.g. (5,5,4,5,5,2,3,1,0)
/// passes the run scans untouched, loses the tail 1 to become (...,2,2,-1),
/// and only then collapses to (5,5,4,5,4,-3,-2).
inline Word reduce(const Word& w) {
  if (!is_staircase_word(w))
    throw DomainError("reduce: input is not a staircase word (q_1,...,q_k,m,0)");
  Word r = w;
  while (true) {
    Word before = r;
    r = reduce_twos(r);
    r = reduce_232(r);
    while (r.size() > 2 && r[r.size() - 2] < 2 && r[r.size() - 2] > -3) r = reduce_tail(r);
    // interior sweep: drop the first 1 / -1 / 0 and flip the first -2 via
    // (a,-2,b) = -(a+1,2,b+1); the outer loop rescans after each change
    for (std::size_t i = 1; i + 1 < r.size(); ++i) {
      const std::ptrdiff_t p = static_cast<std::ptrdiff_t>(i);
      if (r[i] == 1) {
        r[i - 1] -= 1;
        r[i + 1] -= 1;
        r.erase(r.begin() + p);
        break;
      }
      if (r[i] == -1) {
        r[i - 1] += 1;
        r[i + 1] += 1;
        r.erase(r.begin() + p);
        break;
      }
      if (r[i] == 0) {
        r[i - 1] += r[i + 1];
        r.erase(r.begin() + p, r.begin() + p + 2);
        break;
      }
      if (r[i] == -2) {
        r[i] = 2;
        r[i - 1] += 1;
        r[i + 1] += 1;
        break;
      }
    }
    if (r == before) return r;
  }
}

/// The unique minimal presentation of A without inner -2 entries.
inline Word minimal_presentation(const Mat2& A) { return reduce(staircase(A)); }

// ---------------------------------------------------------------------------
// Minimality criteria

struct MinimalityReport {
  bool minimal = true;
  std::string criterion;   // first firing criterion, empty when minimal
  std::size_t pos = 0;
};

/// Checks the shortening criteria: an inner entry of absolute value <= 1,
/// inner consecutive 2's or -2's, or a flanked (a,2,3,...,3,2,b) /
/// (a,-2,-3,...,-3,-2,b) subsequence. First and last entries are exempt.
inline MinimalityReport check_minimal(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (abs(w[i]) <= 1) return {false, "inner entry with |c| <= 1", i};
    if (i + 2 < n && ((w[i] == 2 && w[i + 1] == 2) || (w[i] == -2 && w[i + 1] == -2)))
      return {false, "inner consecutive +/-2 run", i};
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (Int sgn : {Int(1), Int(-1)}) {
      if (w[i] != sgn * 2) continue;
      std::size_t j = i + 1;
      while (j < n && w[j] == sgn * 3) ++j;
      if (j + 1 < n && w[j] == sgn * 2)
        return {false, sgn > 0 ? "(a,2,3,...,3,2,b) subsequence" : "(a,-2,-3,...,-3,-2,b) subsequence", i};
    }
  }
  return {};
}

inline bool is_minimal(const Word& w) { return check_minimal(w).minimal; }

}  // namespace contmat

#endif
