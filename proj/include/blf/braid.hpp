#pragma once

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "blf/errors.hpp"
#include "blf/permutation.hpp"

namespace blf {

// Word in the Artin generators of B_m. Letters are signed 1-based indices:
// +j is the positive crossing of strands j, j+1; -j its inverse. Words act
// first letter first, matching the global left-to-right convention.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw error(errc::internal, "braid needs >= 1 strand");
    for (int l : letters_) {
      int j = std::abs(l);
      if (l == 0 || j >= strands_)
        throw error(errc::internal, "letter index out of range");
    }
  }

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  BraidWord operator*(const BraidWord& o) const {
    if (strands_ != o.strands_)
      throw error(errc::strand_mismatch, "cannot concatenate words on different strand counts");
    std::vector<int> ls = letters_;
    ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
    return BraidWord(strands_, std::move(ls));
  }

  BraidWord inverse() const {
    std::vector<int> ls(letters_.rbegin(), letters_.rend());
    for (int& l : ls) l = -l;
    return BraidWord(strands_, std::move(ls));
  }

  BraidWord appended(int letter) const {
    std::vector<int> ls = letters_;
    ls.push_back(letter);
    return BraidWord(strands_, std::move(ls));
  }

  BraidWord free_reduced() const {
    std::vector<int> out;
    for (int l : letters_) {
      if (!out.empty() && out.back() == -l)
        out.pop_back();
      else
        out.push_back(l);
    }
    return BraidWord(strands_, std::move(out));
  }

  bool touches(int strand) const {  // 1-based strand position
    for (int l : letters_) {
      int j = std::abs(l);
      if (j == strand || j + 1 == strand) return true;
    }
    return false;
  }

  // Word on m+count strands with `count` new parallel strands at position
  // `at` (1-based, 1..m+1). Letters crossing the insertion point are not
  // reindexable; the caller must normalize first.
  BraidWord with_inserted_strands(int at, int count) const {
    if (at < 1 || at > strands_ + 1)
      throw error(errc::bad_position, "insertion position out of range");
    std::vector<int> ls;
    ls.reserve(letters_.size());
    for (int l : letters_) {
      int j = std::abs(l);
      if (j == at - 1)
        throw error(errc::straddling_cap,
                    "letter crosses the insertion position; isotope first");
      ls.push_back(j >= at ? (l > 0 ? l + count : l - count) : l);
    }
    return BraidWord(strands_ + count, std::move(ls));
  }

  // Word on m-1 strands after removing strand `pos`; requires no letters
  // touching it.
  BraidWord with_deleted_strand(int pos) const {
    if (pos < 1 || pos > strands_)
      throw error(errc::bad_position, "strand position out of range");
    if (touches(pos))
      throw error(errc::not_split, "letters touch the strand being removed");
    std::vector<int> ls;
    ls.reserve(letters_.size());
    for (int l : letters_) {
      int j = std::abs(l);
      ls.push_back(j > pos ? (l > 0 ? l - 1 : l + 1) : l);
    }
    return BraidWord(strands_ - 1, std::move(ls));
  }

  bool operator==(const BraidWord& o) const {
    return strands_ == o.strands_ && letters_ == o.letters_;
  }
  bool operator!=(const BraidWord& o) const { return !(*this == o); }

  std::string str() const {
    std::ostringstream os;
    for (size_t i = 0; i < letters_.size(); ++i) {
      if (i) os << ' ';
      os << letters_[i];
    }
    return os.str();
  }

  static BraidWord parse(int strands, const std::string& text) {
    std::istringstream is(text);
    std::vector<int> ls;
    int v;
    while (is >> v) ls.push_back(v);
    if (!is.eof()) throw error(errc::parse, "invalid braid word text");
    return BraidWord(strands, std::move(ls));
  }

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

inline Permutation permutation_of(const BraidWord& w) {
  std::vector<int> img(w.strands());
  for (int i = 0; i < w.strands(); ++i) img[i] = i;
  // Track where each start position ends up; letter j swaps positions j, j+1.
  for (int l : w.letters()) {
    int j = std::abs(l) - 1;
    for (int& v : img)
      if (v == j)
        v = j + 1;
      else if (v == j + 1)
        v = j;
  }
  return Permutation(std::move(img));
}

inline long long exponent_sum(const BraidWord& w) {
  long long e = 0;
  for (int l : w.letters()) e += (l > 0 ? 1 : -1);
  return e;
}

namespace detail {

// One pass of Dehornoy handle reduction on the first-ending handle.
// Returns false when no handle exists.
inline bool reduce_first_handle(std::vector<int>& ls) {
  int n = static_cast<int>(ls.size());
  // prev[q]: nearest position p < q whose letter index is i or i-1, where i
  // is the index at q. Scan directly; words are short.
  for (int q = 0; q < n; ++q) {
    int i = std::abs(ls[q]);
    for (int p = q - 1; p >= 0; --p) {
      int jp = std::abs(ls[p]);
      if (jp == i) {
        if (ls[p] == -ls[q]) {
          // handle ls[p..q]
          int e = ls[p] > 0 ? 1 : -1;
          std::vector<int> out;
          out.reserve(ls.size() + 8);
          out.insert(out.end(), ls.begin(), ls.begin() + p);
          for (int k = p + 1; k < q; ++k) {
            int j = std::abs(ls[k]);
            if (j == i + 1) {
              out.push_back(e > 0 ? -(i + 1) : (i + 1));
              out.push_back(ls[k] > 0 ? i : -i);
              out.push_back(e > 0 ? (i + 1) : -(i + 1));
            } else {
              out.push_back(ls[k]);
            }
          }
          out.insert(out.end(), ls.begin() + q + 1, ls.end());
          ls = std::move(out);
          return true;
        }
        break;  // same-sign occurrence of i blocks any handle ending at q
      }
      if (jp == i - 1) break;  // sigma_{i-1} blocks
    }
  }
  return false;
}

inline void free_reduce_inplace(std::vector<int>& ls) {
  std::vector<int> out;
  out.reserve(ls.size());
  for (int l : ls) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  ls = std::move(out);
}

}  // namespace detail

// Sound and complete word problem for B_m: free reduction, abelianization and
// permutation as fast necessary checks, then Dehornoy handle reduction. The
// step budget turns nontermination bugs into hard errors.
inline bool is_trivial(const BraidWord& w, long long budget = 4'000'000) {
  BraidWord r = w.free_reduced();
  if (r.empty()) return true;
  if (exponent_sum(r) != 0) return false;
  if (!permutation_of(r).is_identity()) return false;
  std::vector<int> ls = r.letters();
  long long steps = 0;
  while (true) {
    detail::free_reduce_inplace(ls);
    if (ls.empty()) return true;
    if (!detail::reduce_first_handle(ls)) return false;
    steps += static_cast<long long>(ls.size());
    if (steps > budget)
      throw error(errc::reduction_budget, "handle reduction exceeded step budget");
  }
}

inline bool words_equal(const BraidWord& a, const BraidWord& b) {
  return is_trivial(a * b.inverse());
}

// Conjugate w sigma_index^sign w^{-1} of a standard generator; encodes one
// branch point of a braided surface.
struct BandGenerator {
  BraidWord conjugator;  // word on the same strand count
  int index = 1;         // 1-based generator index
  int sign = 1;          // +1 Lefschetz side, -1 anti-Lefschetz side

  BandGenerator() = default;
  BandGenerator(BraidWord w, int idx, int s)
      : conjugator(std::move(w)), index(idx), sign(s) {
    if (idx < 1 || idx >= conjugator.strands())
      throw error(errc::internal, "band index out of range");
    if (s != 1 && s != -1) throw error(errc::internal, "band sign must be +-1");
  }

  int strands() const { return conjugator.strands(); }

  BraidWord as_word() const {
    return conjugator * BraidWord(strands(), {sign > 0 ? index : -index}) *
           conjugator.inverse();
  }

  // Inverse of the monodromy factor; appending this to a still's word is the
  // wordwise effect of crossing the branch point radially inward.
  BraidWord factor_removal_word() const {
    return conjugator * BraidWord(strands(), {sign > 0 ? -index : index}) *
           conjugator.inverse();
  }
};

}  // namespace blf
