#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "blf/errors.hpp"

namespace blf {

// Composition convention used throughout: left-to-right. (p then q) sends
// x to q(p(x)). Braid words act with their first letter applied first.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw error(errc::internal, "images are not a bijection");
      seen[v] = 1;
    }
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // this then other, left-to-right.
  Permutation then(const Permutation& other) const {
    std::vector<int> r(img_.size());
    for (int i = 0; i < degree(); ++i) r[i] = other.img_[img_[i]];
    return Permutation(std::move(r));
  }

  Permutation inverse() const {
    std::vector<int> r(img_.size());
    for (int i = 0; i < degree(); ++i) r[img_[i]] = i;
    return Permutation(std::move(r));
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::vector<int> c;
      int j = i;
      while (!seen[j]) {
        seen[j] = 1;
        c.push_back(j);
        j = img_[j];
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  int cycle_count() const { return static_cast<int>(cycles().size()); }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

  const std::vector<int>& images() const { return img_; }

 private:
  std::vector<int> img_;
};

// Unordered pair {a,b}, 0-based sheets, a < b after normalization.
struct Transposition {
  int a = 0;
  int b = 1;

  Transposition() = default;
  Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (x == y) throw error(errc::internal, "transposition with equal entries");
  }

  int apply(int s) const { return s == a ? b : (s == b ? a : s); }

  // Conjugate of *this by g: swaps the roles of g.a and g.b. Transpositions
  // are involutions, so left/right conjugation agree.
  Transposition conjugated_by(const Transposition& g) const {
    return Transposition(g.apply(a), g.apply(b));
  }

  Permutation as_permutation(int degree) const {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[a], img[b]);
    return Permutation(std::move(img));
  }

  bool moves(int sheet) const { return sheet == a || sheet == b; }

  // Number of common sheets with another transposition (0, 1, or 2).
  int overlap(const Transposition& o) const {
    int n = 0;
    if (moves(o.a)) ++n;
    if (moves(o.b)) ++n;
    return n;
  }

  bool operator==(const Transposition& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Transposition& o) const { return !(*this == o); }

  // 1-based text form "(1 2)".
  std::string str() const {
    return "(" + std::to_string(a + 1) + " " + std::to_string(b + 1) + ")";
  }
};

}  // namespace blf
