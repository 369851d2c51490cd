#pragma once

#include <string>
#include <vector>

#include "blf/braid.hpp"
#include "blf/errors.hpp"
#include "blf/permutation.hpp"

namespace blf {

// Ordered tuple of transpositions in S_d: the branch data of a simple
// branched covering of the disk, one entry per strand/branch point.
struct HurwitzTuple {
  int degree = 1;
  std::vector<Transposition> entries;

  HurwitzTuple() = default;
  HurwitzTuple(int d, std::vector<Transposition> es)
      : degree(d), entries(std::move(es)) {
    if (d < 1) throw error(errc::degenerate_degree, "degree must be >= 1");
    for (const auto& t : entries)
      if (t.b >= d) throw error(errc::internal, "transposition exceeds degree");
  }

  int size() const { return static_cast<int>(entries.size()); }

  bool operator==(const HurwitzTuple& o) const {
    return degree == o.degree && entries == o.entries;
  }
  bool operator!=(const HurwitzTuple& o) const { return !(*this == o); }
};

// Left-to-right product of the entries as permutations: the total boundary
// monodromy of the covering.
inline Permutation tuple_product(const HurwitzTuple& t) {
  Permutation p(t.degree);
  for (const auto& e : t.entries) p = p.then(e.as_permutation(t.degree));
  return p;
}

// Hurwitz action. Generator rule for sigma_i on positions (i, i+1):
// (t_i, t_{i+1}) -> (t_i t_{i+1} t_i, t_i); the inverse rule undoes it.
// Letters act left to right. The ordered product of the tuple is preserved.
inline HurwitzTuple hurwitz_act(const BraidWord& w, const HurwitzTuple& t) {
  if (w.strands() != t.size())
    throw error(errc::strand_mismatch,
                "braid strands (" + std::to_string(w.strands()) +
                    ") != tuple length (" + std::to_string(t.size()) + ")");
  HurwitzTuple r = t;
  for (int l : w.letters()) {
    int i = std::abs(l) - 1;
    Transposition& x = r.entries[i];
    Transposition& y = r.entries[i + 1];
    if (l > 0) {
      Transposition nx = y.conjugated_by(x);
      y = x;
      x = nx;
    } else {
      Transposition ny = x.conjugated_by(y);
      x = y;
      y = ny;
    }
  }
  return r;
}

// Simplicity is structural (entries are transpositions); checks the subgroup
// generated acts transitively on the sheets, so the cover is connected.
inline void validate_cover(const HurwitzTuple& t) {
  if (t.degree < 1)
    throw error(errc::degenerate_degree, "degree must be >= 1");
  if (t.degree == 1) {
    if (!t.entries.empty())
      throw error(errc::internal, "degree-1 cover cannot branch");
    return;
  }
  std::vector<int> comp(t.degree);
  for (int i = 0; i < t.degree; ++i) comp[i] = i;
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& e : t.entries) comp[find(e.a)] = find(e.b);
  int root = find(0);
  for (int i = 1; i < t.degree; ++i)
    if (find(i) != root)
      throw error(errc::non_transitive,
                  "sheet " + std::to_string(i + 1) + " is not reached; cover disconnected");
}

}  // namespace blf
