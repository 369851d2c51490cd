#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "blf/braid.hpp"
#include "blf/hurwitz.hpp"

using namespace blf;

namespace {

BraidWord random_word(std::mt19937& rng, int strands, int len) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) ls.push_back(sgn(rng) ? gen(rng) : -gen(rng));
  return BraidWord(strands, std::move(ls));
}

HurwitzTuple random_tuple(std::mt19937& rng, int degree, int len) {
  std::uniform_int_distribution<int> sheet(0, degree - 1);
  std::vector<Transposition> es;
  for (int i = 0; i < len; ++i) {
    int a = sheet(rng), b = sheet(rng);
    while (b == a) b = sheet(rng);
    es.emplace_back(a, b);
  }
  return HurwitzTuple(degree, std::move(es));
}

// Inserts a braid relator or a free cancellation at a random spot; the
// result is equal to w in the group.
BraidWord insert_relator(std::mt19937& rng, const BraidWord& w) {
  int m = w.strands();
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> pos(0, w.length());
  std::vector<int> mid;
  int kind = pick(rng);
  if (kind == 0 && m >= 3) {
    std::uniform_int_distribution<int> gi(1, m - 2);
    int i = gi(rng);  // sigma_i sigma_{i+1} sigma_i sigma_{i+1}^-1 sigma_i^-1 sigma_{i+1}^-1
    mid = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
  } else if (kind == 1 && m >= 4) {
    std::uniform_int_distribution<int> gi(1, m - 3);
    int i = gi(rng);  // far commutator
    mid = {i, i + 2, -i, -(i + 2)};
  } else {
    std::uniform_int_distribution<int> gi(1, m - 1);
    int i = gi(rng);
    mid = {i, -i};
  }
  std::vector<int> ls = w.letters();
  ls.insert(ls.begin() + pos(rng), mid.begin(), mid.end());
  return BraidWord(m, std::move(ls));
}

}  // namespace

TEST_CASE("permutation_of basics") {
  // sigma_1 sigma_2 in B_3: (12) then (23), first letter applied first.
  BraidWord w(3, {1, 2});
  Permutation p = permutation_of(w);
  CHECK(p(0) == 2);
  CHECK(p(2) == 1);
  CHECK(p(1) == 0);

  CHECK(permutation_of(BraidWord::identity(4)).is_identity());
  CHECK(permutation_of(BraidWord(2, {1, -1})).is_identity());
}

TEST_CASE("permutation_of is a homomorphism") {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    BraidWord a = random_word(rng, 5, 8);
    BraidWord b = random_word(rng, 5, 8);
    CHECK(permutation_of(a * b) == permutation_of(a).then(permutation_of(b)));
  }
}

TEST_CASE("exponent_sum") {
  CHECK(exponent_sum(BraidWord(3, {1, 2})) == 2);
  CHECK(exponent_sum(BraidWord(2, {1, -1})) == 0);
  CHECK(exponent_sum(BraidWord(2, {1, 1, 1, 1, 1})) == 5);
}

TEST_CASE("is_trivial on braid relation and simple words") {
  CHECK(is_trivial(BraidWord(3, {1, 2, 1, -2, -1, -2})));
  CHECK_FALSE(is_trivial(BraidWord(2, {1, 1})));
  CHECK(is_trivial(BraidWord::identity(5)));
  // far generators commute
  CHECK(is_trivial(BraidWord(4, {1, 3, -1, -3})));
  // adjacent generators do not
  CHECK_FALSE(is_trivial(BraidWord(3, {1, 2, -1, -2})));
}

TEST_CASE("is_trivial accepts w * w^-1 for random w") {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    BraidWord w = random_word(rng, 4 + it % 3, 3 + it % 12);
    CHECK(is_trivial(w * w.inverse()));
  }
}

TEST_CASE("is_trivial regression set: relator consequences") {
  // 50 fixed cases built by seeding trivial words with relator insertions.
  std::mt19937 rng(1234);
  int cases = 0;
  while (cases < 50) {
    BraidWord w = random_word(rng, 4 + cases % 3, 2 + cases % 6);
    BraidWord t = w * w.inverse();
    for (int k = 0; k < 3; ++k) t = insert_relator(rng, t);
    CAPTURE(cases, t.str());
    REQUIRE(is_trivial(t));
    ++cases;
  }
}

TEST_CASE("is_trivial agrees with necessary conditions on random words") {
  std::mt19937 rng(99);
  for (int it = 0; it < 300; ++it) {
    BraidWord w = random_word(rng, 5, 10);
    bool triv = is_trivial(w);
    if (exponent_sum(w) != 0 || !permutation_of(w).is_identity())
      CHECK_FALSE(triv);
  }
}

TEST_CASE("hurwitz generator rule") {
  HurwitzTuple t(3, {Transposition(0, 1), Transposition(0, 2)});
  HurwitzTuple r = hurwitz_act(BraidWord(2, {1}), t);
  CHECK(r.entries[0] == Transposition(1, 2));
  CHECK(r.entries[1] == Transposition(0, 1));
  HurwitzTuple back = hurwitz_act(BraidWord(2, {-1}), r);
  CHECK(back == t);
}

TEST_CASE("hurwitz action is a product-preserving group action") {
  std::mt19937 rng(5);
  for (int it = 0; it < 1000; ++it) {
    int d = 3 + it % 3;
    int m = 3 + it % 4;
    HurwitzTuple t = random_tuple(rng, d, m);
    BraidWord a = random_word(rng, m, 5);
    BraidWord b = random_word(rng, m, 5);
    HurwitzTuple lhs = hurwitz_act(a * b, t);
    HurwitzTuple rhs = hurwitz_act(b, hurwitz_act(a, t));
    REQUIRE(lhs == rhs);
    REQUIRE(tuple_product(lhs) == tuple_product(t));
    REQUIRE(hurwitz_act(a.inverse(), hurwitz_act(a, t)) == t);
  }
}

TEST_CASE("tuple_product examples") {
  HurwitzTuple t1(3, {Transposition(0, 1), Transposition(0, 1)});
  CHECK(tuple_product(t1).is_identity());

  HurwitzTuple t2(3, {Transposition(0, 1), Transposition(0, 2)});
  Permutation p2 = tuple_product(t2);
  CHECK(p2(0) == 1);
  CHECK(p2(1) == 2);
  CHECK(p2(2) == 0);

  // Stepwise left-to-right oracle for the 4-entry tuple.
  HurwitzTuple t3(3, {Transposition(0, 1), Transposition(0, 2),
                      Transposition(0, 1), Transposition(0, 2)});
  Permutation step(3);
  for (const auto& e : t3.entries) step = step.then(e.as_permutation(3));
  Permutation p3 = tuple_product(t3);
  CHECK(p3 == step);
  CHECK(p3(0) == 2);
  CHECK(p3(2) == 1);
  CHECK(p3(1) == 0);
}

TEST_CASE("validate_cover") {
  CHECK_NOTHROW(validate_cover(HurwitzTuple(
      3, {Transposition(0, 1), Transposition(0, 2), Transposition(0, 1),
          Transposition(0, 2)})));
  CHECK_THROWS_AS(
      validate_cover(HurwitzTuple(3, {Transposition(0, 1), Transposition(0, 1)})),
      error);
  CHECK_NOTHROW(validate_cover(HurwitzTuple(1, {})));
}

TEST_CASE("band generator words") {
  BandGenerator b(BraidWord(4, {-3, -2}), 1, -1);
  BraidWord w = b.as_word();
  CHECK(w.letters() == std::vector<int>({-3, -2, -1, 2, 3}));
  CHECK(is_trivial(b.as_word() * b.factor_removal_word()));
}
