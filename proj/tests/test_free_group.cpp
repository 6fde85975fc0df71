#include <random>

#include "doctest.h"
#include "osk/free_group.hpp"

using namespace osk;

namespace {

Word random_word(const Basis& b, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, b.rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> raw;
  int n = len(rng);
  for (int i = 0; i < n; ++i) raw.push_back(gen(rng) * (sign(rng) ? 1 : -1));
  return reduce(raw);
}

}  // namespace

TEST_CASE("reduce") {
  Basis b(2);
  CHECK(parse_word("abBA", b).empty());
  CHECK(to_string(parse_word("aab", b)) == "aab");
  CHECK(to_string(parse_word("aBbAa", b)) == "a");
  // whitespace-insensitive syntax
  CHECK(parse_word("a b A B", b) == parse_word("abAB", b));
  CHECK_THROWS_AS(parse_word("xyz", Basis(2)), input_error);
}

TEST_CASE("reduce is idempotent and non-increasing") {
  Basis b(3);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<int> gen(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> raw;
    for (int k = 0; k < 12; ++k) raw.push_back(gen(rng) * (sign(rng) ? 1 : -1));
    Word w = reduce(raw);
    CHECK(w.size() <= raw.size());
    CHECK(reduce(w.ls) == w);
  }
}

TEST_CASE("cyclic_reduce") {
  Basis b(2);
  auto [c1, u1] = cyclic_reduce(parse_word("baB", b));
  CHECK(to_string(c1) == "a");
  // conjugator verifies u^-1 c u = w
  Word back = concat(concat(u1.inverse(), Word(c1.ls)), u1);
  CHECK(back == parse_word("baB", b));

  auto [c2, u2] = cyclic_reduce(parse_word("ab", b));
  CHECK(to_string(c2) == "ab");
  CHECK(u2.empty());

  // Oracle for the class of AbabAa: brute force over rotations and short
  // conjugators, independent of cyclic_reduce.
  Word w3 = parse_word("AbabAa", b);
  auto [c3, u3] = cyclic_reduce(w3);
  Word back3 = concat(concat(u3.inverse(), Word(c3.ls)), u3);
  CHECK(back3 == w3);
  {
    bool found = false;
    std::vector<Word> conjugators{Word()};
    for (int len = 1; len <= 3 && !found; ++len) {
      std::vector<Word> next;
      for (const Word& u : conjugators)
        for (Letter x : b.letters()) {
          Word ux = concat(u, Word({x}));
          if (static_cast<int>(ux.size()) == len) next.push_back(ux);
        }
      for (const Word& u : next)
        if (concat(concat(u.inverse(), Word(c3.ls)), u) == w3) found = true;
      conjugators = next;
      if (concat(concat(Word().inverse(), Word(c3.ls)), Word()) == w3) found = true;
    }
    CHECK(found);
  }
  CHECK(to_string(c3) == "abAb");

  CHECK_THROWS_AS(cyclic_reduce(parse_word("aA", b)), input_error);
}

TEST_CASE("cyclic words are conjugacy invariants") {
  Basis b(3);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(b, rng, 10);
    if (w.empty()) continue;
    Word u = random_word(b, rng, 6);
    Word conj = concat(concat(u, w), u.inverse());
    if (conj.empty()) continue;
    CHECK(cyclic_reduce(w).first == cyclic_reduce(conj).first);
  }
}

TEST_CASE("whitehead automorphism basics") {
  Basis b(2);
  auto id = WhiteheadAutomorphism::identity(b);
  CHECK(apply_automorphism(id, parse_word("ab", b)) == parse_word("ab", b));

  auto inv_a = WhiteheadAutomorphism::permutation(b, {-1, 2});
  CHECK(to_string(apply_automorphism(inv_a, parse_word("ab", b))) == "Ab");

  // (S = {a, b}, multiplier a): b -> ba.
  auto tw = WhiteheadAutomorphism::cut_vertex(b, 1, {1, 2});
  CHECK(to_string(apply_automorphism(tw, parse_word("b", b))) == "ba");
  CHECK(to_string(apply_automorphism(tw, parse_word("a", b))) == "a");
  // homomorphism on a product
  Word lhs = apply_automorphism(tw, parse_word("bab", b));
  Word rhs = concat(concat(apply_automorphism(tw, parse_word("b", b)),
                           apply_automorphism(tw, parse_word("a", b))),
                    apply_automorphism(tw, parse_word("b", b)));
  CHECK(lhs == rhs);
}

TEST_CASE("automorphisms invert") {
  for (int rank : {2, 3}) {
    Basis b(rank);
    std::mt19937_64 rng(13 + rank);
    auto all = all_cut_vertex_automorphisms(b);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 100; ++i) {
      const auto& phi = all[pick(rng)];
      auto phi_inv = phi.inverse(b);
      Word w = random_word(b, rng, 10);
      CHECK(apply_automorphism(phi_inv, apply_automorphism(phi, w)) == w);
      CHECK(apply_automorphism(phi, apply_automorphism(phi_inv, w)) == w);
    }
  }
}

TEST_CASE("cut vertex automorphism count") {
  Basis b(2);
  CHECK(all_cut_vertex_automorphisms(b).size() == 4u * 4u);
  Basis b3(3);
  CHECK(all_cut_vertex_automorphisms(b3).size() == 6u * 16u);
}

TEST_CASE("free group map composition") {
  Basis b(2);
  auto tw = WhiteheadAutomorphism::cut_vertex(b, 1, {1, 2});
  FreeGroupMap f = FreeGroupMap::of(b, tw);
  FreeGroupMap finv = FreeGroupMap::of(b, tw.inverse(b));
  FreeGroupMap comp = f.compose(finv);
  for (int i = 1; i <= 2; ++i) CHECK(comp.images[i - 1] == Word({i}));
}
