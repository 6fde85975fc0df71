#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "osk/rational.hpp"

namespace osk {

// Letters of the free group F of rank n: +i is the i-th generator (1-based),
// -i its inverse. Strings use 'a'..'z' for generators and 'A'..'Z' for
// inverses.
using Letter = int;

inline Letter inverse(Letter x) { return -x; }

// Fixed symbol order a < A < b < B < ...; used for canonical rotations and
// deterministic tie-breaks.
inline int letter_rank(Letter x) { return 2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0); }
inline bool letter_less(Letter x, Letter y) { return letter_rank(x) < letter_rank(y); }

struct Basis {
  int rank;

  explicit Basis(int n) : rank(n) {
    if (n < 2) throw input_error("basis rank must be >= 2");
    if (n > 26) throw input_error("basis rank capped at 26 (letter syntax)");
  }
  // All 2n signed symbols in canonical order a, A, b, B, ...
  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    for (int i = 1; i <= rank; ++i) {
      out.push_back(i);
      out.push_back(-i);
    }
    return out;
  }
  bool contains(Letter x) const { return x != 0 && std::abs(x) <= rank; }
};

// A freely reduced word.
struct Word {
  std::vector<Letter> ls;

  Word() = default;
  explicit Word(std::vector<Letter> v) : ls(std::move(v)) {}
  std::size_t size() const { return ls.size(); }
  bool empty() const { return ls.empty(); }
  Word inverse() const;
  friend bool operator==(const Word& a, const Word& b) { return a.ls == b.ls; }
  friend bool operator<(const Word& a, const Word& b);
};

// A cyclically reduced word stored in its lexicographically minimal rotation.
// Values represent conjugacy classes of F; the inverse class is distinct.
struct CyclicWord {
  std::vector<Letter> ls;

  std::size_t size() const { return ls.size(); }
  CyclicWord inverse() const;
  friend bool operator==(const CyclicWord& a, const CyclicWord& b) { return a.ls == b.ls; }
  friend bool operator<(const CyclicWord& a, const CyclicWord& b);
};

// Freely reduces a raw letter sequence.
Word reduce(const std::vector<Letter>& raw);
Word concat(const Word& a, const Word& b);

// Cyclic reduction: returns (c, u) with u^-1 c u = w and c cyclically
// reduced in canonical rotation. Throws on the trivial word.
std::pair<CyclicWord, Word> cyclic_reduce(const Word& w);

CyclicWord canonical_rotation(std::vector<Letter> cyc);

Word parse_word(const std::string& text, const Basis& basis);
CyclicWord parse_cyclic_word(const std::string& text, const Basis& basis);
std::string to_string(const Word& w);
std::string to_string(const CyclicWord& w);

// Whitehead automorphisms. First kind: a signed permutation of the basis.
// Second kind: (multiplier letter m, set S of letters) with m in S,
// m^-1 not in S; a letter y outside {m, m^-1} maps to
//   y m      if y in S, y^-1 not in S,
//   m^-1 y   if y not in S, y^-1 in S,
//   m^-1 y m if both,
//   y        otherwise,
// and m maps to itself. S lists the letters moved by right-multiplication.
struct WhiteheadAutomorphism {
  enum class Kind { Permutation, CutVertex };
  Kind kind;
  // Permutation kind: perm[i-1] = image letter of generator i.
  std::vector<Letter> perm;
  // CutVertex kind:
  Letter multiplier = 0;
  std::set<Letter> moved;

  static WhiteheadAutomorphism identity(const Basis& b);
  static WhiteheadAutomorphism permutation(const Basis& b, std::vector<Letter> images);
  static WhiteheadAutomorphism cut_vertex(const Basis& b, Letter multiplier,
                                          std::set<Letter> moved);

  Word image_of(Letter x) const;
  WhiteheadAutomorphism inverse(const Basis& b) const;
  // Deterministic encoding for tie-breaks and serialization.
  std::string encode() const;
};

Word apply_automorphism(const WhiteheadAutomorphism& phi, const Word& w);
CyclicWord apply_automorphism(const WhiteheadAutomorphism& phi, const CyclicWord& w);

// All Whitehead automorphisms of the second kind for a given basis,
// in encoding order. There are 2n * 2^(2n-2) of them.
std::vector<WhiteheadAutomorphism> all_cut_vertex_automorphisms(const Basis& b);

// General endomorphism given by generator images; used for composing
// random automorphisms and transporting markings.
struct FreeGroupMap {
  int rank = 0;
  std::vector<Word> images;  // images[i-1] = image of generator i

  Word apply(const Word& w) const;
  CyclicWord apply(const CyclicWord& w) const;
  static FreeGroupMap identity(int rank);
  static FreeGroupMap of(const Basis& b, const WhiteheadAutomorphism& phi);
  // this ∘ other
  FreeGroupMap compose(const FreeGroupMap& other) const;
};

}  // namespace osk
