#include "osk/free_group.hpp"

#include <algorithm>
#include <cctype>

namespace osk {

Word reduce(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  for (Letter x : raw) {
    if (x == 0) throw input_error("zero letter");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.ls;
  raw.insert(raw.end(), b.ls.begin(), b.ls.end());
  return reduce(raw);
}

Word Word::inverse() const {
  std::vector<Letter> out(ls.rbegin(), ls.rend());
  for (Letter& x : out) x = -x;
  return Word(std::move(out));
}

bool operator<(const Word& a, const Word& b) {
  if (a.ls.size() != b.ls.size()) return a.ls.size() < b.ls.size();
  return std::lexicographical_compare(a.ls.begin(), a.ls.end(), b.ls.begin(), b.ls.end(),
                                      letter_less);
}

bool operator<(const CyclicWord& a, const CyclicWord& b) {
  if (a.ls.size() != b.ls.size()) return a.ls.size() < b.ls.size();
  return std::lexicographical_compare(a.ls.begin(), a.ls.end(), b.ls.begin(), b.ls.end(),
                                      letter_less);
}

CyclicWord canonical_rotation(std::vector<Letter> cyc) {
  if (cyc.empty()) throw input_error("empty cyclic word");
  std::size_t n = cyc.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      int ra = letter_rank(cyc[(best + k) % n]);
      int rb = letter_rank(cyc[(r + k) % n]);
      if (rb != ra) {
        if (rb < ra) best = r;
        break;
      }
    }
  }
  std::vector<Letter> rot;
  rot.reserve(n);
  for (std::size_t k = 0; k < n; ++k) rot.push_back(cyc[(best + k) % n]);
  CyclicWord out;
  out.ls = std::move(rot);
  return out;
}

CyclicWord CyclicWord::inverse() const {
  std::vector<Letter> inv(ls.rbegin(), ls.rend());
  for (Letter& x : inv) x = -x;
  return canonical_rotation(std::move(inv));
}

std::pair<CyclicWord, Word> cyclic_reduce(const Word& w) {
  if (w.empty()) throw input_error("trivial word has no conjugacy class");
  std::vector<Letter> mid = w.ls;
  std::vector<Letter> conj;  // w = conj^-1 mid conj
  while (mid.size() >= 2 && mid.front() == -mid.back()) {
    conj.push_back(mid.front());
    mid.erase(mid.begin());
    mid.pop_back();
  }
  if (mid.empty()) throw input_error("trivial word has no conjugacy class");
  // Canonical rotation changes the conjugator by the rotated prefix.
  std::size_t n = mid.size();
  CyclicWord canon = canonical_rotation(mid);
  // Find rotation offset: canon.ls == rotate(mid, r).
  std::size_t r = 0;
  for (; r < n; ++r) {
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) ok = (mid[(r + k) % n] == canon.ls[k]);
    if (ok) break;
  }
  // mid = p q with |p| = r; canon = q p; w = conj^-1 (p q) conj = (p^-1 to the
  // left...) => canon = p^-1 mid p, so total conjugator is p * conj reversed
  // appropriately: w = conj^-1 mid conj and mid = p canon p^-1.
  Word p(std::vector<Letter>(mid.begin(), mid.begin() + static_cast<long>(r)));
  Word c_rev;  // conj as stored is prefix letters in order removed: w = c^-1 mid c with
  // c = reverse(conj)? Check: removing x from front/back: w = x m x^-1, so
  // w = conj_0 (..) conj_0^-1; iterating: w = conj_0 conj_1 ... mid ... conj_1^-1 conj_0^-1.
  // Hence w = u mid u^-1 with u = conj_0 conj_1 ...; we return conjugator t with
  // t^-1 canon t = w: w = u p canon p^-1 u^-1 => t = (u p)^-1.
  std::vector<Letter> u = conj;
  Word up = concat(Word(std::move(u)), p);
  return {canon, up.inverse()};
}

Word parse_word(const std::string& text, const Basis& basis) {
  std::vector<Letter> raw;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    Letter x;
    if (c >= 'a' && c <= 'z')
      x = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z')
      x = -(c - 'A' + 1);
    else
      throw input_error(std::string("bad word character: ") + c);
    if (!basis.contains(x)) throw input_error(std::string("letter out of rank: ") + c);
    raw.push_back(x);
  }
  return reduce(raw);
}

CyclicWord parse_cyclic_word(const std::string& text, const Basis& basis) {
  return cyclic_reduce(parse_word(text, basis)).first;
}

std::string to_string(const Word& w) {
  std::string s;
  for (Letter x : w.ls) s += static_cast<char>(x > 0 ? 'a' + x - 1 : 'A' - x - 1);
  return s;
}

std::string to_string(const CyclicWord& w) {
  std::string s;
  for (Letter x : w.ls) s += static_cast<char>(x > 0 ? 'a' + x - 1 : 'A' - x - 1);
  return s;
}

WhiteheadAutomorphism WhiteheadAutomorphism::identity(const Basis& b) {
  std::vector<Letter> images;
  for (int i = 1; i <= b.rank; ++i) images.push_back(i);
  return permutation(b, std::move(images));
}

WhiteheadAutomorphism WhiteheadAutomorphism::permutation(const Basis& b,
                                                         std::vector<Letter> images) {
  if (static_cast<int>(images.size()) != b.rank)
    throw input_error("permutation image count != rank");
  std::vector<bool> seen(b.rank + 1, false);
  for (Letter x : images) {
    if (!b.contains(x)) throw input_error("permutation image out of rank");
    if (seen[std::abs(x)]) throw input_error("permutation not a bijection");
    seen[std::abs(x)] = true;
  }
  WhiteheadAutomorphism a;
  a.kind = Kind::Permutation;
  a.perm = std::move(images);
  return a;
}

WhiteheadAutomorphism WhiteheadAutomorphism::cut_vertex(const Basis& b, Letter multiplier,
                                                        std::set<Letter> moved) {
  if (!b.contains(multiplier)) throw input_error("multiplier out of rank");
  if (!moved.count(multiplier)) throw input_error("moved set must contain the multiplier");
  if (moved.count(-multiplier)) throw input_error("moved set contains the multiplier inverse");
  for (Letter x : moved)
    if (!b.contains(x)) throw input_error("moved letter out of rank");
  WhiteheadAutomorphism a;
  a.kind = Kind::CutVertex;
  a.multiplier = multiplier;
  a.moved = std::move(moved);
  return a;
}

Word WhiteheadAutomorphism::image_of(Letter x) const {
  if (kind == Kind::Permutation) {
    Letter img = x > 0 ? perm[x - 1] : -perm[-x - 1];
    return Word({img});
  }
  if (x == multiplier || x == -multiplier) return Word({x});
  bool right = moved.count(x) > 0;        // x -> x m
  bool left = moved.count(-x) > 0;        // x -> m^-1 x
  std::vector<Letter> out;
  if (left) out.push_back(-multiplier);
  out.push_back(x);
  if (right) out.push_back(multiplier);
  return reduce(out);
}

Word apply_automorphism(const WhiteheadAutomorphism& phi, const Word& w) {
  std::vector<Letter> raw;
  for (Letter x : w.ls) {
    Word img = phi.image_of(x);
    raw.insert(raw.end(), img.ls.begin(), img.ls.end());
  }
  return reduce(raw);
}

CyclicWord apply_automorphism(const WhiteheadAutomorphism& phi, const CyclicWord& w) {
  std::vector<Letter> raw;
  for (Letter x : w.ls) {
    Word img = phi.image_of(x);
    raw.insert(raw.end(), img.ls.begin(), img.ls.end());
  }
  return cyclic_reduce(reduce(raw)).first;
}

WhiteheadAutomorphism WhiteheadAutomorphism::inverse(const Basis& b) const {
  if (kind == Kind::Permutation) {
    std::vector<Letter> inv(b.rank, 0);
    for (int i = 1; i <= b.rank; ++i) {
      Letter img = perm[i - 1];
      inv[std::abs(img) - 1] = img > 0 ? i : -i;
    }
    return permutation(b, std::move(inv));
  }
  // (S, m)^-1 = ((S \ {m}) + {m^-1}, m^-1).
  std::set<Letter> inv_moved;
  inv_moved.insert(-multiplier);
  for (Letter y : moved)
    if (y != multiplier) inv_moved.insert(y);
  return cut_vertex(b, -multiplier, std::move(inv_moved));
}

std::string WhiteheadAutomorphism::encode() const {
  std::string s;
  if (kind == Kind::Permutation) {
    s = "P:";
    for (Letter x : perm) {
      s += std::to_string(x);
      s += ',';
    }
    return s;
  }
  s = "W:" + std::to_string(multiplier) + ":";
  for (Letter x : moved) {
    s += std::to_string(x);
    s += ',';
  }
  return s;
}

std::vector<WhiteheadAutomorphism> all_cut_vertex_automorphisms(const Basis& b) {
  std::vector<WhiteheadAutomorphism> out;
  std::vector<Letter> letters = b.letters();
  for (Letter m : letters) {
    std::vector<Letter> others;
    for (Letter x : letters)
      if (x != m && x != -m) others.push_back(x);
    std::uint32_t count = 1u << others.size();
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      std::set<Letter> moved{m};
      for (std::size_t i = 0; i < others.size(); ++i)
        if (mask & (1u << i)) moved.insert(others[i]);
      out.push_back(WhiteheadAutomorphism::cut_vertex(b, m, std::move(moved)));
    }
  }
  return out;
}

Word FreeGroupMap::apply(const Word& w) const {
  std::vector<Letter> raw;
  for (Letter x : w.ls) {
    const Word& img = images[std::abs(x) - 1];
    if (x > 0)
      raw.insert(raw.end(), img.ls.begin(), img.ls.end());
    else {
      Word inv = img.inverse();
      raw.insert(raw.end(), inv.ls.begin(), inv.ls.end());
    }
  }
  return reduce(raw);
}

CyclicWord FreeGroupMap::apply(const CyclicWord& w) const {
  return cyclic_reduce(apply(Word(w.ls))).first;
}

FreeGroupMap FreeGroupMap::identity(int rank) {
  FreeGroupMap m;
  m.rank = rank;
  for (int i = 1; i <= rank; ++i) m.images.push_back(Word({i}));
  return m;
}

FreeGroupMap FreeGroupMap::of(const Basis& b, const WhiteheadAutomorphism& phi) {
  FreeGroupMap m;
  m.rank = b.rank;
  for (int i = 1; i <= b.rank; ++i) m.images.push_back(phi.image_of(i));
  return m;
}

FreeGroupMap FreeGroupMap::compose(const FreeGroupMap& other) const {
  FreeGroupMap m;
  m.rank = rank;
  for (const Word& w : other.images) m.images.push_back(apply(w));
  return m;
}

}  // namespace osk
