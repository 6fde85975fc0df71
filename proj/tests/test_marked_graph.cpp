#include <random>

#include "doctest.h"
#include "osk/marked_graph.hpp"
#include "test_graphs.hpp"

using namespace osk;
using namespace osk::testing;

TEST_CASE("rose construction and volume") {
  MarkedGraph r = rose(2, {Rat(1, 2), Rat(1, 2)});
  r.validate();
  CHECK(r.volume() == 1);
  CHECK(rose(3, {Rat(1, 3), Rat(1, 3), Rat(1, 3)}).volume() == 1);
  CHECK(rose(2, {Rat(1, 3), Rat(2, 3)}).volume() == 1);
  CHECK_THROWS_AS(rose(2, {Rat(0), Rat(1)}), input_error);

  MarkedGraph r2 = rose(2, {Rat(1), Rat(1)});
  CHECK(r2.volume() == 2);
  MarkedGraph n = normalize(r2);
  CHECK(n.volume() == 1);
  CHECK(n.edges[0].length == Rat(1, 2));
}

TEST_CASE("normalize is idempotent on random roses") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    std::uniform_int_distribution<int> num(1, 9);
    MarkedGraph g = rose(3, {Rat(num(rng)), Rat(num(rng)), Rat(num(rng))});
    CHECK(normalize(g).volume() == 1);
  }
  MarkedGraph t = theta_graph(Rat(1, 4), Rat(1, 4), Rat(1, 2));
  t.validate();
  CHECK(t.volume() == 1);
}

TEST_CASE("realize_loop on the rose") {
  MarkedGraph r = rose(2, {Rat(1, 2), Rat(1, 2)});
  Basis b(2);
  EdgeLoop la = realize_loop(parse_cyclic_word("a", b), r);
  CHECK(la.edges == EdgePath{1});
  CHECK(loop_length(la, r) == Rat(1, 2));

  EdgeLoop lc = realize_loop(parse_cyclic_word("abAB", b), r);
  CHECK(loop_length(lc, r) == 2);
  CHECK(crossing_count(lc, 1) == 2);
  CHECK(crossing_count(lc, 2) == 2);
}

TEST_CASE("realize_loop tightens a multi-edge marking image") {
  MarkedGraph t = theta_graph(Rat(1, 4), Rat(1, 4), Rat(1, 2));
  Basis b(2);
  // a b = (e1 e2^-1)(e2 e3^-1) must tighten to e1 e3^-1.
  EdgeLoop lab = realize_loop(parse_cyclic_word("ab", b), t);
  CHECK(lab.edges.size() == 2);
  CHECK(loop_length(lab, t) == Rat(3, 4));
  // Brute-force homotopy tightening oracle: conjugate words realize to the
  // same immersed loop.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    CyclicWord z = random_class(b, rng, 8);
    Word u = random_word(b, rng, 4);
    Word conj = concat(concat(u, Word(z.ls)), u.inverse());
    if (conj.empty()) continue;
    CyclicWord zc = cyclic_reduce(conj).first;
    CHECK(realize_loop(z, t) == realize_loop(zc, t));
  }
}

TEST_CASE("marking naturality of loop lengths") {
  Basis b(2);
  std::mt19937_64 rng(7);
  MarkedGraph r = rose(2, {Rat(1, 3), Rat(2, 3)});
  auto autos = all_cut_vertex_automorphisms(b);
  std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
  for (int i = 0; i < 40; ++i) {
    const auto& phi = autos[pick(rng)];
    FreeGroupMap f = FreeGroupMap::of(b, phi);
    FreeGroupMap finv = FreeGroupMap::of(b, phi.inverse(b));
    MarkedGraph twisted = twist_marking(r, f, finv);
    twisted.validate();
    CyclicWord z = random_class(b, rng, 6);
    CHECK(loop_length(realize_loop(z, twisted), twisted) ==
          loop_length(realize_loop(f.apply(z), r), r));
  }
}

TEST_CASE("word_of_loop inverts realize_loop") {
  Basis b(2);
  std::mt19937_64 rng(11);
  MarkedGraph t = theta_graph(Rat(1, 4), Rat(1, 4), Rat(1, 2));
  MarkedGraph bb = barbell_graph(Rat(1, 3), Rat(1, 3), Rat(1, 3));
  for (const MarkedGraph& g : {t, bb}) {
    for (int i = 0; i < 40; ++i) {
      CyclicWord z = random_class(b, rng, 8);
      CHECK(g.word_of_loop(realize_loop(z, g)) == z);
    }
  }
}

TEST_CASE("core graphs") {
  Basis b(2);
  MarkedGraph r = rose(2, {Rat(1, 3), Rat(2, 3)});

  CoreGraph ca = core_graph({parse_word("a", b)}, r);
  CHECK(ca.graph.num_vertices == 1);
  CHECK(ca.graph.edges.size() == 1);
  CHECK(ca.volume() == Rat(1, 3));

  CoreGraph cfull = core_graph({parse_word("a", b), parse_word("b", b)}, r);
  CHECK(cfull.graph.num_vertices == 1);
  CHECK(cfull.graph.edges.size() == 2);

  // Index-2 subgroup <a^2, ab>: 2 vertices, 3 edges.
  CoreGraph c2 = core_graph({parse_word("aa", b), parse_word("ab", b)}, r);
  CHECK(c2.graph.num_vertices == 2);
  CHECK(c2.graph.edges.size() == 3);
  CHECK(c2.betti() == 2);

  CHECK_THROWS_AS(core_graph({Word()}, r), input_error);
}

TEST_CASE("core graph independent of generating tuple") {
  Basis b(3);
  MarkedGraph r = rose(3, {Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  CoreGraph c1 = core_graph({parse_word("a", b), parse_word("b", b)}, r);
  CoreGraph c2 = core_graph({parse_word("ab", b), parse_word("b", b), parse_word("ab", b)}, r);
  CHECK(canonical_encoding(c1.graph) == canonical_encoding(c2.graph));
  // core_graph(F, r) is the rose itself
  CoreGraph cf = core_graph({parse_word("a", b), parse_word("b", b), parse_word("c", b)}, r);
  CHECK(cf.graph.num_vertices == 1);
  CHECK(cf.graph.edges.size() == 3);
}

TEST_CASE("injectivity radius") {
  CHECK(injectivity_radius(rose(2, {Rat(1, 2), Rat(1, 2)})) == Rat(1, 2));
  CHECK(injectivity_radius(theta_graph(Rat(1, 4), Rat(1, 4), Rat(1, 2))) == Rat(1, 2));
  CHECK(injectivity_radius(barbell_graph(Rat(1, 3), Rat(1, 3), Rat(1, 3))) == Rat(1, 3));
}

TEST_CASE("collapse_forest") {
  Basis b(2);
  MarkedGraph t = theta_graph(Rat(1, 4), Rat(1, 4), Rat(1, 2));

  // Collapsing one edge of the theta gives a rose.
  MarkedGraph q = collapse_forest(t, {3});
  q.validate();
  CHECK(q.num_vertices == 1);
  CHECK(q.num_edges() == 2);
  // Surviving lengths unchanged, no renormalization.
  CHECK(q.volume() == Rat(1, 2));

  // Classes keep their crossings of surviving edges.
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    CyclicWord z = random_class(b, rng, 6);
    EdgeLoop before = realize_loop(z, t);
    EdgeLoop after = realize_loop(z, q);
    CHECK(crossing_count(before, 1) == crossing_count(after, 1));
    CHECK(crossing_count(before, 2) == crossing_count(after, 2));
  }

  // Collapsing nothing is the identity.
  MarkedGraph same = collapse_forest(t, {});
  CHECK(same.num_edges() == t.num_edges());
  CHECK(same.volume() == t.volume());

  // A cycle is rejected.
  CHECK_THROWS_AS(collapse_forest(t, {1, 2}), input_error);
}

TEST_CASE("blowup splits a rose vertex") {
  Basis b(2);
  MarkedGraph r = rose(2, {Rat(1, 2), Rat(1, 2)});
  MarkedGraph g = blowup(r, 0, {1, -2}, Rat(1, 8));
  g.validate();
  CHECK(g.num_vertices == 2);
  CHECK(g.num_edges() == 3);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    CyclicWord z = random_class(b, rng, 6);
    CHECK(g.word_of_loop(realize_loop(z, g)) == z);
  }
}

TEST_CASE("validate rejects bad graphs") {
  MarkedGraph g = rose(2, {Rat(1, 2), Rat(1, 2)});
  g.marking[1] = {1};  // a and b both marked to the same petal
  g.edge_words_cache.reset();
  CHECK_THROWS_AS(g.validate(), input_error);

  MarkedGraph h = theta_graph(Rat(1, 4), Rat(1, 4), Rat(1, 2));
  h.edges[2].length = 0;
  CHECK_THROWS_AS(h.validate(), input_error);
}
