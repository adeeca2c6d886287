#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncgb/freealg.hpp"
#include "support.hpp"

using namespace ncgb;
using test::P;
using test::W;

TEST_CASE("ordering examples") {
  Ring left = test::ring_of("ring Z <x,y> deglex(x>y)");
  Ring right = test::ring_of("ring Z <x,y> degrevlexR(x>y)");
  CHECK(left.compare(W(left, "x"), W(left, "y")) > 0);
  CHECK(left.compare(W(left, "x*y"), W(left, "y*x")) > 0);
  CHECK(right.compare(W(right, "x*y"), W(right, "y*x")) < 0);
  CHECK(left.compare(W(left, "y*y*y"), W(left, "x*x")) > 0);

  Ring weighted = test::ring_of("ring Z <x,q> wdeglex(1,0)(x>q)");
  CHECK(weighted.compare(W(weighted, "x"), W(weighted, "q*q")) > 0);
  CHECK(weighted.compare(W(weighted, "q*x"), W(weighted, "x")) > 0);  // same weight, longer
  CHECK(weighted.compare(W(weighted, "x*q"), W(weighted, "q*x")) > 0);
}

TEST_CASE("ordering is total, length compatible and multiplicative") {
  test::Rng rng(21);
  for (const char* header : {"ring Z <x,y,z> deglex(x>y>z)", "ring Z <x,y,z> degrevlexR(y>x>z)",
                             "ring Z <x,y,z> wdeglex(2,0,1)(z>x>y)"}) {
    Ring r = test::ring_of(header);
    for (int k = 0; k < 1500; ++k) {
      Word u = rng.word(3, 0, 4), v = rng.word(3, 0, 4);
      auto c = r.compare(u, v);
      CHECK((c == 0) == (u == v));
      CHECK(r.compare(v, u) == (0 <=> c));
      if (r.ordering.kind() != OrderKind::WeightedDegThenDegLeftLex) {
        if (c < 0) CHECK(u.size() <= v.size());
      } else if (c < 0) {
        CHECK(r.ordering.weighted_degree(u) <= r.ordering.weighted_degree(v));
      }
      Word a = rng.word(3, 0, 3), b = rng.word(3, 0, 3);
      CHECK(r.compare(concat(a, u, b), concat(a, v, b)) == c);
      Word t = rng.word(3, 0, 4);
      if (c < 0 && r.compare(v, t) < 0) CHECK(r.compare(u, t) < 0);
    }
  }
}

TEST_CASE("finitely many words below a given word") {
  Ring r = test::ring_of("ring Z <x,y,z> deglex(x>y>z)");
  Ring rr = test::ring_of("ring Z <x,y,z> degrevlexR(x>y>z)");
  test::Rng rng(22);
  for (int k = 0; k < 40; ++k) {
    Word v = rng.word(3, 1, 4);
    for (const Ring* ring : {&r, &rr}) {
      std::size_t below = 0, same_len_below = 0;
      for (std::size_t L = 0; L <= v.size(); ++L)
        for (const auto& w : words_of_length(3, L))
          if (ring->compare(w, v) < 0) {
            ++below;
            if (L == v.size()) ++same_len_below;
          }
      std::size_t shorter = 0, pow = 1;
      for (std::size_t L = 0; L < v.size(); ++L, pow *= 3) shorter += pow;
      CHECK(below == shorter + same_len_below);
      // Rank of v within its length class, read as a base-3 number of ranks.
      std::size_t rank = 0;
      const auto& rk = ring->ordering.rank();
      if (ring->ordering.kind() == OrderKind::DegLeftLex)
        for (std::size_t i = 0; i < v.size(); ++i) rank = rank * 3 + static_cast<std::size_t>(rk[v[i]]);
      else
        for (std::size_t i = v.size(); i-- > 0;) rank = rank * 3 + static_cast<std::size_t>(rk[v[i]]);
      CHECK(same_len_below == rank);
    }
  }
}

TEST_CASE("arithmetic examples") {
  Ring r = test::ring_of("ring Z <x,y,z> deglex(x>y>z)");
  Polynomial f = P(r, "3*x + 1");
  CHECK(apply(r, Bimonomial{}, f) == f);
  CHECK(apply(r, Bimonomial{W(r, "x"), W(r, "z")}, P(r, "2*y")) == P(r, "2*x*y*z"));
  CHECK(apply(r, Bimonomial{Word(), W(r, "y*x")}, f) == P(r, "3*x*y*x + y*x"));
  CHECK(add(r, P(r, "2*x"), P(r, "-2*x")).is_zero());
  CHECK(multiply(r, P(r, "x"), P(r, "y")) == P(r, "x*y"));
  CHECK(multiply(r, P(r, "x"), P(r, "y")) != multiply(r, P(r, "y"), P(r, "x")));
  CHECK(scale(r, 3, P(r, "2*x*y")) == P(r, "6*x*y"));
  auto [c, w] = leading(P(r, "2*x*y*x + y"));
  CHECK(c == 2);
  CHECK(w == W(r, "x*y*x"));
  CHECK(tail(P(r, "4*x*y + x")) == P(r, "x"));
  Polynomial g = P(r, "x*y - 3*z + 2");
  CHECK(tail_iter(g, g.size()).is_zero());
  CHECK_THROWS_WITH_AS(leading(Polynomial()), doctest::Contains("zero polynomial"), InputError);
}

TEST_CASE("rendering") {
  Ring r = test::ring_of("ring Z <x,y,z> deglex(x>y>z)");
  CHECK(to_string(r, P(r, "2*x*y^2 - 3*z")) == "2*x*y^2 - 3*z");
  CHECK(to_string(r, P(r, "-x + 1")) == "-x + 1");
  CHECK(to_string(r, Polynomial()) == "0");
  Ring q = test::ring_of("ring Q <x> deglex(x)");
  CHECK(to_string(q, P(q, "3/4*x^2 - 1/2")) == "3/4*x^2 - 1/2");
}

TEST_CASE("ring axioms and leading words against a dictionary model") {
  test::Rng rng(23);
  for (const char* header : {"ring Z <x,y,z> deglex(x>y>z)", "ring Q <x,y> degrevlexR(y>x)"}) {
    Ring r = test::ring_of(header);
    Polynomial one = Polynomial::constant(r, 1);
    for (int k = 0; k < 300; ++k) {
      Polynomial f = rng.poly(r, 4, 3, 5), g = rng.poly(r, 4, 3, 5), h = rng.poly(r, 3, 2, 5);
      CHECK(multiply(r, multiply(r, f, g), h) == multiply(r, f, multiply(r, g, h)));
      CHECK(multiply(r, f, add(r, g, h)) == add(r, multiply(r, f, g), multiply(r, f, h)));
      CHECK(multiply(r, one, f) == f);
      CHECK(multiply(r, f, one) == f);
      CHECK(sub(r, f, f).is_zero());
      // Dictionary model of the product, independent of term ordering.
      CHECK(test::naive(multiply(r, f, g)) == test::naive_mul(test::naive(f), test::naive(g)));
      CHECK(test::naive(add(r, f, g)) == test::naive_add(test::naive(f), test::naive(g)));
      if (!f.is_zero()) CHECK(f.lm().str() == test::naive_lm(r, test::naive(f)));
      if (!f.is_zero() && !g.is_zero()) {
        Polynomial fg = multiply(r, f, g);
        CHECK(fg.lm() == f.lm() * g.lm());
      }
      Word a = rng.word(r.alphabet.size(), 0, 2), b = rng.word(r.alphabet.size(), 0, 2);
      CHECK(sub_multiple(r, f, 3, a, g, b) ==
            sub(r, f, scale(r, 3, apply(r, Bimonomial{a, b}, g))));
    }
  }
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), InputError);
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{"x", "x"}), InputError);
  CHECK_THROWS_AS(Ordering(OrderKind::DegLeftLex, {0, 0}), InputError);
}

TEST_CASE("residue arithmetic drops zero products") {
  Ring r = test::ring_of("ring Zmod 6 <x,y> deglex(x>y)");
  Polynomial f = P(r, "2*x + 3*y");
  CHECK(scale(r, 3, f) == P(r, "3*y"));
  CHECK(scale(r, 6, f).is_zero());
  CHECK(P(r, "7*x - 1") == P(r, "x + 5"));
}
