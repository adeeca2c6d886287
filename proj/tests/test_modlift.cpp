#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncgb/modlift.hpp"
#include "support.hpp"

#include <set>

using namespace ncgb;
using test::P;
using test::Ps;

namespace {

std::set<std::string> rendered(const Ring& r, const std::vector<Polynomial>& G) {
  std::set<std::string> out;
  for (const auto& g : G) out.insert(to_string(r, g));
  return out;
}

}  // namespace

TEST_CASE("modulus plans") {
  ModulusPlan p = plan_modulus(6);
  REQUIRE(p.factors.size() == 2);
  CHECK(p.factors[0] == 2);
  CHECK(p.factors[1] == 3);
  REQUIRE(p.splits.size() == 1);
  CHECK(p.splits[0].a == 2);
  CHECK(p.splits[0].b == 3);
  CHECK(p.splits[0].r == -1);
  CHECK(p.splits[0].s == 1);

  p = plan_modulus(30);
  CHECK(p.factors == std::vector<mpz_class>{2, 3, 5});
  CHECK(p.splits.size() == 2);
  for (const auto& s : p.splits) CHECK(s.a * s.r + s.b * s.s == 1);

  p = plan_modulus(7);
  CHECK(p.factors == std::vector<mpz_class>{7});
  CHECK(p.splits.empty());

  CHECK_THROWS_WITH_AS(plan_modulus(4), doctest::Contains("prime-power moduli unsupported"), UnsupportedError);
  CHECK_THROWS_WITH_AS(plan_modulus(12), doctest::Contains("prime-power moduli unsupported"), UnsupportedError);
  CHECK_THROWS_AS(plan_modulus(1), InputError);
}

TEST_CASE("bases modulo a prime") {
  Ring r = test::ring_of("ring Z <x,y> deglex(x>y)");
  auto G = gb_mod_prime(r, Ps(r, "2*x, 3*y"), 2, 3);
  Ring r2 = r.with_domain(Domain::residue(2));
  CHECK(rendered(r2, G) == std::set<std::string>{"y"});
  G = gb_mod_prime(r, Ps(r, "2*x, 3*y"), 3, 3);
  Ring r3 = r.with_domain(Domain::residue(3));
  CHECK(rendered(r3, G) == std::set<std::string>{"x"});
  CHECK(gb_mod_prime(r, Ps(r, "6*x"), 3, 2).empty());
  CHECK_THROWS_AS(gb_mod_prime(r, Ps(r, "x"), 6, 2), InputError);
}

TEST_CASE("ideals over Z/6") {
  Ring r = test::ring_of("ring Zmod 6 <x,y> deglex(x>y)");
  GBResult res = gb_zmod(r, Ps(r, "2"), 2);
  CHECK(rendered(r, res.basis) == std::set<std::string>{"2"});

  res = gb_zmod(r, Ps(r, "3*x, 2*y"), 2);
  CHECK(rendered(r, res.basis) == std::set<std::string>{"3*x", "2*y", "x*y", "y*x"});

  res = gb_zmod(r, Ps(r, "5*x + 1"), 2);  // 5 is a unit
  CHECK(rendered(r, res.basis) == std::set<std::string>{"x + 5"});

  res = gb_zmod(r, Ps(r, "2, 3"), 2);
  CHECK(rendered(r, res.basis) == std::set<std::string>{"1"});
}

TEST_CASE("lift_combine recovers elements zero on one side") {
  Ring r = test::ring_of("ring Zmod 6 <x,y> deglex(x>y)");
  Split s{2, 3, -1, 1};
  std::vector<Polynomial> Ga{P(r, "x"), P(r, "2")}, Gb{P(r, "y"), P(r, "3")};
  auto F = interreduce_residue(r, lift_combine(r, Ga, Gb, s, 2), false);
  std::vector<Polynomial> expected = Ps(r, "3*x, 2*y, x*y, y*x");
  for (const auto& e : expected) CHECK(normal_form(r, e, F).is_zero());
  for (const auto& f : F) CHECK(normal_form(r, f, expected).is_zero());
}

TEST_CASE("interreduce_residue keeps an antichain") {
  Ring r = test::ring_of("ring Zmod 6 <x,y> deglex(x>y)");
  auto G = interreduce_residue(r, Ps(r, "5*x, 2*x*y, 3*y, 4*y*x + y"), false);
  CHECK(rendered(r, G) == std::set<std::string>{"x", "3*y"});
  G = interreduce_residue(r, Ps(r, "2*x + 3*y, 5*y"), true);
  CHECK(rendered(r, G) == std::set<std::string>{"2*x", "y"});
  G = interreduce_residue(r, Ps(r, "2*x + 3*y, 5*y"), false);
  CHECK(rendered(r, G) == std::set<std::string>{"2*x + 3*y", "y"});
}

TEST_CASE("direct runs over composite residues are refused") {
  Ring r = test::ring_of("ring Zmod 6 <x,y> deglex(x>y)");
  CHECK_THROWS_AS(buchberger(r, Ps(r, "2*x"), 2), UnsupportedError);
  Ring r4 = r.with_domain(Domain::residue(4));
  CHECK_THROWS_WITH_AS(gb_zmod(r4, Ps(r4, "2*x"), 2), doctest::Contains("prime-power moduli unsupported"),
                       UnsupportedError);
}
