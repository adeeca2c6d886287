#pragma once

#include "ncgb/engine.hpp"

#include <vector>

namespace ncgb {

/// One node of the split tree: m_node = a * b with a * r + b * s = 1.
struct Split {
  mpz_class a, b, r, s;
};

struct ModulusPlan {
  mpz_class m;
  std::vector<mpz_class> factors;  // distinct primes, ascending
  std::vector<Split> splits;       // pre-order of the balanced split tree
};

/// Factor m and build the split tree. Throws UnsupportedError for moduli
/// with a repeated prime factor.
ModulusPlan plan_modulus(const mpz_class& m);

/// Monic reduced basis of the image of `gens` over Z/pZ. `ring` may be over
/// any domain; the result lives in ring.with_domain(Z/pZ).
std::vector<Polynomial> gb_mod_prime(const Ring& ring, const std::vector<Polynomial>& gens,
                                     const mpz_class& p, std::size_t d, const Options& opts = {});

/// Combine strong bases over Z/aZ and Z/bZ (given as polynomials of
/// `ring_ab`, a ring over Z/abZ, and each containing the constant of its
/// modulus) into a strong basis over Z/abZ up to length d.
std::vector<Polynomial> lift_combine(const Ring& ring_ab, const std::vector<Polynomial>& Ga,
                                     const std::vector<Polynomial>& Gb, const Split& split, std::size_t d);

/// Drop LT-redundant elements and normalize leading coefficients to divisors
/// of the modulus; optionally tail-reduce.
std::vector<Polynomial> interreduce_residue(const Ring& ring, std::vector<Polynomial> G, bool tail_reduce);

/// Strong basis over Z/mZ for squarefree m, up to length d. `ring` must be a
/// residue ring.
GBResult gb_zmod(const Ring& ring, const std::vector<Polynomial>& gens, std::size_t d, const Options& opts = {});

}  // namespace ncgb
