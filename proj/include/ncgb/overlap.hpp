#pragma once

#include "ncgb/freealg.hpp"

#include <optional>
#include <vector>

namespace ncgb {

/// Which of the four overlap shapes a placement has:
/// u t1 = t2 v, t1 u = v t2, t1 u t2 = v, u = t1 v t2.
enum class OverlapCase { LeftRight = 1, RightLeft = 2, UDividesV = 3, VDividesU = 4 };

/// A minimal common multiple t of two words together with the embeddings
/// tau_u(u) = t = tau_v(v). pos_u / pos_v are the offsets of u and v in t.
struct Overlap {
  Word t;
  Bimonomial tau_u;
  Bimonomial tau_v;
  OverlapCase kind = OverlapCase::LeftRight;
  std::size_t pos_u = 0;
  std::size_t pos_v = 0;
};

/// All (l, r) with l u r = v, leftmost first.
std::vector<Bimonomial> divides_word(const Word& u, const Word& v);

/// Minimal nontrivial overlaps of u and v, ordered by |t|, case, position.
/// For u == v only the proper self-overlaps with u placed first are listed.
std::vector<Overlap> overlaps(const Word& u, const Word& v);

/// Every placement of v against u sharing at least one letter (or one word
/// containing the other). `same_element` drops the identity placement and the
/// mirrored copy of each self-overlap; for two distinct polynomials with equal
/// leading words every placement is kept.
std::vector<Overlap> placements(const Word& u, const Word& v, bool same_element);

/// Coefficient data for S- and G-polynomials:
/// a_f LC(f) = a_g LC(g) = lcm, b_f LC(f) + b_g LC(g) = gcd.
/// Over a field a_f = 1/LC(f), a_g = 1/LC(g) and the G part is unused.
struct Cofactors {
  Coefficient a_f, a_g, b_f, b_g, gcd;
};
Cofactors cofactors(const Domain& domain, const Coefficient& lc_f, const Coefficient& lc_g);

/// Over Z: true iff one leading coefficient divides the other, in which case
/// the G-polynomials of the pair are redundant. Always true over a field.
bool coeff_criterion(const Ring& ring, const Polynomial& f, const Polynomial& g);

struct Provenance {
  int type = 1;  // 1: overlap, 2: connecting word
  std::optional<Overlap> overlap;
  Word w;
};

struct SGResult {
  Polynomial spoly;
  std::optional<Polynomial> gpoly;
  Provenance provenance;
};

/// a_f tau_f f - a_g tau_g g and b_f tau_f f + b_g tau_g g for an overlap of
/// LM(f), LM(g). The G-polynomial is only formed over Z when the coefficient
/// criterion does not already make it redundant.
SGResult spoly1(const Ring& ring, const Polynomial& f, const Polynomial& g, const Overlap& o);

/// a_f f w LM(g) - a_g LM(f) w g and b_f f w LM(g) + b_g LM(f) w g.
SGResult spoly2(const Ring& ring, const Polynomial& f, const Polynomial& g, const Word& w);

}  // namespace ncgb
