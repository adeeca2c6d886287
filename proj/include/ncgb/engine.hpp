#pragma once

#include "ncgb/overlap.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ncgb {

/// One step f - a tau g clearing (or shrinking) the leading term of f, using
/// the leftmost occurrence of LM(g) in LM(f).
std::optional<Polynomial> lm_reduce_step(const Ring& ring, const Polynomial& f, const Polynomial& g);

/// Iterated lm-reduction. The reducer is always the first applicable element
/// of G. With tail_reduce the remaining terms are reduced as well.
Polynomial normal_form(const Ring& ring, const Polynomial& f, std::span<const Polynomial> G,
                       bool tail_reduce = false);

/// Product criterion for the second-type pair (f, g, w) as stated for a
/// single connecting word: coprime leading coefficients, no overlap of the
/// leading words, and no coincidence between f's tail words and g's tail
/// words across w.
bool product_criterion(const Ring& ring, const Polynomial& f, const Polynomial& g, const Word& w);

/// Chain criteria for the pair (g, h) with common multiple T, where LM(g)
/// sits at pos_g and LM(h) at pos_h inside T, and f is a candidate whose
/// pairs with g and with h have been formed. True if some placement of LM(f)
/// inside T meets both LM(g) and LM(h), both partial overlaps are strictly
/// shorter than T, and LC(f) divides lcm (S) or gcd (G) of LC(g), LC(h).
bool chain_criterion_s(const Ring& ring, const Polynomial& f, const Polynomial& g, const Polynomial& h,
                       const Word& T, std::size_t pos_g, std::size_t pos_h);
bool chain_criterion_g(const Ring& ring, const Polynomial& f, const Polynomial& g, const Polynomial& h,
                       const Word& T, std::size_t pos_g, std::size_t pos_h);

/// For LM(f) = LM(g) over Z: the unimodular pair (spoly, gpoly) that can
/// replace {f, g}. Empty if the leading words differ.
std::optional<std::pair<Polynomial, Polynomial>> pair_replacement(const Ring& ring, const Polynomial& f,
                                                                  const Polynomial& g);

enum class PairKind { S1, G1, S2, G2 };

struct CriticalPair {
  std::size_t i = 0, j = 0;
  PairKind kind = PairKind::S1;
  std::optional<Overlap> overlap;  // S1, G1
  Word w;                          // S2, G2
  std::size_t weight = 0;
};

struct Stats {
  std::uint64_t pairs_created = 0;
  std::uint64_t pairs_discarded_product = 0;
  std::uint64_t pairs_discarded_chain = 0;
  std::uint64_t pairs_discarded_coeff = 0;
  std::uint64_t pairs_processed = 0;
  std::uint64_t reductions_to_zero = 0;
  std::uint64_t basis_insertions = 0;
  std::uint64_t peak_queue_size = 0;

  /// key=value pairs in a fixed order.
  std::vector<std::pair<std::string, std::uint64_t>> items() const;
};

struct Options {
  bool reduce = true;       // drop LT-redundant elements from the output
  bool tail_reduce = true;  // tail-reduce the output
  bool use_chain = true;
  bool use_product = true;
  /// Test mode: keep every polynomial skipped by the product or chain
  /// criterion and every leading-coefficient pair fed to the cofactors.
  bool record_discarded = false;
};

enum class Completeness { ConjecturallyComplete, Truncated };

struct Insertion {
  std::size_t weight = 0;
  Polynomial poly;
  bool generator = false;
};

struct GBResult {
  std::vector<Polynomial> basis;
  std::size_t bound = 0;
  Completeness flag = Completeness::Truncated;
  Stats stats;
  /// Every element entering the basis, with the pair weight that produced it
  /// (generators carry their own length).
  std::vector<Insertion> insertions;
  std::vector<Polynomial> discarded;                              // test mode
  std::vector<std::pair<Coefficient, Coefficient>> cofactor_lcs;  // test mode
};

/// Two-sided strong Groebner basis of the ideal generated by `gens`, with all
/// critical pairs of weight <= d processed. Works over Z and over fields.
GBResult buchberger(const Ring& ring, const std::vector<Polynomial>& gens, std::size_t d,
                    const Options& opts = {});

/// Heuristic: a basis of maximal length D is flagged as conjecturally
/// complete once every pair up to weight 3D - 1 has been processed.
Completeness completeness_flag(const std::vector<Polynomial>& basis, std::size_t bound);
std::string to_string(Completeness c);

/// Words of length <= d avoiding every leading word of G, ascending.
std::vector<Word> monomial_basis(const Ring& ring, std::span<const Polynomial> G, std::size_t d);

/// Mutual reduction to zero plus equal leading-term ideals up to length d.
bool gb_equivalent(const Ring& ring, std::span<const Polynomial> G1, std::span<const Polynomial> G2,
                   std::size_t d);

/// Every first- and second-type S- and G-polynomial of G with weight <= d,
/// reduced against G; returns the ones with nonzero normal form.
std::vector<Polynomial> verify_pairs(const Ring& ring, std::span<const Polynomial> G, std::size_t d);

/// All words of length exactly L, in ascending letter-index order.
std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t L);

}  // namespace ncgb
