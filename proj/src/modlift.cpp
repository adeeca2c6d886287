#include "ncgb/modlift.hpp"

#include <algorithm>
#include <span>

namespace ncgb {

namespace {

mpz_class product(std::span<const mpz_class> factors) {
  mpz_class p = 1;
  for (const auto& f : factors) p *= f;
  return p;
}

void build_splits(std::span<const mpz_class> factors, std::vector<Split>& out) {
  if (factors.size() < 2) return;
  const std::size_t mid = factors.size() / 2;
  Split s;
  s.a = product(factors.first(mid));
  s.b = product(factors.subspan(mid));
  ExtGcd e = ext_gcd(Domain::integers(), Coefficient(s.a), Coefficient(s.b));
  s.r = e.s.get_num();
  s.s = e.t.get_num();
  if (s.a * s.r + s.b * s.s != 1) throw InputError("Bezout identity failed for " + s.a.get_str() + ", " + s.b.get_str());
  out.push_back(s);
  build_splits(factors.first(mid), out);
  build_splits(factors.subspan(mid), out);
}

// Leading-term order used for one-pass interreduction: shorter leading words
// first, then by the monomial ordering, then by the (divisor) coefficient.
bool lt_before(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  if (f.lm().size() != g.lm().size()) return f.lm().size() < g.lm().size();
  auto c = ring.compare(f.lm(), g.lm());
  if (c != 0) return c < 0;
  return f.lc() < g.lc();
}

Polynomial lift(const Ring& target, const Polynomial& f) { return change_domain(target, f); }

struct Solver {
  const Ring& ring;
  const std::vector<Polynomial>& gens;
  std::size_t d;
  Options opts;
  Stats stats;

  // Strong basis over Z/(prod factors), without the modulus constant.
  std::vector<Polynomial> solve(std::span<const mpz_class> factors) {
    if (factors.size() == 1) {
      Ring rp = ring.with_domain(Domain::residue(factors[0]));
      std::vector<Polynomial> gp;
      for (const auto& g : gens) {
        Polynomial h = change_domain(rp, g);
        if (!h.is_zero()) gp.push_back(std::move(h));
      }
      if (gp.empty()) return {};
      Options leaf = opts;
      leaf.reduce = true;
      GBResult r = buchberger(rp, gp, d, leaf);
      accumulate(r.stats);
      return r.basis;
    }
    const std::size_t mid = factors.size() / 2;
    auto left = factors.first(mid);
    auto right = factors.subspan(mid);
    Split s;
    s.a = product(left);
    s.b = product(right);
    ExtGcd e = ext_gcd(Domain::integers(), Coefficient(s.a), Coefficient(s.b));
    s.r = e.s.get_num();
    s.s = e.t.get_num();
    Ring rab = ring.with_domain(Domain::residue(s.a * s.b));
    std::vector<Polynomial> Ga, Gb;
    for (auto& g : solve(left)) Ga.push_back(lift(rab, g));
    for (auto& g : solve(right)) Gb.push_back(lift(rab, g));
    Ga.push_back(Polynomial::constant(rab, Coefficient(s.a)));
    Gb.push_back(Polynomial::constant(rab, Coefficient(s.b)));
    return interreduce_residue(rab, lift_combine(rab, Ga, Gb, s, d), false);
  }

  void accumulate(const Stats& s) {
    stats.pairs_created += s.pairs_created;
    stats.pairs_processed += s.pairs_processed;
    stats.pairs_discarded_product += s.pairs_discarded_product;
    stats.pairs_discarded_chain += s.pairs_discarded_chain;
    stats.pairs_discarded_coeff += s.pairs_discarded_coeff;
    stats.reductions_to_zero += s.reductions_to_zero;
    stats.basis_insertions += s.basis_insertions;
    stats.peak_queue_size = std::max(stats.peak_queue_size, s.peak_queue_size);
  }
};

}  // namespace

ModulusPlan plan_modulus(const mpz_class& m) {
  if (m < 2) throw InputError("modulus must be at least 2");
  ModulusPlan plan;
  plan.m = m;
  mpz_class rest = m;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0) throw UnsupportedError("prime-power moduli unsupported");
    plan.factors.push_back(p);
    if (p > 1000000) throw UnsupportedError("modulus too large to factor");
  }
  if (rest > 1) {
    if (mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0) throw UnsupportedError("modulus too large to factor");
    plan.factors.push_back(rest);
  }
  build_splits(plan.factors, plan.splits);
  return plan;
}

std::vector<Polynomial> gb_mod_prime(const Ring& ring, const std::vector<Polynomial>& gens, const mpz_class& p,
                                     std::size_t d, const Options& opts) {
  if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw InputError(p.get_str() + " is not prime");
  Ring rp = ring.with_domain(Domain::residue(p));
  std::vector<Polynomial> gp;
  for (const auto& g : gens) {
    Polynomial h = change_domain(rp, g);
    if (!h.is_zero()) gp.push_back(std::move(h));
  }
  if (gp.empty()) return {};
  Options o = opts;
  o.reduce = true;
  return buchberger(rp, gp, d, o).basis;
}

std::vector<Polynomial> lift_combine(const Ring& ring_ab, const std::vector<Polynomial>& Ga,
                                     const std::vector<Polynomial>& Gb, const Split& split, std::size_t d) {
  const Domain& dom = ring_ab.domain;
  const Coefficient ar(split.a * split.r), bs(split.b * split.s);
  for (const auto& g : Ga)
    if (!g.is_zero() && !mpz_divisible_p(split.a.get_mpz_t(), g.lc().get_num().get_mpz_t()))
      throw InputError("leading coefficient " + g.lc().get_str() + " does not divide " + split.a.get_str());
  for (const auto& g : Gb)
    if (!g.is_zero() && !mpz_divisible_p(split.b.get_mpz_t(), g.lc().get_num().get_mpz_t()))
      throw InputError("leading coefficient " + g.lc().get_str() + " does not divide " + split.b.get_str());

  std::vector<Polynomial> out;
  auto emit = [&](const Polynomial& ga, const Bimonomial& ta, const Polynomial& gb, const Bimonomial& tb) {
    Polynomial f = combine(ring_ab, bs * gb.lc(), ta, ga, ar * ga.lc(), tb, gb);
    if (!f.is_zero()) out.push_back(std::move(f));
  };
  for (const auto& ga : Ga) {
    for (const auto& gb : Gb) {
      if (ga.is_zero() || gb.is_zero()) continue;
      if (dom.canonical(ga.lc() * gb.lc()) == 0) continue;
      for (const auto& o : placements(ga.lm(), gb.lm(), false)) {
        if (o.t.size() > d) break;
        emit(ga, o.tau_u, gb, o.tau_v);
      }
      if (ga.lm().empty() || gb.lm().empty()) continue;
      const std::size_t base = ga.lm().size() + gb.lm().size();
      for (std::size_t L = 0; base + L <= d; ++L) {
        for (const auto& w : words_of_length(ring_ab.alphabet.size(), L)) {
          emit(ga, Bimonomial{Word(), w * gb.lm()}, gb, Bimonomial{ga.lm() * w, Word()});
          emit(ga, Bimonomial{gb.lm() * w, Word()}, gb, Bimonomial{Word(), w * ga.lm()});
        }
      }
    }
  }
  return out;
}

std::vector<Polynomial> interreduce_residue(const Ring& ring, std::vector<Polynomial> G, bool tail_reduce) {
  std::vector<Polynomial> cand;
  for (auto& g : G) {
    Polynomial h = normalize_leading(ring, g);
    if (!h.is_zero()) cand.push_back(std::move(h));
  }
  std::stable_sort(cand.begin(), cand.end(),
                   [&](const Polynomial& f, const Polynomial& g) { return lt_before(ring, f, g); });
  std::vector<Polynomial> kept;
  for (auto& f : cand) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (f.lm().contains(k.lm()) && ring.domain.divides(k.lc(), f.lc())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(f));
  }
  if (!tail_reduce) return kept;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < kept.size(); ++l)
      if (l != k) others.push_back(kept[l]);
    Polynomial t = normal_form(ring, tail(kept[k]), others, true);
    std::vector<Term> terms{kept[k].leading_term()};
    terms.insert(terms.end(), t.terms().begin(), t.terms().end());
    kept[k] = Polynomial::from_sorted(std::move(terms));
  }
  return kept;
}

GBResult gb_zmod(const Ring& ring, const std::vector<Polynomial>& gens, std::size_t d, const Options& opts) {
  if (ring.domain.kind() != DomainKind::Residue) throw InputError("gb_zmod needs a residue ring");
  std::size_t max_len = 0;
  for (const auto& g : gens) max_len = std::max(max_len, g.max_length());
  if (d < max_len) throw InputError("bound too small");
  ModulusPlan plan = plan_modulus(ring.domain.modulus());
  if (plan.factors.size() == 1) return buchberger(ring, gens, d, opts);

  Solver solver{ring, gens, d, opts, {}};
  GBResult r;
  r.basis = solver.solve(plan.factors);
  if (opts.tail_reduce) r.basis = interreduce_residue(ring, std::move(r.basis), true);
  bool unit = std::any_of(r.basis.begin(), r.basis.end(),
                          [&](const Polynomial& g) { return g.lm().empty() && ring.domain.is_unit(g.lc()); });
  if (unit) r.basis = {Polynomial::constant(ring, 1)};
  r.bound = d;
  r.stats = solver.stats;
  r.flag = completeness_flag(r.basis, d);
  return r;
}

}  // namespace ncgb
