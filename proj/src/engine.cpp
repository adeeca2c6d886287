#include "ncgb/engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <set>
#include <tuple>

namespace ncgb {

namespace {

using PolyRefs = std::vector<const Polynomial*>;

Polynomial normal_form_refs(const Ring& ring, const Polynomial& f, const PolyRefs& G, bool tail_reduce) {
  Polynomial h = f;
  std::vector<Term> done;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const Polynomial* g : G) {
      const std::size_t pos = h.lm().find(g->lm());
      if (pos == std::string::npos) continue;
      auto q = reduce_quotient(ring.domain, h.lc(), g->lc());
      if (!q) continue;
      Word left = h.lm().sub(0, pos), right = h.lm().sub(pos + g->lm().size());
      h = sub_multiple(ring, std::move(h), q->a, left, *g, right);
      reduced = true;
      break;
    }
    if (reduced) continue;
    if (!tail_reduce) return h;
    done.push_back(h.leading_term());
    h = tail(std::move(h));
  }
  return Polynomial::from_sorted(std::move(done));
}

PolyRefs refs_of(std::span<const Polynomial> G) {
  PolyRefs out;
  for (const auto& g : G)
    if (!g.is_zero()) out.push_back(&g);
  return out;
}

bool lt_divides(const Ring& ring, const Polynomial& g, const Polynomial& f) {
  return f.lm().contains(g.lm()) && ring.domain.divides(g.lc(), f.lc());
}

bool chain_common(const Ring& ring, const Polynomial& f, const Polynomial& g, const Polynomial& h,
                  const Word& T, std::size_t pos_g, std::size_t pos_h, bool use_lcm) {
  const Word& u = f.lm();
  if (u.empty() || g.lm().empty() || h.lm().empty()) return false;
  if (!ring.domain.is_field()) {
    Coefficient target = use_lcm ? lcm_coeff(ring.domain, g.lc(), h.lc()) : ext_gcd(ring.domain, g.lc(), h.lc()).g;
    if (!ring.domain.divides(f.lc(), target)) return false;
  }
  const std::size_t gs = pos_g, ge = pos_g + g.lm().size();
  const std::size_t hs = pos_h, he = pos_h + h.lm().size();
  for (std::size_t p = T.find(u); p != std::string::npos; p = T.find(u, p + 1)) {
    const std::size_t fs = p, fe = p + u.size();
    if (!(fs < ge && gs < fe) || !(fs < he && hs < fe)) continue;
    const std::size_t span_g = std::max(ge, fe) - std::min(gs, fs);
    const std::size_t span_h = std::max(he, fe) - std::min(hs, fs);
    if (span_g < T.size() && span_h < T.size()) return true;
  }
  return false;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// Number of words of length 0..max_len.
std::uint64_t words_up_to(std::size_t n, std::size_t max_len) {
  std::uint64_t total = 0, level = 1;
  for (std::size_t L = 0; L <= max_len; ++L) {
    total = sat_add(total, level);
    level = sat_mul(level, n);
  }
  return total;
}

Polynomial pair_poly(const Ring& ring, const Polynomial& f, const Polynomial& g, PairKind kind,
                     const std::optional<Overlap>& o, const Word& w) {
  Cofactors c = cofactors(ring.domain, f.lc(), g.lc());
  Bimonomial tf, tg;
  if (kind == PairKind::S1 || kind == PairKind::G1) {
    tf = o->tau_u;
    tg = o->tau_v;
  } else {
    tf = Bimonomial{Word(), w * g.lm()};
    tg = Bimonomial{f.lm() * w, Word()};
  }
  if (kind == PairKind::S1 || kind == PairKind::S2) return combine(ring, c.a_f, tf, f, -c.a_g, tg, g);
  return combine(ring, c.b_f, tf, f, c.b_g, tg, g);
}

bool coprime_lcs(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  if (ring.domain.is_field()) return true;
  return ext_gcd(ring.domain, f.lc(), g.lc()).g == 1;
}

struct Entry {
  std::size_t weight = 0;
  std::uint64_t seq = 0;
  std::size_t i = 0, j = 0;
  bool family = false;
  std::size_t len = 0;  // family: length of the connecting words
  PairKind kind = PairKind::S1;
  std::optional<Overlap> overlap;
  Word w;
};

struct Later {
  bool operator()(const Entry& a, const Entry& b) const {
    return std::tie(a.weight, a.seq) > std::tie(b.weight, b.seq);
  }
};

class Engine {
 public:
  Engine(const Ring& ring, std::size_t d, const Options& opts) : ring_(ring), d_(d), opts_(opts) {}

  GBResult run(const std::vector<Polynomial>& gens) {
    std::size_t max_len = 0;
    for (const auto& g : gens) max_len = std::max(max_len, g.max_length());
    if (d_ < max_len) throw InputError("bound too small");
    if (!ring_.domain.is_field() && !ring_.domain.is_integers())
      throw UnsupportedError("direct completion over " + ring_.domain.name() + " is not supported");

    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      insert(g, g.max_length(), true);
      if (unit_) break;
    }
    while (!queue_.empty() && !unit_) {
      Entry e = queue_.top();
      queue_.pop();
      if (!active_[e.i] || !active_[e.j]) continue;
      if (e.family) {
        expand(e);
        continue;
      }
      if (opts_.use_chain && chain_discard(e)) {
        ++result_.stats.pairs_discarded_chain;
        if (opts_.record_discarded)
          result_.discarded.push_back(pair_poly(ring_, elems_[e.i], elems_[e.j], e.kind, e.overlap, e.w));
        continue;
      }
      ++result_.stats.pairs_processed;
      Polynomial p = pair_poly(ring_, elems_[e.i], elems_[e.j], e.kind, e.overlap, e.w);
      insert(std::move(p), e.weight, false);
    }
    return finish();
  }

 private:
  void push(Entry e) {
    e.seq = seq_++;
    queue_.push(std::move(e));
    result_.stats.peak_queue_size = std::max<std::uint64_t>(result_.stats.peak_queue_size, queue_.size());
  }

  PolyRefs active_refs() const {
    PolyRefs out;
    for (std::size_t k = 0; k < elems_.size(); ++k)
      if (active_[k]) out.push_back(&elems_[k]);
    return out;
  }

  void insert(Polynomial first, std::size_t weight, bool generator) {
    std::deque<Polynomial> pending{std::move(first)};
    while (!pending.empty() && !unit_) {
      Polynomial h = normal_form_refs(ring_, pending.front(), active_refs(), false);
      pending.pop_front();
      if (h.is_zero()) {
        ++result_.stats.reductions_to_zero;
        continue;
      }
      h = normalize_leading(ring_, h);
      if (h.lm().empty() && ring_.domain.is_unit(h.lc())) {
        unit_ = true;
        return;
      }
      bool replaced = false;
      for (std::size_t k = 0; k < elems_.size() && !replaced; ++k) {
        if (!active_[k] || elems_[k].lm() != h.lm()) continue;
        auto rep = pair_replacement(ring_, h, elems_[k]);
        active_[k] = false;
        pending.push_back(std::move(rep->second));
        pending.push_back(std::move(rep->first));
        replaced = true;
      }
      if (replaced) continue;

      const std::size_t idx = elems_.size();
      elems_.push_back(h);
      active_.push_back(true);
      ++result_.stats.basis_insertions;
      result_.insertions.push_back(Insertion{weight, h, generator});
      generate_pairs(idx);
      // Elements whose leading term became redundant are reduced again.
      for (std::size_t k = 0; k < idx; ++k) {
        if (active_[k] && lt_divides(ring_, elems_[idx], elems_[k])) {
          active_[k] = false;
          pending.push_back(elems_[k]);
        }
      }
    }
  }

  void record_lcs(const Polynomial& f, const Polynomial& g) {
    if (opts_.record_discarded && ring_.domain.is_integers()) cofactor_lcs_.emplace(f.lc(), g.lc());
  }

  void generate_pairs(std::size_t k) {
    const bool integers = ring_.domain.is_integers();
    for (std::size_t i = 0; i <= k; ++i) {
      if (!active_[i]) continue;
      const Polynomial& f = elems_[i];
      const Polynomial& g = elems_[k];
      record_lcs(f, g);
      const bool need_g = integers && !coeff_criterion(ring_, f, g);
      for (auto& o : placements(f.lm(), g.lm(), i == k)) {
        if (o.t.size() > d_) break;
        ++result_.stats.pairs_created;
        push(Entry{o.t.size(), 0, i, k, false, 0, PairKind::S1, o, Word()});
        if (!integers) continue;
        ++result_.stats.pairs_created;
        if (need_g)
          push(Entry{o.t.size(), 0, i, k, false, 0, PairKind::G1, std::move(o), Word()});
        else
          ++result_.stats.pairs_discarded_coeff;
      }
      if (!integers || f.lm().empty() || g.lm().empty()) continue;
      add_family(i, k);
      if (i != k) add_family(k, i);
    }
  }

  bool need_s2(const Polynomial& f, const Polynomial& g) const {
    return !opts_.use_product || !coprime_lcs(ring_, f, g);
  }

  void add_family(std::size_t i, std::size_t j) {
    const Polynomial& f = elems_[i];
    const Polynomial& g = elems_[j];
    const std::size_t base = f.lm().size() + g.lm().size();
    if (base > d_) return;
    const bool s2 = need_s2(f, g);
    const bool g2 = !coeff_criterion(ring_, f, g);
    if (!s2 && !g2 && !opts_.record_discarded) {
      std::uint64_t n = words_up_to(ring_.alphabet.size(), d_ - base);
      auto& st = result_.stats;
      st.pairs_created = sat_add(st.pairs_created, sat_mul(n, 2));
      st.pairs_discarded_product = sat_add(st.pairs_discarded_product, n);
      st.pairs_discarded_coeff = sat_add(st.pairs_discarded_coeff, n);
      return;
    }
    Entry e;
    e.weight = base;
    e.i = i;
    e.j = j;
    e.family = true;
    e.len = 0;
    push(std::move(e));
  }

  void expand(const Entry& fam) {
    const Polynomial& f = elems_[fam.i];
    const Polynomial& g = elems_[fam.j];
    const bool s2 = need_s2(f, g);
    const bool g2 = !coeff_criterion(ring_, f, g);
    auto& st = result_.stats;
    for (auto& w : words_of_length(ring_.alphabet.size(), fam.len)) {
      st.pairs_created += 2;
      if (s2) {
        push(Entry{fam.weight, 0, fam.i, fam.j, false, 0, PairKind::S2, std::nullopt, w});
      } else {
        ++st.pairs_discarded_product;
        if (opts_.record_discarded)
          result_.discarded.push_back(pair_poly(ring_, f, g, PairKind::S2, std::nullopt, w));
      }
      if (g2)
        push(Entry{fam.weight, 0, fam.i, fam.j, false, 0, PairKind::G2, std::nullopt, std::move(w)});
      else
        ++st.pairs_discarded_coeff;
    }
    if (fam.weight + 1 <= d_) {
      Entry next = fam;
      next.weight += 1;
      next.len += 1;
      push(std::move(next));
    }
  }

  bool chain_discard(const Entry& e) const {
    const Polynomial& g = elems_[e.i];
    const Polynomial& h = elems_[e.j];
    Word T;
    std::size_t pos_g = 0, pos_h = 0;
    if (e.overlap) {
      T = e.overlap->t;
      pos_g = e.overlap->pos_u;
      pos_h = e.overlap->pos_v;
    } else {
      T = concat(g.lm(), e.w, h.lm());
      pos_h = g.lm().size() + e.w.size();
    }
    const bool s_kind = e.kind == PairKind::S1 || e.kind == PairKind::S2;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      if (!active_[k] || k == e.i || k == e.j) continue;
      if (s_kind ? chain_criterion_s(ring_, elems_[k], g, h, T, pos_g, pos_h)
                 : chain_criterion_g(ring_, elems_[k], g, h, T, pos_g, pos_h))
        return true;
    }
    return false;
  }

  GBResult finish() {
    result_.bound = d_;
    if (unit_) {
      result_.basis = {Polynomial::constant(ring_, 1)};
    } else {
      for (std::size_t k = 0; k < elems_.size(); ++k)
        if (active_[k]) result_.basis.push_back(elems_[k]);
      if (opts_.reduce) result_.basis = interreduce(std::move(result_.basis));
    }
    result_.flag = completeness_flag(result_.basis, d_);
    result_.cofactor_lcs.assign(cofactor_lcs_.begin(), cofactor_lcs_.end());
    return std::move(result_);
  }

  std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) const {
    std::vector<Polynomial> kept;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      bool redundant = false;
      for (std::size_t l = 0; l < basis.size() && !redundant; ++l) {
        if (l == k || !lt_divides(ring_, basis[l], basis[k])) continue;
        // Equal leading terms: keep the first copy only.
        redundant = !lt_divides(ring_, basis[k], basis[l]) || l < k;
      }
      if (!redundant) kept.push_back(basis[k]);
    }
    if (!opts_.tail_reduce) return kept;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      PolyRefs others;
      for (std::size_t l = 0; l < kept.size(); ++l)
        if (l != k) others.push_back(&kept[l]);
      Polynomial t = normal_form_refs(ring_, tail(kept[k]), others, true);
      std::vector<Term> terms{kept[k].leading_term()};
      terms.insert(terms.end(), t.terms().begin(), t.terms().end());
      kept[k] = Polynomial::from_sorted(std::move(terms));
    }
    return kept;
  }

  const Ring& ring_;
  std::size_t d_;
  Options opts_;
  std::deque<Polynomial> elems_;
  std::vector<bool> active_;
  std::priority_queue<Entry, std::vector<Entry>, Later> queue_;
  std::uint64_t seq_ = 0;
  bool unit_ = false;
  std::set<std::pair<Coefficient, Coefficient>> cofactor_lcs_;
  GBResult result_;
};

}  // namespace

std::optional<Polynomial> lm_reduce_step(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  const std::size_t pos = f.lm().find(g.lm());
  if (pos == std::string::npos) return std::nullopt;
  auto q = reduce_quotient(ring.domain, f.lc(), g.lc());
  if (!q) return std::nullopt;
  return sub_multiple(ring, f, q->a, f.lm().sub(0, pos), g, f.lm().sub(pos + g.lm().size()));
}

Polynomial normal_form(const Ring& ring, const Polynomial& f, std::span<const Polynomial> G, bool tail_reduce) {
  return normal_form_refs(ring, f, refs_of(G), tail_reduce);
}

bool product_criterion(const Ring& ring, const Polynomial& f, const Polynomial& g, const Word& w) {
  if (!coprime_lcs(ring, f, g)) return false;
  if (!overlaps(f.lm(), g.lm()).empty()) return false;
  const Word left = f.lm() * w;
  for (std::size_t i = 1; i < f.size(); ++i)
    for (std::size_t j = 1; j < g.size(); ++j)
      if (concat(f.terms()[i].word, w, g.lm()) == left * g.terms()[j].word) return false;
  return true;
}

bool chain_criterion_s(const Ring& ring, const Polynomial& f, const Polynomial& g, const Polynomial& h,
                       const Word& T, std::size_t pos_g, std::size_t pos_h) {
  return chain_common(ring, f, g, h, T, pos_g, pos_h, true);
}

bool chain_criterion_g(const Ring& ring, const Polynomial& f, const Polynomial& g, const Polynomial& h,
                       const Word& T, std::size_t pos_g, std::size_t pos_h) {
  return chain_common(ring, f, g, h, T, pos_g, pos_h, false);
}

std::optional<std::pair<Polynomial, Polynomial>> pair_replacement(const Ring& ring, const Polynomial& f,
                                                                  const Polynomial& g) {
  if (f.is_zero() || g.is_zero() || f.lm() != g.lm()) return std::nullopt;
  Overlap o;
  o.t = f.lm();
  o.kind = OverlapCase::UDividesV;
  Polynomial s = pair_poly(ring, f, g, PairKind::S1, o, Word());
  if (ring.domain.is_field()) return std::make_pair(std::move(s), normalize_leading(ring, f));
  return std::make_pair(std::move(s), pair_poly(ring, f, g, PairKind::G1, o, Word()));
}

std::vector<std::pair<std::string, std::uint64_t>> Stats::items() const {
  return {{"pairs_created", pairs_created},
          {"pairs_processed", pairs_processed},
          {"pairs_discarded_product", pairs_discarded_product},
          {"pairs_discarded_chain", pairs_discarded_chain},
          {"pairs_discarded_coeff", pairs_discarded_coeff},
          {"reductions_to_zero", reductions_to_zero},
          {"basis_insertions", basis_insertions},
          {"peak_queue_size", peak_queue_size}};
}

GBResult buchberger(const Ring& ring, const std::vector<Polynomial>& gens, std::size_t d, const Options& opts) {
  return Engine(ring, d, opts).run(gens);
}

Completeness completeness_flag(const std::vector<Polynomial>& basis, std::size_t bound) {
  std::size_t D = 0;
  for (const auto& g : basis) D = std::max(D, g.max_length());
  if (D == 0 || bound + 1 >= 3 * D) return Completeness::ConjecturallyComplete;
  return Completeness::Truncated;
}

std::string to_string(Completeness c) {
  return c == Completeness::ConjecturallyComplete ? "conjecturally-complete" : "truncated";
}

std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t L) {
  std::vector<Word> out;
  if (alphabet_size == 0) {
    if (L == 0) out.emplace_back();
    return out;
  }
  std::string cur(L, '\0');
  while (true) {
    out.emplace_back(cur);
    std::size_t pos = L;
    while (pos > 0) {
      --pos;
      if (static_cast<unsigned char>(cur[pos]) + 1u < alphabet_size) {
        cur[pos] = static_cast<char>(static_cast<unsigned char>(cur[pos]) + 1);
        break;
      }
      cur[pos] = '\0';
      if (pos == 0) return out;
    }
    if (L == 0) return out;
  }
}

std::vector<Word> monomial_basis(const Ring& ring, std::span<const Polynomial> G, std::size_t d) {
  std::vector<Word> lms;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    if (g.lm().empty()) return {};
    lms.push_back(g.lm());
  }
  std::vector<Word> out{Word()};
  std::vector<Word> level{Word()};
  for (std::size_t L = 1; L <= d && !level.empty(); ++L) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (std::size_t a = 0; a < ring.alphabet.size(); ++a) {
        Word v = w;
        v.push_back(static_cast<int>(a));
        bool ok = true;
        for (const auto& m : lms) {
          if (m.size() <= v.size() && v.sub(v.size() - m.size()) == m) {
            ok = false;
            break;
          }
        }
        if (ok) next.push_back(std::move(v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return ring.compare(a, b) < 0; });
  return out;
}

bool gb_equivalent(const Ring& ring, std::span<const Polynomial> G1, std::span<const Polynomial> G2,
                   std::size_t d) {
  auto covered = [&](std::span<const Polynomial> A, std::span<const Polynomial> B) {
    PolyRefs refs = refs_of(B);
    for (const auto& f : A) {
      if (f.is_zero()) continue;
      if (!normal_form_refs(ring, f, refs, false).is_zero()) return false;
      if (f.lm().size() > d) continue;
      bool divisible = false;
      for (const auto* g : refs) divisible = divisible || lt_divides(ring, *g, f);
      if (!divisible) return false;
    }
    return true;
  };
  return covered(G1, G2) && covered(G2, G1);
}

std::vector<Polynomial> verify_pairs(const Ring& ring, std::span<const Polynomial> G, std::size_t d) {
  std::vector<Polynomial> failures;
  PolyRefs refs = refs_of(G);
  const bool integers = ring.domain.is_integers();
  auto check = [&](const Polynomial& f, const Polynomial& g, PairKind kind, const std::optional<Overlap>& o,
                   const Word& w) {
    Polynomial p = normal_form_refs(ring, pair_poly(ring, f, g, kind, o, w), refs, false);
    if (!p.is_zero()) failures.push_back(std::move(p));
  };
  for (std::size_t i = 0; i < refs.size(); ++i) {
    for (std::size_t j = 0; j < refs.size(); ++j) {
      const Polynomial& f = *refs[i];
      const Polynomial& g = *refs[j];
      const bool with_g = integers && !coeff_criterion(ring, f, g);
      if (i <= j) {
        for (const auto& o : placements(f.lm(), g.lm(), i == j)) {
          if (o.t.size() > d) break;
          check(f, g, PairKind::S1, o, Word());
          if (with_g) check(f, g, PairKind::G1, o, Word());
        }
      }
      if (f.lm().empty() || g.lm().empty()) continue;
      const std::size_t base = f.lm().size() + g.lm().size();
      for (std::size_t L = 0; base + L <= d; ++L) {
        for (const auto& w : words_of_length(ring.alphabet.size(), L)) {
          check(f, g, PairKind::S2, std::nullopt, w);
          if (with_g) check(f, g, PairKind::G2, std::nullopt, w);
        }
      }
    }
  }
  return failures;
}

}  // namespace ncgb
