#include "ncgb/freealg.hpp"

#include <algorithm>
#include <numeric>

namespace ncgb {

Alphabet::Alphabet(std::vector<std::string> names, std::vector<long> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.empty()) throw InputError("alphabet must not be empty");
  if (names_.size() > 255) throw InputError("alphabet too large");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate variable " + names_[i]);
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw InputError("weight count does not match alphabet");
  for (long w : weights_)
    if (w < 0) throw InputError("weights must be non-negative");
}

int Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Word::Word(std::initializer_list<int> letters) {
  for (int l : letters) push_back(l);
}

Ordering::Ordering(OrderKind kind, const std::vector<int>& ranking, std::vector<long> weights)
    : kind_(kind), rank_(ranking.size(), -1), weights_(std::move(weights)) {
  const int n = static_cast<int>(ranking.size());
  for (int pos = 0; pos < n; ++pos) {
    int letter = ranking[pos];
    if (letter < 0 || letter >= n || rank_[letter] != -1)
      throw InputError("variable ranking is not a permutation");
    rank_[letter] = n - 1 - pos;
  }
  if (kind_ == OrderKind::WeightedDegThenDegLeftLex && weights_.size() != rank_.size())
    throw InputError("weighted ordering needs one weight per variable");
}

long Ordering::weighted_degree(const Word& w) const {
  long total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) total += weights_.empty() ? 1 : weights_[w[i]];
  return total;
}

std::strong_ordering Ordering::compare(const Word& u, const Word& v) const {
  if (kind_ == OrderKind::WeightedDegThenDegLeftLex) {
    long wu = weighted_degree(u), wv = weighted_degree(v);
    if (wu != wv) return wu <=> wv;
  }
  if (u.size() != v.size()) return u.size() <=> v.size();
  const std::size_t n = u.size();
  if (kind_ == OrderKind::DegRightLex) {
    for (std::size_t i = n; i-- > 0;)
      if (u[i] != v[i]) return rank_[u[i]] <=> rank_[v[i]];
  } else {
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] != v[i]) return rank_[u[i]] <=> rank_[v[i]];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Word& u, const Word& v, const Ordering& o) { return o.compare(u, v); }

Polynomial::Polynomial(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.word, b.word) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().word == t.word) {
      terms_.back().coeff = ring.domain.canonical(terms_.back().coeff + t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
      continue;
    }
    t.coeff = ring.domain.canonical(t.coeff);
    if (t.coeff != 0) terms_.push_back(std::move(t));
  }
}

Polynomial Polynomial::constant(const Ring& ring, const Coefficient& c) { return monomial(ring, c, Word()); }

Polynomial Polynomial::monomial(const Ring& ring, const Coefficient& c, Word w) {
  Coefficient v = ring.domain.canonical(c);
  if (v == 0) return Polynomial();
  return from_sorted({Term{v, std::move(w)}});
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InputError("zero polynomial has no leading term");
  return terms_.front();
}

std::size_t Polynomial::max_length() const {
  std::size_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.word.size());
  return m;
}

namespace {

// Merge two descending term lists, combining equal words as a + sign*b.
// When Move is set the terms of a are consumed.
template <bool Move = false, class A>
Polynomial merge(const Ring& ring, A& a, std::vector<Term>&& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const bool residue = ring.domain.kind() == DomainKind::Residue;
  while (i < a.size() && j < b.size()) {
    auto c = ring.compare(a[i].word, b[j].word);
    if (c > 0) {
      if constexpr (Move)
        out.push_back(std::move(a[i++]));
      else
        out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = std::move(b[j++]);
      if (subtract) t.coeff = -t.coeff;
      if (residue) t.coeff = ring.domain.canonical(t.coeff);
      out.push_back(std::move(t));
    } else {
      Coefficient s = subtract ? Coefficient(a[i].coeff - b[j].coeff) : Coefficient(a[i].coeff + b[j].coeff);
      if (residue) s = ring.domain.canonical(s);
      if (s != 0) out.push_back(Term{std::move(s), a[i].word});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) {
    if constexpr (Move)
      out.push_back(std::move(a[i]));
    else
      out.push_back(a[i]);
  }
  for (; j < b.size(); ++j) {
    Term t = std::move(b[j]);
    if (subtract) t.coeff = -t.coeff;
    if (residue) t.coeff = ring.domain.canonical(t.coeff);
    out.push_back(std::move(t));
  }
  return Polynomial::from_sorted(std::move(out));
}

// c * (left . g . right); the orderings in use are multiplicative, so the
// result is still sorted. Zero products (only possible modulo m) are dropped.
std::vector<Term> shifted(const Ring& ring, const Coefficient& c, const Word& left, const Polynomial& g,
                          const Word& right) {
  std::vector<Term> out;
  out.reserve(g.size());
  const bool residue = ring.domain.kind() == DomainKind::Residue;
  for (const auto& t : g.terms()) {
    Coefficient v = c * t.coeff;
    if (residue) v = ring.domain.canonical(v);
    if (v == 0) continue;
    out.push_back(Term{std::move(v), concat(left, t.word, right)});
  }
  return out;
}

}  // namespace

Polynomial add(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  return merge(ring, f.terms(), std::vector<Term>(g.terms()), false);
}

Polynomial sub(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  return merge(ring, f.terms(), std::vector<Term>(g.terms()), true);
}

Polynomial negate(const Ring& ring, const Polynomial& f) { return scale(ring, Coefficient(-1), f); }

Polynomial scale(const Ring& ring, const Coefficient& c, const Polynomial& f) {
  return Polynomial::from_sorted(shifted(ring, c, Word(), f, Word()));
}

Polynomial multiply(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) terms.push_back(Term{a.coeff * b.coeff, a.word * b.word});
  return Polynomial(ring, std::move(terms));
}

Polynomial apply(const Ring& ring, const Bimonomial& t, const Polynomial& f) {
  std::vector<Term> terms = shifted(ring, Coefficient(1), t.left, f, t.right);
  // Weighted orderings are multiplicative as well, but canonicalize anyway so
  // callers never depend on it.
  return Polynomial(ring, std::move(terms));
}

namespace {

template <bool Move, class A>
Polynomial sub_multiple_impl(const Ring& ring, A& a, const Coefficient& c, const Word& left, const Polynomial& g,
                             const Word& right) {
  if (ring.domain.kind() == DomainKind::Rationals) return merge<Move>(ring, a, shifted(ring, c, left, g, right), true);
  // Integral coefficients: one pass on numerators, no rational normalization.
  const bool residue = ring.domain.kind() == DomainKind::Residue;
  const mpz_srcptr cn = mpq_numref(c.get_mpq_t());
  const auto& b = g.terms();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Word w;
  bool have_w = false;
  auto reduce = [&](Coefficient& v) {
    if (residue) mpz_fdiv_r(mpq_numref(v.get_mpq_t()), mpq_numref(v.get_mpq_t()), ring.domain.modulus().get_mpz_t());
  };
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_w) {
      w = concat(left, b[j].word, right);
      have_w = true;
    }
    auto cmp = j >= b.size() ? std::strong_ordering::greater
               : i >= a.size() ? std::strong_ordering::less
                               : ring.compare(a[i].word, w);
    if (cmp > 0) {
      if constexpr (Move)
        out.push_back(std::move(a[i++]));
      else
        out.push_back(a[i++]);
      continue;
    }
    Term t;
    mpz_ptr tn = mpq_numref(t.coeff.get_mpq_t());
    mpz_mul(tn, cn, mpq_numref(b[j].coeff.get_mpq_t()));
    if (cmp == 0) {
      mpz_sub(tn, mpq_numref(a[i].coeff.get_mpq_t()), tn);
      ++i;
    } else {
      mpz_neg(tn, tn);
    }
    ++j;
    reduce(t.coeff);
    have_w = false;
    if (mpz_sgn(tn) == 0) continue;
    t.word = std::move(w);
    out.push_back(std::move(t));
  }
  return Polynomial::from_sorted(std::move(out));
}

}  // namespace

Polynomial sub_multiple(const Ring& ring, const Polynomial& f, const Coefficient& c, const Word& left,
                        const Polynomial& g, const Word& right) {
  return sub_multiple_impl<false>(ring, f.terms(), c, left, g, right);
}

Polynomial sub_multiple(const Ring& ring, Polynomial&& f, const Coefficient& c, const Word& left,
                        const Polynomial& g, const Word& right) {
  std::vector<Term> a = std::move(f).take_terms();
  return sub_multiple_impl<true>(ring, a, c, left, g, right);
}

Polynomial combine(const Ring& ring, const Coefficient& c, const Bimonomial& tf, const Polynomial& f,
                   const Coefficient& d, const Bimonomial& tg, const Polynomial& g) {
  Polynomial a = Polynomial::from_sorted(shifted(ring, c, tf.left, f, tf.right));
  return merge(ring, a.terms(), shifted(ring, d, tg.left, g, tg.right), false);
}

std::pair<Coefficient, Word> leading(const Polynomial& f) {
  const Term& t = f.leading_term();
  return {t.coeff, t.word};
}

Polynomial tail(const Polynomial& f) { return tail_iter(f, 1); }

Polynomial tail(Polynomial&& f) {
  std::vector<Term> t = std::move(f).take_terms();
  if (!t.empty()) t.erase(t.begin());
  return Polynomial::from_sorted(std::move(t));
}

Polynomial tail_iter(const Polynomial& f, std::size_t i) {
  if (i >= f.size()) return Polynomial();
  return Polynomial::from_sorted(std::vector<Term>(f.terms().begin() + static_cast<std::ptrdiff_t>(i),
                                                   f.terms().end()));
}

Polynomial normalize_leading(const Ring& ring, const Polynomial& f) {
  if (f.is_zero()) return f;
  Coefficient u = ring.domain.normalizing_unit(f.lc());
  if (u == 1) return f;
  return scale(ring, u, f);
}

Polynomial change_domain(const Ring& target, const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Coefficient c = target.domain.canonical(t.coeff);
    if (c != 0) terms.push_back(Term{std::move(c), t.word});
  }
  return Polynomial::from_sorted(std::move(terms));
}

std::string to_string(const Ring& ring, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += ring.alphabet.name(w[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string to_string(const Ring& ring, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Coefficient c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.word.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += to_string(ring, t.word);
    } else {
      out += c.get_str() + '*' + to_string(ring, t.word);
    }
  }
  return out;
}

}  // namespace ncgb
