#include "ncgb/overlap.hpp"

#include <algorithm>

namespace ncgb {

std::vector<Bimonomial> divides_word(const Word& u, const Word& v) {
  std::vector<Bimonomial> out;
  if (u.size() > v.size()) return out;
  for (std::size_t pos = v.find(u); pos != std::string::npos; pos = v.find(u, pos + 1)) {
    out.push_back(Bimonomial{v.sub(0, pos), v.sub(pos + u.size())});
    if (u.empty() && pos == v.size()) break;
  }
  return out;
}

namespace {

Overlap make_overlap(const Word& u, const Word& v, std::size_t pos_u, std::size_t pos_v) {
  const std::size_t len = std::max(pos_u + u.size(), pos_v + v.size());
  std::string t(len, '\0');
  for (std::size_t i = 0; i < u.size(); ++i) t[pos_u + i] = static_cast<char>(u[i]);
  for (std::size_t i = 0; i < v.size(); ++i) t[pos_v + i] = static_cast<char>(v[i]);
  Overlap o;
  o.t = Word(std::move(t));
  o.pos_u = pos_u;
  o.pos_v = pos_v;
  o.tau_u = Bimonomial{o.t.sub(0, pos_u), o.t.sub(pos_u + u.size())};
  o.tau_v = Bimonomial{o.t.sub(0, pos_v), o.t.sub(pos_v + v.size())};
  const bool u_in_v = pos_u >= pos_v && pos_u + u.size() <= pos_v + v.size();
  const bool v_in_u = pos_v >= pos_u && pos_v + v.size() <= pos_u + u.size();
  if (u_in_v)
    o.kind = OverlapCase::UDividesV;
  else if (v_in_u)
    o.kind = OverlapCase::VDividesU;
  else if (pos_u < pos_v)
    o.kind = OverlapCase::LeftRight;
  else
    o.kind = OverlapCase::RightLeft;
  return o;
}

}  // namespace

std::vector<Overlap> placements(const Word& u, const Word& v, bool same_element) {
  std::vector<Overlap> out;
  if (u.empty() || v.empty()) {
    if (same_element) return out;
    // The empty word divides everything; every embedding gives the same t.
    out.push_back(make_overlap(u, v, 0, 0));
    return out;
  }
  const long p = static_cast<long>(u.size());
  const long q = static_cast<long>(v.size());
  // k = offset of v relative to u; intervals must share a letter.
  for (long k = -(q - 1); k <= p - 1; ++k) {
    if (same_element && k <= 0) continue;
    const long lo = std::max(0L, k), hi = std::min(p, k + q);
    bool ok = true;
    for (long i = lo; i < hi && ok; ++i) ok = u[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(i - k)];
    if (!ok) continue;
    const std::size_t pos_u = k < 0 ? static_cast<std::size_t>(-k) : 0;
    const std::size_t pos_v = k > 0 ? static_cast<std::size_t>(k) : 0;
    out.push_back(make_overlap(u, v, pos_u, pos_v));
  }
  std::stable_sort(out.begin(), out.end(), [](const Overlap& a, const Overlap& b) {
    if (a.t.size() != b.t.size()) return a.t.size() < b.t.size();
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  return out;
}

std::vector<Overlap> overlaps(const Word& u, const Word& v) { return placements(u, v, u == v); }

Cofactors cofactors(const Domain& domain, const Coefficient& lc_f, const Coefficient& lc_g) {
  Cofactors c;
  if (domain.is_field()) {
    c.a_f = domain.inverse(lc_f);
    c.a_g = domain.inverse(lc_g);
    c.b_f = c.a_f;
    c.b_g = 0;
    c.gcd = 1;
    return c;
  }
  if (!domain.is_integers()) throw UnsupportedError("S-polynomials over " + domain.name());
  Coefficient l = lcm_coeff(domain, lc_f, lc_g);
  c.a_f = l / lc_f;
  c.a_g = l / lc_g;
  ExtGcd e = ext_gcd(domain, lc_f, lc_g);
  c.b_f = e.s;
  c.b_g = e.t;
  c.gcd = e.g;
  return c;
}

bool coeff_criterion(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  if (ring.domain.is_field()) return true;
  return ring.domain.divides(f.lc(), g.lc()) || ring.domain.divides(g.lc(), f.lc());
}

namespace {

SGResult build(const Ring& ring, const Polynomial& f, const Polynomial& g, const Bimonomial& tf,
               const Bimonomial& tg) {
  Cofactors c = cofactors(ring.domain, f.lc(), g.lc());
  SGResult r;
  r.spoly = combine(ring, c.a_f, tf, f, -c.a_g, tg, g);
  if (!ring.domain.is_field() && !coeff_criterion(ring, f, g))
    r.gpoly = combine(ring, c.b_f, tf, f, c.b_g, tg, g);
  return r;
}

}  // namespace

SGResult spoly1(const Ring& ring, const Polynomial& f, const Polynomial& g, const Overlap& o) {
  if (f.is_zero() || g.is_zero()) throw InputError("S-polynomial of the zero polynomial");
  if (o.tau_u(f.lm()) != o.t || o.tau_v(g.lm()) != o.t)
    throw InputError("overlap does not match the leading words");
  SGResult r = build(ring, f, g, o.tau_u, o.tau_v);
  r.provenance.type = 1;
  r.provenance.overlap = o;
  return r;
}

SGResult spoly2(const Ring& ring, const Polynomial& f, const Polynomial& g, const Word& w) {
  if (f.is_zero() || g.is_zero()) throw InputError("S-polynomial of the zero polynomial");
  SGResult r = build(ring, f, g, Bimonomial{Word(), w * g.lm()}, Bimonomial{f.lm() * w, Word()});
  r.provenance.type = 2;
  r.provenance.w = w;
  return r;
}

}  // namespace ncgb
