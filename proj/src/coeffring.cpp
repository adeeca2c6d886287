#include "ncgb/coeffring.hpp"

namespace ncgb {

namespace {

const mpz_class& as_integer(const Coefficient& c) {
  if (c.get_den() != 1) throw InputError("non-integral coefficient " + c.get_str());
  return c.get_num();
}

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

int cmp_abs(const mpz_class& a, const mpz_class& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

void require_integers(const Domain& domain) {
  if (!domain.is_integers()) throw UnsupportedError("unsupported domain " + domain.name());
}

}  // namespace

Domain::Domain(DomainKind kind, const mpz_class& m) : kind_(kind), modulus_(m) {
  switch (kind_) {
    case DomainKind::Integers:
      field_ = false;
      break;
    case DomainKind::Rationals:
      field_ = true;
      break;
    case DomainKind::Residue:
      field_ = mpz_probab_prime_p(modulus_.get_mpz_t(), 30) != 0;
      break;
  }
}

Domain Domain::residue(const mpz_class& m) {
  if (m < 2) throw InputError("residue modulus must be at least 2");
  return Domain(DomainKind::Residue, m);
}

Coefficient Domain::canonical(const Coefficient& c) const {
  if (kind_ != DomainKind::Residue) return c;
  mpz_class num = mod_floor(c.get_num(), modulus_);
  if (c.get_den() != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), c.get_den().get_mpz_t(), modulus_.get_mpz_t()) == 0)
      throw InputError("denominator not invertible modulo " + modulus_.get_str());
    num = mod_floor(num * inv, modulus_);
  }
  return Coefficient(num);
}

bool Domain::is_unit(const Coefficient& c) const {
  switch (kind_) {
    case DomainKind::Integers:
      return c == 1 || c == -1;
    case DomainKind::Rationals:
      return c != 0;
    case DomainKind::Residue: {
      mpz_class g;
      mpz_class v = as_integer(c);
      mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Coefficient Domain::inverse(const Coefficient& c) const {
  if (!is_unit(c)) throw InputError("not a unit: " + c.get_str());
  switch (kind_) {
    case DomainKind::Integers:
      return c;
    case DomainKind::Rationals:
      return Coefficient(1) / c;
    case DomainKind::Residue: {
      mpz_class inv;
      mpz_class v = as_integer(c);
      mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
      return Coefficient(inv);
    }
  }
  return c;
}

Coefficient Domain::normalizing_unit(const Coefficient& c) const {
  switch (kind_) {
    case DomainKind::Integers:
      return c < 0 ? Coefficient(-1) : Coefficient(1);
    case DomainKind::Rationals:
      return Coefficient(1) / c;
    case DomainKind::Residue: {
      if (is_field()) return inverse(c);
      // u * c == gcd(c, m): invert the cofactor modulo m/g, then lift the
      // result to a unit modulo m.
      mpz_class v = as_integer(c);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
      mpz_class reduced_m = modulus_ / g;
      mpz_class u = 1;
      if (reduced_m > 1) {
        mpz_class cofactor = mod_floor(v / g, reduced_m);
        mpz_invert(u.get_mpz_t(), cofactor.get_mpz_t(), reduced_m.get_mpz_t());
      }
      for (mpz_class cand = u;; cand += reduced_m) {
        mpz_class h;
        mpz_gcd(h.get_mpz_t(), cand.get_mpz_t(), modulus_.get_mpz_t());
        if (h == 1) return Coefficient(mod_floor(cand, modulus_));
      }
    }
  }
  return Coefficient(1);
}

bool Domain::divides(const Coefficient& a, const Coefficient& b) const {
  if (b == 0) return true;
  if (a == 0) return false;
  switch (kind_) {
    case DomainKind::Integers:
      return mpz_divisible_p(as_integer(b).get_mpz_t(), as_integer(a).get_mpz_t()) != 0;
    case DomainKind::Rationals:
      return true;
    case DomainKind::Residue: {
      mpz_class g;
      mpz_class v = as_integer(a);
      mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
      return mpz_divisible_p(as_integer(b).get_mpz_t(), g.get_mpz_t()) != 0;
    }
  }
  return false;
}

std::string Domain::name() const {
  switch (kind_) {
    case DomainKind::Integers:
      return "Z";
    case DomainKind::Rationals:
      return "Q";
    case DomainKind::Residue:
      return "Z/" + modulus_.get_str() + "Z";
  }
  return "?";
}

ExtGcd ext_gcd(const Domain& domain, const Coefficient& a_in, const Coefficient& b_in) {
  require_integers(domain);
  const mpz_class& a = as_integer(a_in);
  const mpz_class& b = as_integer(b_in);
  if (a == 0 && b == 0) throw InputError("gcd undefined for (0, 0)");
  if (b == 0) return {Coefficient(abs(a)), Coefficient(sgn(a)), Coefficient(0)};
  if (a == 0) return {Coefficient(abs(b)), Coefficient(0), Coefficient(sgn(b))};

  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // All solutions: s + k*(b/g). Pick the representative in (-M/2, M/2].
  mpz_class period = abs(b) / g;
  s = mod_floor(s, period);
  if (2 * s > period) s -= period;
  t = (g - s * a) / b;
  return {Coefficient(g), Coefficient(s), Coefficient(t)};
}

Coefficient lcm_coeff(const Domain& domain, const Coefficient& a_in, const Coefficient& b_in) {
  require_integers(domain);
  const mpz_class& a = as_integer(a_in);
  const mpz_class& b = as_integer(b_in);
  if (a == 0 || b == 0) throw InputError("lcm of zero is undefined");
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return Coefficient(l);
}

std::optional<Quotient> reduce_quotient(const Domain& domain, const Coefficient& c_f,
                                        const Coefficient& c_g) {
  if (c_f == 0 || c_g == 0) return std::nullopt;
  switch (domain.kind()) {
    case DomainKind::Rationals:
      return Quotient{c_f / c_g, Coefficient(0)};
    case DomainKind::Residue: {
      if (domain.is_field()) return Quotient{domain.canonical(c_f * domain.inverse(c_g)), 0};
      if (!domain.divides(c_g, c_f)) return std::nullopt;
      // Solve a*c_g == c_f (mod m) with the normalizing unit of c_g.
      Coefficient u = domain.normalizing_unit(c_g);
      Coefficient g = domain.canonical(u * c_g);
      Coefficient a = domain.canonical(Coefficient(as_integer(c_f) / as_integer(g)) * u);
      return Quotient{a, Coefficient(0)};
    }
    case DomainKind::Integers: {
      const mpz_class& f = as_integer(c_f);
      const mpz_class& g = as_integer(c_g);
      mpz_class lo;
      mpz_fdiv_q(lo.get_mpz_t(), f.get_mpz_t(), g.get_mpz_t());
      mpz_class hi = lo + 1;
      mpz_class b_lo = f - lo * g;
      mpz_class b_hi = f - hi * g;
      int cmp = cmp_abs(b_lo, b_hi);
      bool take_lo = cmp < 0 || (cmp == 0 && b_lo >= 0);
      mpz_class a = take_lo ? lo : hi;
      mpz_class b = take_lo ? b_lo : b_hi;
      if (a == 0 || cmp_abs(b, f) >= 0) return std::nullopt;
      return Quotient{Coefficient(a), Coefficient(b)};
    }
  }
  return std::nullopt;
}

mpz_class norm(const Domain& domain, const Coefficient& c) {
  if (domain.is_integers()) return abs(as_integer(c));
  return c == 0 ? mpz_class(0) : mpz_class(1);
}

}  // namespace ncgb
