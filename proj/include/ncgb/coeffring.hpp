#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ncgb {

/// Exact coefficient. Integers and residues carry denominator 1.
using Coefficient = mpq_class;

/// Raised for malformed input or violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the request is well-formed but outside what is implemented
/// (prime-power moduli, composite residue rings in the plain engine, ...).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DomainKind { Integers, Rationals, Residue };

/// The active Euclidean coefficient domain: Z, Q or Z/mZ.
class Domain {
 public:
  static Domain integers() { return Domain(DomainKind::Integers, 0); }
  static Domain rationals() { return Domain(DomainKind::Rationals, 0); }
  static Domain residue(const mpz_class& m);

  DomainKind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }

  /// Q, or Z/pZ with p prime.
  bool is_field() const { return field_; }
  bool is_integers() const { return kind_ == DomainKind::Integers; }

  /// Bring a value into canonical form (residues into [0, m)).
  Coefficient canonical(const Coefficient& c) const;

  bool is_unit(const Coefficient& c) const;
  /// Multiplicative inverse; c must be a unit.
  Coefficient inverse(const Coefficient& c) const;
  /// Multiplier u (a unit) such that u*c is the preferred associate:
  /// positive over Z, 1 over a field, gcd(c, m) over Z/mZ.
  Coefficient normalizing_unit(const Coefficient& c) const;
  /// Does a divide b in this domain?
  bool divides(const Coefficient& a, const Coefficient& b) const;

  std::string name() const;

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Domain(DomainKind kind, const mpz_class& m);

  DomainKind kind_;
  mpz_class modulus_;
  bool field_ = false;
};

struct ExtGcd {
  Coefficient g;
  Coefficient s;
  Coefficient t;
};

/// Extended Euclid over Z: g = s*a + t*b, g > 0, |s| minimal with ties
/// broken toward s >= 0.
ExtGcd ext_gcd(const Domain& domain, const Coefficient& a, const Coefficient& b);

/// Positive least common multiple over Z.
Coefficient lcm_coeff(const Domain& domain, const Coefficient& a, const Coefficient& b);

struct Quotient {
  Coefficient a;
  Coefficient b;
};

/// Division with small remainder c_f = a*c_g + b, a != 0, |b| < |c_f|.
/// Over Z the quotient is the nearest integer (ties resolved toward b >= 0);
/// over a field b = 0; over Z/mZ only exact division is accepted.
std::optional<Quotient> reduce_quotient(const Domain& domain, const Coefficient& c_f,
                                        const Coefficient& c_g);

/// Euclidean norm: |c| over Z, 0/1 over a field.
mpz_class norm(const Domain& domain, const Coefficient& c);

}  // namespace ncgb
