#pragma once

#include "ncgb/coeffring.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncgb {

/// Finite alphabet of non-commuting variables with optional weights.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names, std::vector<long> weights = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t letter) const { return names_.at(letter); }
  long weight(std::size_t letter) const { return weights_[letter]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<long>& weights() const { return weights_; }

  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<long> weights_;
};

/// A word of the free monoid. Letters are alphabet indices; the empty word is 1.
///
/// Stored in a std::string so that short words (the common case) live inline.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }
  const std::string& str() const { return letters_; }

  void push_back(int letter) { letters_.push_back(static_cast<char>(letter)); }
  Word sub(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len));
  }

  /// First position at or after `from` where `u` occurs as a subword, or npos.
  std::size_t find(const Word& u, std::size_t from = 0) const { return letters_.find(u.letters_, from); }
  bool contains(const Word& u) const { return find(u) != std::string::npos; }

  friend Word operator*(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
  friend bool operator==(const Word& a, const Word& b) = default;
  /// Plain lexicographic order on letter indices; used for containers only,
  /// not the monomial ordering.
  friend auto operator<=>(const Word& a, const Word& b) = default;

 private:
  std::string letters_;
};

/// Concatenation of three words.
inline Word concat(const Word& l, const Word& m, const Word& r) {
  std::string s;
  s.reserve(l.size() + m.size() + r.size());
  s += l.str();
  s += m.str();
  s += r.str();
  return Word(std::move(s));
}

/// u (x) v acting by t -> u t v.
struct Bimonomial {
  Word left;
  Word right;

  Word operator()(const Word& t) const { return concat(left, t, right); }
  friend bool operator==(const Bimonomial&, const Bimonomial&) = default;
};

enum class OrderKind { DegLeftLex, DegRightLex, WeightedDegThenDegLeftLex };

/// Monomial well-ordering. `rank[letter]` is larger for larger letters.
class Ordering {
 public:
  Ordering() = default;
  /// `ranking` lists letters from largest to smallest.
  Ordering(OrderKind kind, const std::vector<int>& ranking, std::vector<long> weights = {});

  OrderKind kind() const { return kind_; }
  const std::vector<int>& rank() const { return rank_; }
  const std::vector<long>& weights() const { return weights_; }

  std::strong_ordering compare(const Word& u, const Word& v) const;
  long weighted_degree(const Word& w) const;

 private:
  OrderKind kind_ = OrderKind::DegLeftLex;
  std::vector<int> rank_;
  std::vector<long> weights_;
};

/// Alphabet, ordering and coefficient domain: everything polynomial arithmetic
/// needs to know.
struct Ring {
  Domain domain = Domain::integers();
  Alphabet alphabet;
  Ordering ordering;

  std::strong_ordering compare(const Word& u, const Word& v) const { return ordering.compare(u, v); }
  /// Same alphabet and ordering over a different domain.
  Ring with_domain(Domain d) const { return Ring{std::move(d), alphabet, ordering}; }
};

struct Term {
  Coefficient coeff;
  Word word;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Canonical sparse polynomial: terms strictly descending in the ring's
/// ordering, no zero coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  /// Canonicalizes arbitrary terms (sorts, merges, drops zeros).
  Polynomial(const Ring& ring, std::vector<Term> terms);
  static Polynomial from_sorted(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }
  static Polynomial constant(const Ring& ring, const Coefficient& c);
  static Polynomial monomial(const Ring& ring, const Coefficient& c, Word w);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;
  const Coefficient& lc() const { return leading_term().coeff; }
  const Word& lm() const { return leading_term().word; }

  /// Length of the longest word occurring.
  std::size_t max_length() const;

  std::vector<Term> take_terms() && { return std::move(terms_); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

std::strong_ordering compare(const Word& u, const Word& v, const Ordering& o);

Polynomial add(const Ring& ring, const Polynomial& f, const Polynomial& g);
Polynomial sub(const Ring& ring, const Polynomial& f, const Polynomial& g);
Polynomial negate(const Ring& ring, const Polynomial& f);
Polynomial scale(const Ring& ring, const Coefficient& c, const Polynomial& f);
Polynomial multiply(const Ring& ring, const Polynomial& f, const Polynomial& g);
Polynomial apply(const Ring& ring, const Bimonomial& t, const Polynomial& f);

/// f - c * (left . g . right), the workhorse of every reduction.
Polynomial sub_multiple(const Ring& ring, const Polynomial& f, const Coefficient& c,
                        const Word& left, const Polynomial& g, const Word& right);
Polynomial sub_multiple(const Ring& ring, Polynomial&& f, const Coefficient& c,
                        const Word& left, const Polynomial& g, const Word& right);

/// c * (left . f . right) + d * (left2 . g . right2)
Polynomial combine(const Ring& ring, const Coefficient& c, const Bimonomial& tf, const Polynomial& f,
                   const Coefficient& d, const Bimonomial& tg, const Polynomial& g);

std::pair<Coefficient, Word> leading(const Polynomial& f);
Polynomial tail(const Polynomial& f);
Polynomial tail(Polynomial&& f);
Polynomial tail_iter(const Polynomial& f, std::size_t i);

/// Multiply by the unit that makes the leading coefficient canonical
/// (positive over Z, 1 over a field, a divisor of m over Z/mZ).
Polynomial normalize_leading(const Ring& ring, const Polynomial& f);

/// Coefficient-wise image in another domain over the same words.
Polynomial change_domain(const Ring& target, const Polynomial& f);

std::string to_string(const Ring& ring, const Word& w);
/// `2*x*y^2 - 3*z`
std::string to_string(const Ring& ring, const Polynomial& f);

}  // namespace ncgb
