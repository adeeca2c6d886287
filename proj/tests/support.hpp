#pragma once

// Helpers shared by the test binaries: ring construction from a one-line
// header, random generators, and naive reference implementations used as
// oracles.

#include "ncgb/engine.hpp"
#include "ncgb/job.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace ncgb::test {

inline Ring ring_of(const std::string& header) { return parse_job(header + " bound 1;").ring; }

inline Polynomial P(const Ring& r, const std::string& text) { return parse_polynomial(r, text); }

inline std::vector<Polynomial> Ps(const Ring& r, const std::string& text) { return parse_polynomial_list(r, text); }

inline Word W(const Ring& r, const std::string& text) {
  Polynomial p = parse_polynomial(r, text);
  return p.lm();
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }

  Word word(std::size_t alphabet, std::size_t min_len, std::size_t max_len) {
    Word w;
    const long len = uniform(static_cast<long>(min_len), static_cast<long>(max_len));
    for (long i = 0; i < len; ++i) w.push_back(static_cast<int>(uniform(0, static_cast<long>(alphabet) - 1)));
    return w;
  }

  Polynomial poly(const Ring& r, std::size_t max_terms, std::size_t max_len, long max_coeff,
                  std::size_t min_len = 0) {
    std::vector<Term> terms;
    const long n = uniform(1, static_cast<long>(max_terms));
    for (long k = 0; k < n; ++k) {
      long c = 0;
      while (c == 0) c = uniform(-max_coeff, max_coeff);
      terms.push_back(Term{Coefficient(c), word(r.alphabet.size(), min_len, max_len)});
    }
    return Polynomial(r, std::move(terms));
  }

 private:
  std::mt19937_64 gen_;
};

/// Dictionary polynomial: word letters -> coefficient; no ordering involved.
using NaivePoly = std::map<std::string, Coefficient>;

inline NaivePoly naive(const Polynomial& f) {
  NaivePoly out;
  for (const auto& t : f.terms()) out[t.word.str()] = t.coeff;
  return out;
}

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) {
      Coefficient& slot = out[u + v];
      slot += c * d;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline NaivePoly naive_add(NaivePoly a, const NaivePoly& b, const Coefficient& scale = 1) {
  for (const auto& [v, d] : b) a[v] += scale * d;
  for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
  return a;
}

/// Largest word of a naive polynomial under the ring ordering, by full scan.
inline std::string naive_lm(const Ring& r, const NaivePoly& f) {
  std::string best;
  bool first = true;
  for (const auto& [w, c] : f) {
    if (first || r.compare(Word(w), Word(best)) > 0) best = w;
    first = false;
  }
  return best;
}

/// Every (t, pos_u, pos_v) where t is covered by an occurrence of u at pos_u
/// and of v at pos_v sharing at least one letter, found by scanning all words
/// up to length |u| + |v|.
struct Placement {
  std::string t;
  std::size_t pu, pv;
  auto operator<=>(const Placement&) const = default;
};

inline std::vector<Placement> brute_force_placements(const Word& u, const Word& v, std::size_t alphabet) {
  std::vector<Placement> out;
  for (std::size_t L = 1; L <= u.size() + v.size(); ++L) {
    for (const auto& t : words_of_length(alphabet, L)) {
      for (std::size_t pu = 0; pu + u.size() <= L; ++pu) {
        if (t.sub(pu, u.size()) != u) continue;
        for (std::size_t pv = 0; pv + v.size() <= L; ++pv) {
          if (t.sub(pv, v.size()) != v) continue;
          const bool covers = std::min(pu, pv) == 0 && std::max(pu + u.size(), pv + v.size()) == L;
          const bool meet = pu < pv + v.size() && pv < pu + u.size();
          if (covers && meet) out.push_back(Placement{t.str(), pu, pv});
        }
      }
    }
  }
  return out;
}

}  // namespace ncgb::test
