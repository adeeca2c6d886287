#include "ncgb/job.hpp"

#include "ncgb/modlift.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ncgb {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw InputError("line " + std::to_string(at.line) + ", column " + std::to_string(at.col) + ": " + msg);
  }

  bool accept(char c) {
    if (cur_.kind == Tok::Symbol && cur_.text[0] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(cur_, std::string("expected '") + c + "'" + found());
  }

  std::string ident(const char* what) {
    if (cur_.kind != Tok::Ident) fail(cur_, std::string("expected ") + what + found());
    return next().text;
  }

  mpz_class number(const char* what) {
    if (cur_.kind != Tok::Number) fail(cur_, std::string("expected ") + what + found());
    return mpz_class(next().text);
  }

  std::string found() const {
    if (cur_.kind == Tok::End) return ", found end of input";
    return ", found '" + cur_.text + "'";
  }

 private:
  void advance() {
    skip_space();
    cur_ = Token{};
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= src_.size()) return;
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      cur_.kind = Tok::Ident;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        cur_.text += take();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur_.kind = Tok::Number;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) cur_.text += take();
    } else {
      cur_.kind = Tok::Symbol;
      cur_.text = std::string(1, take());
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#' || (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/')) {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  char take() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  Token cur_;
};

class PolyParser {
 public:
  PolyParser(const Ring& ring, Lexer& lex) : ring_(ring), lex_(lex) {}

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (lex_.accept('+'))
        acc = add(ring_, acc, term());
      else if (lex_.accept('-'))
        acc = sub(ring_, acc, term());
      else
        return acc;
    }
  }

 private:
  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (lex_.accept('*')) {
        acc = multiply(ring_, acc, unary());
      } else if (lex_.peek().kind == Tok::Symbol && lex_.peek().text == "/") {
        Token at = lex_.next();
        Polynomial den = unary();
        if (den.is_zero() || !den.lm().empty()) lex_.fail(at, "division by a non-constant or zero");
        acc = scale(ring_, Coefficient(1) / den.lc(), acc);
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (lex_.accept('-')) return negate(ring_, unary());
    if (lex_.accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!lex_.accept('^')) return base;
    if (lex_.peek().kind == Tok::Symbol && lex_.peek().text == "-") lex_.fail(lex_.peek(), "negative exponent");
    Token at = lex_.peek();
    mpz_class e = lex_.number("exponent");
    if (e > 10000) lex_.fail(at, "exponent too large");
    Polynomial out = Polynomial::constant(ring_, 1);
    for (unsigned long k = 0; k < e.get_ui(); ++k) out = multiply(ring_, out, base);
    return out;
  }

  Polynomial atom() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Number) return Polynomial::constant(ring_, Coefficient(lex_.number("number")));
    if (t.kind == Tok::Ident) {
      Token id = lex_.next();
      int idx = ring_.alphabet.index_of(id.text);
      if (idx < 0) lex_.fail(id, "unknown variable '" + id.text + "'");
      return Polynomial::monomial(ring_, 1, Word{idx});
    }
    if (lex_.accept('(')) {
      Polynomial p = expr();
      lex_.expect(')');
      return p;
    }
    if (lex_.accept('[')) {
      Polynomial a = expr();
      lex_.expect(',');
      Polynomial b = expr();
      lex_.expect(']');
      return sub(ring_, multiply(ring_, a, b), multiply(ring_, b, a));
    }
    lex_.fail(t, "expected a polynomial" + lex_.found());
  }

  const Ring& ring_;
  Lexer& lex_;
};

void check_integral(const Ring& ring, const Polynomial& p) {
  if (!ring.domain.is_integers()) return;
  for (const auto& t : p.terms())
    if (t.coeff.get_den() != 1) throw InputError("non-integral coefficient " + t.coeff.get_str() + " over Z");
}

Domain parse_domain(Lexer& lex) {
  Token at = lex.peek();
  std::string name = lex.ident("coefficient domain (Z, Q or Zmod N)");
  if (name == "Z") return Domain::integers();
  if (name == "Q") return Domain::rationals();
  if (name == "Zmod") {
    Token nat = lex.peek();
    mpz_class m = lex.number("modulus");
    if (m < 2) lex.fail(nat, "modulus must be at least 2");
    return Domain::residue(m);
  }
  lex.fail(at, "unknown coefficient domain '" + name + "'");
}

Ordering parse_ordering(Lexer& lex, const Alphabet& alphabet) {
  Token at = lex.peek();
  std::string name = lex.ident("ordering (deglex, degrevlexR or wdeglex)");
  OrderKind kind;
  std::vector<long> weights;
  if (name == "deglex") {
    kind = OrderKind::DegLeftLex;
  } else if (name == "degrevlexR") {
    kind = OrderKind::DegRightLex;
  } else if (name == "wdeglex") {
    kind = OrderKind::WeightedDegThenDegLeftLex;
    lex.expect('(');
    do {
      weights.push_back(lex.number("weight").get_si());
    } while (lex.accept(','));
    lex.expect(')');
    if (weights.size() != alphabet.size()) lex.fail(at, "need one weight per variable");
  } else {
    lex.fail(at, "unknown ordering '" + name + "'");
  }
  lex.expect('(');
  std::vector<int> ranking;
  do {
    Token v = lex.peek();
    std::string var = lex.ident("variable");
    int idx = alphabet.index_of(var);
    if (idx < 0) lex.fail(v, "unknown variable '" + var + "'");
    if (std::find(ranking.begin(), ranking.end(), idx) != ranking.end()) lex.fail(v, "variable ranked twice");
    ranking.push_back(idx);
  } while (lex.accept('>') || lex.accept(','));
  lex.expect(')');
  if (ranking.size() != alphabet.size()) lex.fail(at, "ranking must list every variable");
  return Ordering(kind, ranking, std::move(weights));
}

std::vector<Polynomial> parse_list(const Ring& ring, Lexer& lex) {
  std::vector<Polynomial> out;
  PolyParser pp(ring, lex);
  do {
    Polynomial p = pp.expr();
    check_integral(ring, p);
    out.push_back(std::move(p));
  } while (lex.accept(','));
  return out;
}

void render_text(std::ostringstream& os, const Ring& ring, const GBResult& r, const JobOptions& o,
                 const std::vector<Word>* monomials, const std::optional<bool>& equivalent) {
  for (const auto& g : r.basis) os << to_string(ring, g) << '\n';
  os << "flag: " << to_string(r.flag) << '\n';
  if (monomials) {
    os << "monomials:";
    for (std::size_t k = 0; k < monomials->size(); ++k) os << (k ? ", " : " ") << to_string(ring, (*monomials)[k]);
    os << '\n';
  }
  if (o.stats)
    for (const auto& [key, value] : r.stats.items()) os << key << '=' << value << '\n';
  if (equivalent) os << "equivalent: " << (*equivalent ? "yes" : "no") << '\n';
}

void render_json(std::ostringstream& os, const Ring& ring, const GBResult& r, const std::vector<Word>* monomials,
                 const std::optional<bool>& equivalent) {
  nlohmann::ordered_json j;
  j["basis"] = nlohmann::json::array();
  for (const auto& g : r.basis) j["basis"].push_back(to_string(ring, g));
  j["flag"] = to_string(r.flag);
  j["stats"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.stats.items()) j["stats"][key] = value;
  if (monomials) {
    j["monomials"] = nlohmann::json::array();
    for (const auto& w : *monomials) j["monomials"].push_back(to_string(ring, w));
  }
  if (equivalent) j["equivalent"] = *equivalent;
  os << j.dump(2) << '\n';
}

GBResult compute(const Ring& ring, const std::vector<Polynomial>& gens, std::size_t d, const Options& opts) {
  if (ring.domain.kind() == DomainKind::Residue) return gb_zmod(ring, gens, d, opts);
  return buchberger(ring, gens, d, opts);
}

}  // namespace

Polynomial parse_polynomial(const Ring& ring, std::string_view text) {
  Lexer lex(text);
  Polynomial p = PolyParser(ring, lex).expr();
  if (lex.peek().kind != Tok::End) lex.fail(lex.peek(), "unexpected input" + lex.found());
  check_integral(ring, p);
  return p;
}

std::vector<Polynomial> parse_polynomial_list(const Ring& ring, std::string_view text) {
  std::vector<Polynomial> out;
  Lexer lex(text);
  PolyParser pp(ring, lex);
  while (lex.peek().kind != Tok::End) {
    if (lex.accept(',') || lex.accept(';')) continue;
    Polynomial p = pp.expr();
    check_integral(ring, p);
    out.push_back(std::move(p));
  }
  return out;
}

Job parse_job(std::string_view text) {
  Lexer lex(text);
  Job job;
  Token start = lex.peek();
  if (lex.peek().kind != Tok::Ident || lex.peek().text != "ring") lex.fail(start, "expected 'ring'" + lex.found());
  lex.next();
  Domain domain = parse_domain(lex);
  lex.expect('<');
  std::vector<std::string> names;
  do {
    names.push_back(lex.ident("variable name"));
  } while (lex.accept(','));
  lex.expect('>');
  Alphabet alphabet(names);
  Ordering ordering = parse_ordering(lex, alphabet);
  if (lex.peek().kind != Tok::Ident || lex.peek().text != "bound") lex.fail(lex.peek(), "bound missing");
  lex.next();
  Token bt = lex.peek();
  mpz_class bound = lex.number("length bound");
  if (bound < 1 || !bound.fits_ulong_p()) lex.fail(bt, "bound must be a positive integer");
  job.bound = bound.get_ui();
  lex.expect(';');
  if (ordering.kind() == OrderKind::WeightedDegThenDegLeftLex)
    alphabet = Alphabet(names, ordering.weights());
  job.ring = Ring{domain, alphabet, ordering};

  while (lex.peek().kind != Tok::End) {
    Token kw = lex.peek();
    std::string stmt = lex.ident("'ideal' or 'option'");
    if (stmt == "ideal") {
      for (auto& p : parse_list(job.ring, lex)) job.generators.push_back(std::move(p));
    } else if (stmt == "option") {
      Token ot = lex.peek();
      std::string name = lex.ident("option name");
      if (name == "reduce") {
        job.options.reduce = true;
      } else if (name == "tail_reduce" || name == "redTail") {
        job.options.tail_reduce = true;
      } else if (name == "stats") {
        job.options.stats = true;
      } else if (name == "monomials") {
        job.options.monomials_upto = lex.number("monomial length").get_ui();
      } else {
        lex.fail(ot, "unknown option '" + name + "'");
      }
    } else {
      lex.fail(kw, "unknown statement '" + stmt + "'");
    }
    lex.expect(';');
  }
  return job;
}

void sort_basis(const Ring& ring, std::vector<Polynomial>& basis) {
  std::vector<std::pair<std::string, Polynomial>> keyed;
  for (auto& g : basis) keyed.emplace_back(to_string(ring, g), std::move(g));
  std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.second.is_zero() || b.second.is_zero()) return a.second.is_zero() && !b.second.is_zero();
    auto c = ring.compare(a.second.lm(), b.second.lm());
    if (c != 0) return c < 0;
    return a.first < b.first;
  });
  basis.clear();
  for (auto& [text, g] : keyed) basis.push_back(std::move(g));
}

RunOutput run(const Job& job, OutputFormat format) {
  RunOutput res;
  try {
    Options opts;
    opts.reduce = job.options.reduce || job.options.tail_reduce;
    opts.tail_reduce = job.options.tail_reduce;
    GBResult r = compute(job.ring, job.generators, job.bound, opts);
    sort_basis(job.ring, r.basis);

    std::vector<Word> monomials;
    if (job.options.monomials_upto) monomials = monomial_basis(job.ring, r.basis, *job.options.monomials_upto);

    std::optional<bool> equivalent;
    if (job.options.equivalence_target) {
      std::ifstream in(*job.options.equivalence_target);
      if (!in) throw InputError("cannot read " + *job.options.equivalence_target);
      std::stringstream buf;
      buf << in.rdbuf();
      GBResult other = compute(job.ring, parse_polynomial_list(job.ring, buf.str()), job.bound, opts);
      equivalent = gb_equivalent(job.ring, r.basis, other.basis, job.bound);
    }

    std::ostringstream os;
    const std::vector<Word>* mono = job.options.monomials_upto ? &monomials : nullptr;
    if (format == OutputFormat::Json)
      render_json(os, job.ring, r, mono, equivalent);
    else
      render_text(os, job.ring, r, job.options, mono, equivalent);
    res.out = os.str();
  } catch (const UnsupportedError& e) {
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  } catch (const InputError& e) {
    res.exit_code = 1;
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

RunOutput run_text(std::string_view text, const JobOptions& overrides, OutputFormat format) {
  Job job;
  try {
    job = parse_job(text);
  } catch (const UnsupportedError& e) {
    return RunOutput{2, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InputError& e) {
    return RunOutput{1, "", std::string("error: ") + e.what() + "\n"};
  }
  JobOptions& o = job.options;
  o.reduce = o.reduce || overrides.reduce;
  o.tail_reduce = o.tail_reduce || overrides.tail_reduce;
  o.stats = o.stats || overrides.stats;
  if (overrides.monomials_upto) o.monomials_upto = overrides.monomials_upto;
  if (overrides.equivalence_target) o.equivalence_target = overrides.equivalence_target;
  return run(job, format);
}

}  // namespace ncgb
