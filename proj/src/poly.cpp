#include "loday/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace loday {

int Ring::varIndex(const std::string& name) const {
  for (int i = 0; i < numVars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::constant(const Ring& ring, const Rational& c) {
  Poly p(ring);
  p.insertTerm(Exponents(ring.numVars(), 0), c);
  return p;
}

Poly Poly::variable(const Ring& ring, int varIdx) {
  if (varIdx < 0 || varIdx >= ring.numVars())
    throw std::invalid_argument("Poly::variable: index out of range");
  Exponents e(ring.numVars(), 0);
  e[varIdx] = 1;
  return monomial(ring, e, Rational(1));
}

Poly Poly::monomial(const Ring& ring, const Exponents& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != ring.numVars())
    throw std::invalid_argument("Poly::monomial: exponent vector length mismatch");
  Poly p(ring);
  p.insertTerm(exps, c);
  return p;
}

bool Poly::isConstant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && totalDegree() == 0;
}

Rational Poly::constantTerm() const {
  Exponents zero(ring_.numVars(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::totalDegree() const {
  if (terms_.empty()) return -1;
  const Exponents& top = terms_.rbegin()->first;
  return std::accumulate(top.begin(), top.end(), 0);
}

void Poly::insertTerm(const Exponents& e, const Rational& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

void Poly::requireSameRing(const Poly& o) const {
  if (ring_ != o.ring_)
    throw std::invalid_argument("Poly: mismatched variable lists");
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  requireSameRing(o);
  for (const auto& [e, c] : o.terms_) insertTerm(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  requireSameRing(o);
  for (const auto& [e, c] : o.terms_) insertTerm(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.requireSameRing(b);
  Poly r(a.ring_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.insertTerm(e, ca * cb);
    }
  return r;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly r(p.ring());
  if (c.isZero()) return r;
  for (const auto& [e, pc] : p.terms()) r.insertTerm(e, c * pc);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

Poly Poly::partial(int varIdx) const {
  if (varIdx < 0 || varIdx >= ring_.numVars())
    throw std::invalid_argument("Poly::partial: unknown variable index");
  Poly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[varIdx] == 0) continue;
    Exponents d(e);
    d[varIdx] -= 1;
    r.insertTerm(d, Rational(e[varIdx]) * c);
  }
  return r;
}

Poly Poly::partial(const std::string& varName) const {
  const int i = ring_.varIndex(varName);
  if (i < 0) throw std::invalid_argument("Poly::partial: unknown variable '" + varName + "'");
  return partial(i);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest graded-lex term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Exponents& e = it->first;
    const Rational& c = it->second;
    const Rational a = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.varName(static_cast<int>(i));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << a.str();
    } else if (a == Rational(1)) {
      os << mono;
    } else {
      os << a.str() << "*" << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

namespace {

struct PolyLexer {
  const std::string& s;
  size_t pos = 0;

  explicit PolyLexer(const std::string& text) : s(text) {}

  void skipSpace() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool atEnd() {
    skipSpace();
    return pos >= s.size();
  }
  char peek() {
    skipSpace();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skipSpace();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skipSpace();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("Poly::parse: expected digits at position " +
                                                  std::to_string(start) + " in '" + s + "'");
    return s.substr(start, pos - start);
  }
  std::string identifier() {
    skipSpace();
    size_t start = pos;
    auto isIdent = [](char c, bool lead) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
             (!lead && std::isdigit(static_cast<unsigned char>(c)));
    };
    while (pos < s.size() && isIdent(s[pos], pos == start)) ++pos;
    if (pos == start) throw std::invalid_argument("Poly::parse: expected identifier at position " +
                                                  std::to_string(start) + " in '" + s + "'");
    return s.substr(start, pos - start);
  }
};

}  // namespace

Poly Poly::parse(const Ring& ring, const std::string& text) {
  PolyLexer lex(text);
  Poly result(ring);
  bool expectTerm = true;
  int sign = 1;
  if (lex.atEnd()) throw std::invalid_argument("Poly::parse: empty input");
  while (!lex.atEnd()) {
    if (!expectTerm) {
      if (lex.consume('+')) {
        sign = 1;
      } else if (lex.consume('-')) {
        sign = -1;
      } else {
        throw std::invalid_argument("Poly::parse: expected '+' or '-' near position " +
                                    std::to_string(lex.pos) + " in '" + text + "'");
      }
      expectTerm = true;
      continue;
    }
    if (lex.consume('-')) sign = -sign;
    // One term: '*'-joined factors, each a rational or var^exp.
    Rational coeff(1);
    Exponents exps(ring.numVars(), 0);
    bool more = true;
    while (more) {
      char c = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = lex.number();
        std::string rat = num;
        if (lex.consume('/')) rat += "/" + lex.number();
        coeff *= Rational::parse(rat);
      } else {
        std::string name = lex.identifier();
        int vi = ring.varIndex(name);
        if (vi < 0)
          throw std::invalid_argument("Poly::parse: unknown variable '" + name + "' in '" +
                                      text + "'");
        int e = 1;
        if (lex.consume('^')) e = std::stoi(lex.number());
        exps[vi] += e;
      }
      more = lex.consume('*');
    }
    result += Poly::monomial(ring, exps, Rational(sign) * coeff);
    sign = 1;
    expectTerm = false;
  }
  if (expectTerm) throw std::invalid_argument("Poly::parse: dangling sign in '" + text + "'");
  return result;
}

Derivation::Derivation(const Ring& ring)
    : ring_(ring), coeffs_(ring.numVars(), Poly(ring)) {}

Derivation::Derivation(Ring ring, std::vector<Poly> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != ring_.numVars())
    throw std::invalid_argument("Derivation: one coefficient per variable required");
  for (const auto& c : coeffs_)
    if (c.ring() != ring_)
      throw std::invalid_argument("Derivation: mismatched variable lists");
}

Derivation Derivation::coordinate(const Ring& ring, int varIdx) {
  Derivation d(ring);
  d.coeffs_.at(varIdx) = Poly::constant(ring, Rational(1));
  return d;
}

bool Derivation::isZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& p) { return p.isZero(); });
}

Poly Derivation::apply(const Poly& p) const {
  if (p.ring() != ring_)
    throw std::invalid_argument("Derivation::apply: mismatched variable lists");
  Poly r(ring_);
  for (int i = 0; i < ring_.numVars(); ++i) {
    if (coeffs_[i].isZero()) continue;
    r += coeffs_[i] * p.partial(i);
  }
  return r;
}

Derivation Derivation::operator-() const {
  Derivation r(ring_);
  for (int i = 0; i < ring_.numVars(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

Derivation& Derivation::operator+=(const Derivation& o) {
  if (ring_ != o.ring_) throw std::invalid_argument("Derivation: mismatched variable lists");
  for (int i = 0; i < ring_.numVars(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Derivation operator-(Derivation a, const Derivation& b) { return a += -b; }

Derivation operator*(const Poly& f, const Derivation& X) {
  Derivation r(X.ring_);
  for (int i = 0; i < X.ring_.numVars(); ++i) r.coeffs_[i] = f * X.coeffs_[i];
  return r;
}

Derivation commutator(const Derivation& X, const Derivation& Y) {
  if (X.ring_ != Y.ring_)
    throw std::invalid_argument("commutator: mismatched variable lists");
  Derivation r(X.ring_);
  for (int i = 0; i < X.ring_.numVars(); ++i)
    r.coeffs_[i] = X.apply(Y.coeffs_[i]) - Y.apply(X.coeffs_[i]);
  return r;
}

bool operator==(const Derivation& a, const Derivation& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

std::string Derivation::str() const {
  std::string out;
  for (int i = 0; i < ring_.numVars(); ++i) {
    if (coeffs_[i].isZero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].str() + ")*d/d" + ring_.varName(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace loday
