#include "loday/rational.hpp"

#include <ostream>

namespace loday {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace loday
