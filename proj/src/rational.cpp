#include "cdgalab/rational.hpp"

#include "cdgalab/errors.hpp"

namespace cdgalab {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  if (s.empty() || s.front() == '+') throw Error("malformed rational '" + std::string(text) + "'");
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace cdgalab
