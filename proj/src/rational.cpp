#include "mms/rational.hpp"

#include "mms/errors.hpp"

namespace mms {

Rational rat(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      throw InputError("malformed rational literal: '" + text + "'");
    }
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw InputError("malformed rational literal: '" + text + "'");
  }
  if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  if (q.get_den() < 0) throw InputError("negative denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

}  // namespace mms
