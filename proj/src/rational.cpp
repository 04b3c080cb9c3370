#include "ag/rational.hpp"

#include <stdexcept>

namespace ag {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = 0;
  if (text[pos] == '-' || text[pos] == '+') ++pos;
  bool digits = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
    digits = true;
  }
  if (!digits) throw std::invalid_argument("malformed rational literal: " + text);
  if (pos != text.size()) {
    if (text[pos] != '/') throw std::invalid_argument("malformed rational literal: " + text);
    ++pos;
    bool den_digits = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      den_digits = true;
    }
    if (!den_digits || pos != text.size())
      throw std::invalid_argument("malformed rational literal: " + text);
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw std::invalid_argument("rational with zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::size_t bit_size(const Rational& r) {
  return mpz_sizeinbase(mpq_numref(r.get_mpq_t()), 2) +
         mpz_sizeinbase(mpq_denref(r.get_mpq_t()), 2);
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace ag
