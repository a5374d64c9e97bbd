#pragma once

#include <gmpxx.h>

#include <string>

#include "quiverk/errors.hpp"

namespace quiverk {

// Exact rational scalar. All arithmetic in the library is exact; no floating
// point is used anywhere in a computation path.
using Rat = mpq_class;

// Parses "p" or "p/q" with optional leading sign. Throws ParseError on any
// other shape (including q == 0).
inline Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    return j;
  };
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw ParseError("bad rational literal: " + text);
  std::size_t pos = num_end;
  if (pos != text.size()) {
    if (text[pos] != '/') throw ParseError("bad rational literal: " + text);
    std::size_t den_end = digits(pos + 1);
    if (den_end == pos + 1 || den_end != text.size())
      throw ParseError("bad rational literal: " + text);
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw ParseError("bad rational literal: " + text);
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw ParseError("zero denominator in rational literal: " + text);
  r.canonicalize();
  return r;
}

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline long rat_to_long(const Rat& r) {
  if (!rat_is_integer(r)) throw DomainError("rational is not an integer: " + rat_to_string(r));
  if (!r.get_num().fits_slong_p()) throw DomainError("integer out of range: " + rat_to_string(r));
  return r.get_num().get_si();
}

inline Rat rat_pow(const Rat& c, int k) {
  if (k < 0) {
    if (c == 0) throw DomainError("zero raised to a negative power");
    return rat_pow(1 / c, -k);
  }
  Rat r = 1;
  for (int i = 0; i < k; ++i) r *= c;
  return r;
}

// Generalized binomial coefficient C(n, k) for integer n (possibly negative)
// and k >= 0.
inline Rat rat_binomial(long n, unsigned long k) {
  Rat r = 1;
  for (unsigned long t = 0; t < k; ++t) {
    r *= Rat(n) - Rat(static_cast<long>(t));
    r /= Rat(static_cast<long>(t) + 1);
  }
  return r;
}

}  // namespace quiverk
