#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace osk {

// Exact rational scalar used for all metric data.
using Rat = mpq_class;

struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double to_double(const Rat& r) { return r.get_d(); }

// Parses "p/q" or "p"; denominators must be nonzero.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw input_error("bad rational literal: " + s);
  if (r.get_den() == 0) throw input_error("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// gcd of two nonnegative rationals: largest r with a, b integer multiples of r.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return b;
  if (b == 0) return a;
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), mpz_class(a.get_num() * b.get_den()).get_mpz_t(),
          mpz_class(b.get_num() * a.get_den()).get_mpz_t());
  den = a.get_den() * b.get_den();
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline long rat_to_long(const Rat& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw input_error("rational is not a small integer: " + rat_to_string(r));
  return r.get_num().get_si();
}

// A time value of the form log(arg) with arg an exact rational >= 1.
// Arclength positions along folding paths have this shape, so they can be
// stored and compared exactly.
struct LogTime {
  Rat arg = 1;
  double value() const { return std::log(to_double(arg)); }
  friend bool operator==(const LogTime& a, const LogTime& b) { return a.arg == b.arg; }
  friend bool operator<(const LogTime& a, const LogTime& b) { return a.arg < b.arg; }
  friend bool operator<=(const LogTime& a, const LogTime& b) { return a.arg <= b.arg; }
};

}  // namespace osk
