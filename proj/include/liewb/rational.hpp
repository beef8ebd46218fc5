#ifndef LIEWB_RATIONAL_HPP
#define LIEWB_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace liewb {

// Exact rational scalar. mpq_class keeps gcd(|num|,den)=1 and den>0 after
// canonicalize(); every constructor path below canonicalizes.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

Rational rat_parse(const std::string& text);
std::string rat_str(const Rational& q);

Rational rat_binomial(unsigned long n, unsigned long k);
Rational rat_factorial(unsigned long n);

} // namespace liewb

#endif
