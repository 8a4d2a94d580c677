#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace farey {

// A reduced rational number, including a single point at infinity.
//
// Stored canonically: gcd(|num|, den) == 1 and den >= 0. Infinity is the
// unique value with den == 0 and is stored as 1/0 (so -1/0 parses and
// compares equal to 1/0). Ordering is the usual rational order with
// infinity strictly greater than every finite value.
class Fraction {
 public:
  // Canonicalises num/den; throws InputError if both are zero.
  Fraction(long long num, long long den);

  static Fraction infinity() { return Fraction(1, 0); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_infinity() const { return den_ == 0; }

  bool operator==(const Fraction&) const = default;
  std::strong_ordering operator<=>(const Fraction& other) const;

  // "a/b" with the canonical sign on the numerator, e.g. "-1/2", "1/0".
  std::string str() const;

  // Parses "a/b" (optional leading '-' on either component). Throws
  // InputError on malformed text.
  static Fraction parse(const std::string& text);

 private:
  long long num_;
  long long den_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

// True when the two reduced fractions span a determinant of +-1, i.e.
// |a*d - c*b| == 1 for p = a/b, q = c/d. Requires p != q.
bool farey_adjacent(const Fraction& p, const Fraction& q);

// |a*d - c*b| for p = a/b, q = c/d.
long long farey_determinant(const Fraction& p, const Fraction& q);

// The mediant (a+c)/(b+d) of two adjacent fractions. Throws InputError if
// the inputs are not adjacent (the mediant is only meaningful then).
Fraction mediant(const Fraction& p, const Fraction& q);

}  // namespace farey
