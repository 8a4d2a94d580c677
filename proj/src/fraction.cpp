#include "farey/fraction.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <ostream>

#include "farey/errors.hpp"

namespace farey {

Fraction::Fraction(long long num, long long den) {
  if (num == 0 && den == 0) {
    throw InputError("fraction 0/0 is undefined");
  }
  if (den == 0) {
    num_ = 1;  // canonical infinity
    den_ = 0;
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(std::abs(num), den);
  num_ = num / g;
  den_ = den / g;
}

std::strong_ordering Fraction::operator<=>(const Fraction& other) const {
  if (is_infinity() && other.is_infinity()) return std::strong_ordering::equal;
  if (is_infinity()) return std::strong_ordering::greater;
  if (other.is_infinity()) return std::strong_ordering::less;
  // Cross-multiply; magnitudes in this library stay far below overflow.
  return num_ * other.den_ <=> other.num_ * den_;
}

std::string Fraction::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction Fraction::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()) {
    throw InputError("malformed fraction '" + text + "'");
  }
  auto parse_part = [&](const std::string& part) -> long long {
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(part, &pos);
    } catch (const std::exception&) {
      throw InputError("malformed fraction '" + text + "'");
    }
    if (pos != part.size()) {
      throw InputError("malformed fraction '" + text + "'");
    }
    return value;
  };
  long long num = parse_part(text.substr(0, slash));
  long long den = parse_part(text.substr(slash + 1));
  if (num == 0 && den == 0) {
    throw InputError("fraction 0/0 is undefined");
  }
  return Fraction(num, den);
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
  return os << f.str();
}

long long farey_determinant(const Fraction& p, const Fraction& q) {
  return std::abs(p.num() * q.den() - q.num() * p.den());
}

bool farey_adjacent(const Fraction& p, const Fraction& q) {
  if (p == q) {
    throw InputError("adjacency is only defined for distinct fractions");
  }
  return farey_determinant(p, q) == 1;
}

Fraction mediant(const Fraction& p, const Fraction& q) {
  if (!farey_adjacent(p, q)) {
    throw InputError("mediant requires adjacent fractions, got " + p.str() +
                     " and " + q.str());
  }
  return Fraction(p.num() + q.num(), p.den() + q.den());
}

}  // namespace farey
