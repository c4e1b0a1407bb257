#include "schaefer/fraction.hpp"

#include <cstdlib>

#include "schaefer/errors.hpp"

namespace schaefer {

std::string to_string(const Fraction& f) {
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

Fraction parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Fraction(std::stoll(text));
    }
    const std::int64_t num = std::stoll(text.substr(0, slash));
    const std::int64_t den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw UsageError("fraction denominator must be non-zero: " + text);
    return Fraction(num, den);
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse fraction: " + text);
  } catch (const std::out_of_range&) {
    throw UsageError("fraction out of range: " + text);
  }
}

}  // namespace schaefer
