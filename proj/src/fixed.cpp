#include "ucap/fixed.hpp"

#include <cctype>
#include <stdexcept>

namespace ucap {

Fixed Fixed::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal value");
  std::size_t i = 0;
  std::int64_t whole = 0;
  bool any_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    whole = whole * 10 + (text[i] - '0');
    if (whole > 1'000'000'000) throw std::invalid_argument("decimal value out of range");
    any_digit = true;
    ++i;
  }
  std::int64_t frac = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::int64_t place = kFixedScale / 10;
    bool frac_digit = false;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      const int digit = text[i] - '0';
      if (place == 0) {
        if (digit != 0)
          throw std::invalid_argument(
              "decimal value has more than four fractional digits");
      } else {
        frac += digit * place;
        place /= 10;
      }
      frac_digit = true;
      ++i;
    }
    if (!frac_digit) throw std::invalid_argument("missing fractional digits");
    any_digit = true;
  }
  if (!any_digit || i != text.size())
    throw std::invalid_argument("malformed decimal value '" +
                                std::string(text) + "'");
  return Fixed{whole * kFixedScale + frac};
}

std::string Fixed::str() const {
  std::int64_t u = units;
  std::string sign;
  if (u < 0) {
    sign = "-";
    u = -u;
  }
  std::string out = sign + std::to_string(u / kFixedScale);
  std::int64_t frac = u % kFixedScale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 4 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += '.' + digits;
  }
  return out;
}

}  // namespace ucap
