#include "alhazen/parse.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace alhazen::parse {

namespace {

struct Term {
  double value = 0.0;
  bool imaginary = false;
};

// One signed term: "0.5", "-0.8i", "i", "-i", "1e-3i". Returns false on any
// syntax problem; pos is advanced past the consumed text on success.
bool scan_term(const std::string& text, size_t& pos, Term& term) {
  double sign = 1.0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') sign = -1.0;
    ++pos;
  }
  if (pos >= text.size()) return false;
  if (text[pos] == 'i') {
    ++pos;
    term.value = sign;
    term.imaginary = true;
    return true;
  }
  if (text[pos] == '+' || text[pos] == '-') return false;
  double mag = 0.0;
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, mag);
  if (ec != std::errc{} || ptr == first) return false;
  pos = static_cast<size_t>(ptr - text.data());
  term.value = sign * mag;
  term.imaginary = false;
  if (pos < text.size() && text[pos] == 'i') {
    ++pos;
    term.imaginary = true;
  }
  return true;
}

std::string shortest_digits(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const auto fail = [&]() -> DomainError {
    return DomainError("cannot parse complex number: " + text);
  };

  size_t pos = 0;
  Term first;
  if (!scan_term(text, pos, first)) throw fail();

  if (pos == text.size()) {
    const Complex z = first.imaginary ? Complex{0.0, first.value}
                                      : Complex{first.value, 0.0};
    if (!is_finite(z)) throw fail();
    return z;
  }

  if (text[pos] != '+' && text[pos] != '-') throw fail();
  Term second;
  if (!scan_term(text, pos, second)) throw fail();
  if (pos != text.size() || first.imaginary || !second.imaginary) throw fail();

  const Complex z{first.value, second.value};
  if (!is_finite(z)) throw fail();
  return z;
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return shortest_digits(z.real());
  const std::string imag_part = shortest_digits(std::abs(z.imag())) + "i";
  if (z.real() == 0.0)
    return (z.imag() < 0.0 ? "-" : "") + imag_part;
  return shortest_digits(z.real()) + (z.imag() < 0.0 ? "-" : "+") + imag_part;
}

}  // namespace alhazen::parse
