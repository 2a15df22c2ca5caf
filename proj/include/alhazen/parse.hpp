#pragma once

#include <string>

#include "alhazen/types.hpp"

namespace alhazen::parse {

/// Parses a complex number in the forms accepted on the command line:
///   "0.5"  "-0.8i"  "0.5+0.5i"  "1e-3+2e-4i"  "i"  "-i"  "2i"
/// Whitespace is not allowed. Throws DomainError on malformed input.
Complex parse_complex(const std::string& text);

/// Formats a complex value as it would be accepted back by parse_complex,
/// with enough digits to round-trip.
std::string format_complex(Complex z);

}  // namespace alhazen::parse
