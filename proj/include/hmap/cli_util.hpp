#ifndef HMAP_CLI_UTIL_HPP
#define HMAP_CLI_UTIL_HPP

#include <string>

#include "hmap/series.hpp"

namespace hmap {

/// Parse "a+bi" (also plain "a", "bi", "i") or polar "r@theta" (radians).
Complex parse_complex(const std::string& text);

/// Shortest round-trip decimal, '.' separator.
std::string format_double(double x);

/// Complex for CSV cells: plain real when im == 0, otherwise "a+bi".
std::string format_complex(Complex z);

}  // namespace hmap

#endif
