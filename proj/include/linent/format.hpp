#pragma once

#include <string>

namespace linent {

/// printf-style %.*g rendering of a double.
std::string format_real(double value, int significant_digits);

/// Minimal JSON string escaping: backslash, double quote, control bytes.
std::string json_escape(const std::string& s);

}  // namespace linent
