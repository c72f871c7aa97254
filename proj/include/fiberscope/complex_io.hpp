#pragma once

#include <string>
#include <string_view>

#include "fiberscope/types.hpp"

namespace fiberscope {

/// "a+bi" with shortest round-trip decimals, e.g. "1+0i", "-4.5-2.25i".
std::string format_complex(Complex v);
std::string format_complex_list(const CVec& v);  // comma separated

/// Accepts "a", "bi", "a+bi", "a-bi" (also bare "i" / "-i"); decimal or
/// scientific literals. Throws ConfigError on anything else.
Complex parse_complex(std::string_view s);
CVec parse_complex_list(std::string_view csv);

}  // namespace fiberscope
