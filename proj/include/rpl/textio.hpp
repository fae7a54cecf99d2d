#pragma once

#include <string>

#include "rpl/partition.hpp"

namespace rpl {

/// Dot-separated frequency token, e.g. "1^4.5^1"; "-" for the empty
/// partition. Exponents are always written.
std::string freq_token(const Partition& pi);

/// Parenthesized frequency form, e.g. "(1^4,5^1)"; "()" when empty.
std::string freq_pretty(const Partition& pi);

/// Parses either of the two renderings above.
Partition parse_freq(const std::string& text);

/// JSON array of parts, largest first, e.g. "[5,1,1,1,1]".
std::string parts_json(const Partition& pi);

}  // namespace rpl
