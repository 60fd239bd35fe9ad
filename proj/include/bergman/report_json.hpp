#pragma once

#include <string>
#include <string_view>

#include "bergman/verify.hpp"

namespace bergman {

// Non-finite numbers are written as the strings "inf" / "-inf" so that the
// documents stay valid JSON.

std::string to_json(const BoundReport& report);
BoundReport parse_bound_report(std::string_view text);

std::string to_json(const CheckReport& report);
CheckReport parse_check_report(std::string_view text);

}  // namespace bergman
