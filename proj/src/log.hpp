#pragma once

#include <string_view>

namespace cornersearch::detail {

// Thread-safe warning sink on stderr.
void log_warning(std::string_view message);

}  // namespace cornersearch::detail
