#include "log.hpp"

#include <iostream>
#include <mutex>

namespace cornersearch::detail {

void log_warning(std::string_view message) {
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  std::clog << "warning: " << message << '\n';
}

}  // namespace cornersearch::detail
