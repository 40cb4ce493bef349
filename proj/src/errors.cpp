#include "zdgb/errors.hpp"

namespace zdgb {

void internal_failure(const char* expr, const char* file, int line, const std::string& msg) {
  throw InternalError(std::string(file) + ":" + std::to_string(line) + ": check `" + expr +
                      "` failed: " + msg);
}

}  // namespace zdgb
