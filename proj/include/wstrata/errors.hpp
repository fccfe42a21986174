#pragma once

#include <stdexcept>
#include <string>

namespace wstrata {

// Exit-code contract used by the CLI: 0 = pass, 1 = a mathematical assertion
// was falsified, 2 = usage or resource error.  Library code signals the last
// category with the two exception types below; plain std::invalid_argument is
// used for precondition violations (bad rank, malformed input, ...).

struct ResourceCapError : std::runtime_error {
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wstrata
