#pragma once

#include <stdexcept>
#include <string>

namespace snowflake {

/// A configured limit (cosets, search states, word length) was hit.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace snowflake
