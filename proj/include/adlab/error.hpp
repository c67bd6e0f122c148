#pragma once

#include <stdexcept>
#include <string>

namespace adlab {

/// Domain error carrying a stable machine-readable kind (e.g. "NonZeroSum").
/// The CLI reports the kind verbatim and exits with status 1.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace adlab
