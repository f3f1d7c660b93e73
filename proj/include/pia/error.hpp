// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pia {

// Violated precondition or invariant of a domain value.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent configuration document. The message names the field.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

}  // namespace pia
