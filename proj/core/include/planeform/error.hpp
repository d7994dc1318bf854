#pragma once

#include <stdexcept>
#include <string>

namespace planeform {

// Thrown for precondition violations and inputs outside an operation's domain.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace planeform
