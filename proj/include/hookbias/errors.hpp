#pragma once

#include <stdexcept>
#include <string>

namespace hookbias {

/// Malformed partition text.
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller misuse: an argument outside the operation's domain
/// (wrong parity regime, input not in the map's domain set, bad range).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An inverse map was handed an object that no forward image can produce.
/// Kept distinct from domain_error because it is evidence about injectivity.
class not_in_image_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checked integer arithmetic overflowed.
class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace hookbias
