#pragma once

#include <stdexcept>
#include <string>

namespace bwtruns {

// Precondition of an operation was not met (bad index, empty word, bad directive).
class contract_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input too large for the requested operation (render limit, search cap, length cap).
class size_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A string that is not the conjugate-BWT of any word.
class invalid_image_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested prediction is not covered by a proven closed form.
class unsupported_order_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace bwtruns
