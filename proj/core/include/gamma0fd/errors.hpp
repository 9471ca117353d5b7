#pragma once

#include <stdexcept>

namespace gamma0fd {

// Base class for everything this library throws.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_modulus : error { using error::error; };
struct arithmetic_overflow : error { using error::error; };
struct not_a_unit : error { using error::error; };
struct not_a_divisor : error { using error::error; };
struct not_projective : error { using error::error; };
struct modulus_mismatch : error { using error::error; };
struct bijection_failure : error { using error::error; };
struct bad_fiber : error { using error::error; };
struct pairing_failure : error { using error::error; };
struct non_orientable_or_open : error { using error::error; };

}  // namespace gamma0fd
