#pragma once

#include <stdexcept>

namespace qfa {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The numeric evaluation landed inside the tolerance band while the exact
// coefficients are nonzero: the declared basis approximations are too coarse
// to decide the sign.
struct ambiguous_sign_error : error {
  using error::error;
};

struct unknown_irrep_error : error {
  using error::error;
};

// Malformed or rejected input data.
struct schema_error : error {
  using error::error;
};

struct unsupported_error : error {
  using error::error;
};

// Degenerate inputs outside the supported regime (rep_dim < 2).
struct dimension_error : error {
  using error::error;
};

// Hard caps: subset enumeration beyond 24 vertices, path enumeration blowup.
struct limit_error : error {
  using error::error;
};

}  // namespace qfa
