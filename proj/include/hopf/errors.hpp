#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopf {

using i64 = std::int64_t;

/// Malformed input data: bad indices, non-permutations, size caps, mismatched parents.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 64-bit signed arithmetic would wrap.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A label set is not unit-containing, star-closed and product-closed.
struct ClosureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Instance or group-spec file cannot be parsed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A subgroup fed to a normal-pair construction is not normal.
struct NormalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Floating-point construction failed a hard gate (orthogonality, rounding residue).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A proved identity failed on data that claimed to satisfy its hypotheses.
struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("64-bit overflow in addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("64-bit overflow in subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("64-bit overflow in multiplication");
  return r;
}

}  // namespace hopf
