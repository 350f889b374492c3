#pragma once

#include <stdexcept>
#include <string>

namespace affcrys {

/// Base class for all library errors.
class CrystalError : public std::runtime_error {
 public:
  explicit CrystalError(const std::string& what) : std::runtime_error(what) {}
};

/// Rank or orientation data rejected by make_params (or a precondition on it).
class InvalidParams : public CrystalError {
 public:
  using CrystalError::CrystalError;
};

/// The monomial is not a finite product of X-variables.
class NotXFactorizable : public CrystalError {
 public:
  using CrystalError::CrystalError;
};

/// The monomial is not a zero-sum product of X_{i,0}'s.
class NotInCoherentLattice : public CrystalError {
 public:
  using CrystalError::CrystalError;
};

/// A shifted-product specification repeats a shift value.
class DuplicateShift : public CrystalError {
 public:
  using CrystalError::CrystalError;
};

/// An unlimited generation request crossed the hard safety cap.
class LimitExceeded : public CrystalError {
 public:
  using CrystalError::CrystalError;
};

/// Two graphs with different Cartan parameters were combined.
class ParamsMismatch : public CrystalError {
 public:
  using CrystalError::CrystalError;
};

/// 64-bit exponent/weight arithmetic overflowed.
class ArithmeticOverflow : public CrystalError {
 public:
  using CrystalError::CrystalError;
};

namespace detail {

inline long long chk_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer addition overflow");
  return r;
}

inline long long chk_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer multiplication overflow");
  return r;
}

}  // namespace detail
}  // namespace affcrys
