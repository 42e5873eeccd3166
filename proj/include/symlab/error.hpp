#ifndef SYMLAB_ERROR_HPP
#define SYMLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace symlab {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings (or dimensions).
class ring_mismatch : public error {
public:
  explicit ring_mismatch(const std::string& what = "ring mismatch") : error(what) {}
};

/// Malformed polynomial, ideal, or session text.
class parse_error : public error {
public:
  using error::error;
};

/// A caller-side precondition does not hold (zero polynomial, c <= 0, ...).
class precondition_violation : public error {
public:
  using error::error;
};

/// The reduction-step budget of a Groebner computation ran out. The
/// computation was abandoned; no partial result is ever returned.
class budget_exhausted : public error {
public:
  using error::error;
};

/// A saturation witness fails its validity check, or the differential
/// cross-check disagrees with the saturation-based component.
class invalid_witness : public error {
public:
  using error::error;
};

/// Asymptotic multiplier ideal did not stabilize within the p budget.
class stabilization_failure : public error {
public:
  using error::error;
};

} // namespace symlab

#endif
