#pragma once

#include <stdexcept>

namespace indep {

/// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
struct DomainError : Error {
  using Error::Error;
};

/// Text or JSON input that cannot be parsed at all.
struct ParseError : Error {
  using Error::Error;
};

/// Input parsed, but mixes or mismatches the exact/floating numeric modes.
struct ModeError : Error {
  using Error::Error;
};

/// A positive weight sits behind an already saturated prefix (sum = 1),
/// so no probability sequence can produce these weights.
struct InfeasibleWeights : Error {
  using Error::Error;
};

/// Weight prefix sums exceed 1.
struct NegativeDenominator : Error {
  using Error::Error;
};

/// The requested quantity is +infinity.
struct Diverges : Error {
  using Error::Error;
};

/// The series family cannot certify a finite tail bound here.
struct NoTailInfo : Error {
  using Error::Error;
};

/// A certificate was requested for a series with divergent sum.
struct NotConvergent : Error {
  using Error::Error;
};

/// Tail mass at the chosen truncation is >= 1; truncate later.
struct RatioTooLarge : Error {
  using Error::Error;
};

/// Requested construction size exceeds the configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

/// An event or subset index refers outside the constructed family.
struct IndexError : Error {
  using Error::Error;
};

}  // namespace indep
