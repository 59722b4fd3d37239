#pragma once

#include <stdexcept>
#include <string>

namespace tfl {

// Root of the toolkit's error hierarchy. Every throwing operation in the
// library throws a subclass of Error, never a bare std::exception.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched ambient dimensions between operands.
struct DimensionError : Error {
  using Error::Error;
};

// A window with vanishing l2 norm was supplied where a nonzero one is required.
struct ZeroWindowError : Error {
  using Error::Error;
};

// Invalid lattice construction parameters (e.g. non-divisor steps).
struct LatticeError : Error {
  using Error::Error;
};

// A matrix expected to be hermitian failed the symmetry residual check.
struct NotHermitianError : Error {
  using Error::Error;
};

// A frame-dependent operation was called on a system whose lower bound is zero.
struct NotAFrameError : Error {
  using Error::Error;
};

// Symbol entries violate the sign (or realness) requirement.
struct SymbolSignError : Error {
  using Error::Error;
};

// Symbol mass found outside the prescribed phase-space region.
struct SupportError : Error {
  using Error::Error;
};

// The symbol fails the covering hypothesis min_z sum_lambda sigma(z-lambda) > 0.
struct PartitionError : Error {
  using Error::Error;
};

// The eigenfunction search ran out of candidates without producing a frame.
struct ExhaustedError : Error {
  using Error::Error;
};

// Block size does not divide the ambient dimension.
struct BlockSizeError : Error {
  using Error::Error;
};

// An ensemble with zero signals was requested.
struct EmptyEnsembleError : Error {
  using Error::Error;
};

}  // namespace tfl
