#pragma once

#include <stdexcept>

namespace bellpulse {

// Base type for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// density-matrix / mode-set invariant violated beyond tolerance
struct InvalidState : Error { using Error::Error; };
// intermediate spectrum failed a positivity check beyond tolerance
struct NumericalFailure : Error { using Error::Error; };
// argument outside its mathematical domain (t < 0, C outside [0,1], ...)
struct DomainError : Error { using Error::Error; };
// truncated spectral support is empty or otherwise unusable
struct BadSupport : Error { using Error::Error; };
// closed form not available for the requested coupling shape
struct ShapeUnsupported : Error { using Error::Error; };
// oracle Hilbert-space dimension exceeds the hard cap
struct DimensionCap : Error { using Error::Error; };
// Fock truncation leak exceeded its threshold; raise fock_dim
struct TruncationOverflow : Error { using Error::Error; };
// analytic/oracle traces evaluated on different time grids
struct GridMismatch : Error { using Error::Error; };
// refine_peak bracket does not enclose a local maximum
struct NoBracket : Error { using Error::Error; };
// config file parse or validation failure (message carries key/line info)
struct ConfigError : Error { using Error::Error; };
// file read/write failure
struct IoError : Error { using Error::Error; };

} // namespace bellpulse
