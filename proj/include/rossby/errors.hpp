#pragma once

#include <stdexcept>
#include <string>

namespace rossby {

// Base for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter is outside its accepted range (H <= 0, n < 1, kappa <= 0, ...).
struct BadParameter : Error {
    explicit BadParameter(const std::string& msg) : Error("BadParameter: " + msg) {}
};

// A family-specific inequality between parameters is violated.
struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& msg) : Error("ConstraintViolation: " + msg) {}
};

// The denominator of the resonance constant M is below tolerance.
struct ResonantDepth : Error {
    explicit ResonantDepth(const std::string& msg) : Error("ResonantDepth: " + msg) {}
};

// Evaluation point outside the vertical domain [0, H] or an invalid grid.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error("DomainError: " + msg) {}
};

// Superposition members do not share a wavenumber.
struct MixedWavenumbers : Error {
    explicit MixedWavenumbers(const std::string& msg) : Error("MixedWavenumbers: " + msg) {}
};

// Horizontal mode wavenumber does not match the family wavenumber.
struct WavenumberMismatch : Error {
    explicit WavenumberMismatch(const std::string& msg) : Error("WavenumberMismatch: " + msg) {}
};

// Bessel evaluation outside the supported (m, x) envelope.
struct OutOfEnvelope : Error {
    explicit OutOfEnvelope(const std::string& msg) : Error("OutOfEnvelope: " + msg) {}
};

// File reading/writing failure; message carries the path.
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error("IoError: " + msg) {}
};

// Run-configuration parse or schema failure; message carries the field path.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error("ConfigError: " + msg) {}
};

}  // namespace rossby
