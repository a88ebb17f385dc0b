#pragma once

#include <stdexcept>
#include <string>

namespace anisovac {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// tensor layer
struct NotHermitian : Error {
  explicit NotHermitian(const std::string& msg) : Error(msg) {}
};
struct NotPositive : Error {
  explicit NotPositive(const std::string& msg) : Error(msg) {}
};

// vacuum models
struct NonPositiveFrequency : Error {
  explicit NonPositiveFrequency(const std::string& msg) : Error(msg) {}
};
struct NonPositiveWavenumber : Error {
  explicit NonPositiveWavenumber(const std::string& msg) : Error(msg) {}
};
struct NonPositiveDistance : Error {
  explicit NonPositiveDistance(const std::string& msg) : Error(msg) {}
};
struct InvalidGeometry : Error {
  explicit InvalidGeometry(const std::string& msg) : Error(msg) {}
};
struct OutOfRange : Error {
  explicit OutOfRange(const std::string& msg) : Error(msg) {}
};
struct ValidationFailed : Error {
  explicit ValidationFailed(const std::string& msg) : Error(msg) {}
};
struct TableFormatError : Error {
  explicit TableFormatError(const std::string& msg) : Error(msg) {}
};

// coefficients
struct NonPositiveInput : Error {
  explicit NonPositiveInput(const std::string& msg) : Error(msg) {}
};
struct CauchySchwarzViolation : Error {
  explicit CauchySchwarzViolation(const std::string& msg) : Error(msg) {}
};

// dynamics
struct InvalidInitialState : Error {
  explicit InvalidInitialState(const std::string& msg) : Error(msg) {}
};
struct StepTooLarge : Error {
  explicit StepTooLarge(const std::string& msg) : Error(msg) {}
};
struct PositivityViolation : Error {
  explicit PositivityViolation(const std::string& msg) : Error(msg) {}
};

// two-photon
struct PoleProximity : Error {
  explicit PoleProximity(const std::string& msg) : Error(msg) {}
};
struct NonPositiveEmissionFrequency : Error {
  explicit NonPositiveEmissionFrequency(const std::string& msg) : Error(msg) {}
};
struct BracketContainsPole : Error {
  explicit BracketContainsPole(const std::string& msg) : Error(msg) {}
};

}  // namespace anisovac
