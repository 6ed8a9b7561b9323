#pragma once

#include <stdexcept>
#include <string>

namespace cugan {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters or inconsistent flag combinations. CLI exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Sampling weights collapsed to an all-zero vector (k=1, t=0, all s=1).
class DegenerateDistributionError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Analytic difficulty requested for a dataset without generator metadata.
class UnsupportedSourceError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Malformed input data (CSV rows, score files, checkpoints). CLI exit code 4.
class DataError : public Error {
public:
    using Error::Error;
};

/// Non-finite raw difficulty scores.
class InvalidScoreError : public DataError {
public:
    using DataError::DataError;
};

/// Filesystem failures. CLI exit code 4.
class IoError : public Error {
public:
    using Error::Error;
};

/// Training produced non-finite values. CLI exit code 3.
class DivergedError : public Error {
public:
    using Error::Error;
};

} // namespace cugan
