#pragma once

#include <stdexcept>
#include <string>

namespace silentprobe {

/// Base class for all declared runtime errors (CLI exit code 1).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration or parameters (CLI exit code 2).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Input file does not match the expected schema (missing column, bad header).
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

/// Data is structurally valid but unusable (empty dataset, single class,
/// degenerate variance, rank deficiency).
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

} // namespace silentprobe
