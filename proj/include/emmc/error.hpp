#pragma once

#include <stdexcept>
#include <string>

namespace emmc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MeshError : public Error {
public:
    using Error::Error;
};

class ConformalError : public Error {
public:
    using Error::Error;
};

class ComponentError : public Error {
public:
    using Error::Error;
};

class FemError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class OptimizerError : public Error {
public:
    using Error::Error;
};

} // namespace emmc
