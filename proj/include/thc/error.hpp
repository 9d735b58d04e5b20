#pragma once

#include <stdexcept>
#include <string>

namespace thc {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct ModulusMismatch : Error {
    explicit ModulusMismatch(const std::string& what) : Error(what) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& what) : Error(what) {}
};

struct ModulusTooSmall : Error {
    explicit ModulusTooSmall(const std::string& what) : Error(what) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

struct SymbolOutOfRange : Error {
    explicit SymbolOutOfRange(const std::string& what) : Error(what) {}
};

struct BOutOfRange : Error {
    explicit BOutOfRange(const std::string& what) : Error(what) {}
};

struct NoInvertibleAnchor : Error {
    explicit NoInvertibleAnchor(const std::string& what) : Error(what) {}
};

struct MalformedEnvelope : Error {
    explicit MalformedEnvelope(const std::string& what) : Error(what) {}
};

struct ParamMismatch : Error {
    explicit ParamMismatch(const std::string& what) : Error(what) {}
};

struct SingularSystem : Error {
    explicit SingularSystem(const std::string& what) : Error(what) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& what) : Error(what) {}
};

} // namespace thc
