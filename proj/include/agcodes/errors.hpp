/**
 * @file errors.hpp
 * @brief Exception types shared by the library.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace agc {

/// Base class of everything the library throws on purpose.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments: non-prime characteristic, repeated evaluation points, empty index sets, ...
class DomainError : public Error {
   public:
    using Error::Error;
};

/// The requested object is outside what a backend can compute (e.g. multi-point divisors on the Hermitian curve).
class CapabilityError : public Error {
   public:
    using Error::Error;
};

/// An exhaustive computation would exceed its configured size limit.
class GuardExceeded : public Error {
   public:
    using Error::Error;
};

/// A construction-time identity did not hold. Indicates a bug, never bad input.
class AssertionFailure : public Error {
   public:
    using Error::Error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond) throw DomainError(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw AssertionFailure(what);
}

}  // namespace detail

}  // namespace agc
