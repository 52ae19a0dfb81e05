#pragma once

#include <stdexcept>
#include <string>

namespace affweights {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidRank : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class LevelMismatch : public Error {
public:
    using Error::Error;
};

class NotInLattice : public Error {
public:
    using Error::Error;
};

class NotEquivalentToLambda : public Error {
public:
    using Error::Error;
};

class NotAWeight : public Error {
public:
    using Error::Error;
};

/// Broken internal invariant; indicates corrupted tables or a bug, never a
/// legitimate answer.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace affweights
