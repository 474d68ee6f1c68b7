#ifndef EDGERING_ERRORS_HPP
#define EDGERING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edgering {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid multi-path description (fewer than two paths, or a path of length < 2).
class InvalidSpecError : public Error {
public:
    explicit InvalidSpecError(const std::string& what) : Error(what) {}
};

// Induced sub-multipath needs at least two paths.
class SubsetTooSmallError : public InvalidSpecError {
public:
    explicit SubsetTooSmallError(const std::string& what) : InvalidSpecError(what) {}
};

// A resource cap was exceeded (edge count, lattice size, ground set, ...).
class TooLargeError : public Error {
public:
    explicit TooLargeError(const std::string& what) : Error(what) {}
};

class NotBipartiteError : public Error {
public:
    explicit NotBipartiteError(const std::string& what) : Error(what) {}
};

class NotEvenTypeError : public Error {
public:
    explicit NotEvenTypeError(const std::string& what) : Error(what) {}
};

class NotTopBettiError : public Error {
public:
    explicit NotTopBettiError(const std::string& what) : Error(what) {}
};

// Internal consistency failure: two formula routes disagree.
class FormulaMismatchError : public Error {
public:
    explicit FormulaMismatchError(const std::string& what) : Error(what) {}
};

// Top supports of distinct induced subgraphs collided; indicates a bug.
class DisjointnessViolatedError : public Error {
public:
    explicit DisjointnessViolatedError(const std::string& what) : Error(what) {}
};

// Tensor factors share internal vertices.
class OverlapError : public Error {
public:
    explicit OverlapError(const std::string& what) : Error(what) {}
};

class EmptyTableError : public Error {
public:
    explicit EmptyTableError(const std::string& what) : Error(what) {}
};

// A claimed canonical-module generator failed the relint/minimality test.
class VerificationFailedError : public Error {
public:
    explicit VerificationFailedError(const std::string& what) : Error(what) {}
};

} // namespace edgering

#endif
