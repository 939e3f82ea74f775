#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chern {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// An argument violated a constructor or operation contract.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// evaluate() met a variable that has no value in the supplied point.
class MissingAssignment : public Error {
public:
    using Error::Error;
};

/// A negative index was passed where only nonnegative ones make sense.
class NegativeIndex : public Error {
public:
    using Error::Error;
};

/// A partition has more nonzero parts than the variable list it is applied to.
class PartitionTooLong : public Error {
public:
    using Error::Error;
};

/// A 1-based index fell outside its valid range.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// WeightVector entries must be pairwise distinct.
class DuplicateWeight : public Error {
public:
    using Error::Error;
};

/// Exponent arithmetic left the supported 32-bit range.
class ExponentOverflow : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition of one of the evaluation formulas failed.
/// The command-line tool maps this family to exit code 2; every other
/// error exits with code 1.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Total degree exceeds the bound required by the formula in use.
class DegreeTooHigh : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Some partial degree exceeds the per-variable bound of the formula in use.
class PartialDegreeTooHigh : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Polynomial is not invariant under permutations of its declared alphabet.
class NotSymmetric : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Polynomial is not invariant within each of the two declared alphabets.
class NotDoublySymmetric : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A homogeneous component of the integrand has degree above k(n-k).
class DegreeExceedsDimension : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Syntax error, reported with a 1-based byte offset and the set of tokens
/// that would have been accepted at that position.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, std::string found)
        : Error(format(offset, expected, found)),
          offset_(offset),
          expected_(std::move(expected)),
          found_(std::move(found)) {}

    ParseError(std::size_t offset, const std::string& message)
        : Error("parse error at byte " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    static std::string format(std::size_t offset,
                              const std::vector<std::string>& expected,
                              const std::string& found) {
        std::string msg = "parse error at byte " + std::to_string(offset) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) {
                bool last = i + 1 == expected.size();
                msg += last ? (expected.size() > 2 ? ", or " : " or ") : ", ";
            }
            msg += expected[i];
        }
        if (!found.empty()) msg += "; found " + found;
        return msg;
    }

    std::size_t offset_ = 0;
    std::vector<std::string> expected_;
    std::string found_;
};

}  // namespace chern
