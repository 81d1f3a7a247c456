#pragma once

#include <stdexcept>
#include <string>

namespace descent_lab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidRank : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class InvalidSubset : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

/// Requested rank exceeds what the chosen strategy (or the configured bound) supports.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A precondition that the library checks instead of trusting the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Two computation routes that must agree did not.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON/CSV input when parsing documents.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace descent_lab
