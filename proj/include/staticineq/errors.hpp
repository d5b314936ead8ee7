#pragma once

#include <stdexcept>
#include <string>

namespace staticineq {

// Error taxonomy mirrored by the CLI exit codes:
//   config/domain errors -> 2, hypothesis violations -> 3, I/O -> 4.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Point fails the model constraint (off the hyperboloid/sphere beyond tolerance).
class InvalidPointError : public Error {
public:
  using Error::Error;
};

// Request outside the admissible parameter domain (e.g. hemisphere margin).
class DomainError : public Error {
public:
  using Error::Error;
};

// API misuse: mismatched mesh/field, unsupported model for an operation, ...
class UsageError : public Error {
public:
  using Error::Error;
};

class UnsupportedError : public Error {
public:
  using Error::Error;
};

// Degenerate triangles, failed manifold checks and similar mesh defects.
class MeshQualityError : public Error {
public:
  using Error::Error;
};

// A theorem hypothesis fails on the data (H <= 0 at some vertex).
class HypothesisViolationError : public Error {
public:
  HypothesisViolationError(const std::string& msg, int vertex)
      : Error(msg), vertex_(vertex) {}
  int vertex() const { return vertex_; }

private:
  int vertex_ = -1;
};

// Malformed mesh/field file; carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, long line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  long line() const { return line_; }

private:
  long line_ = 0;
};

class NumericError : public Error {
public:
  NumericError(const std::string& msg, long iterations)
      : Error(msg), iterations_(iterations) {}
  long iterations() const { return iterations_; }

private:
  long iterations_ = 0;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace staticineq
