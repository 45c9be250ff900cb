#pragma once

#include <stdexcept>
#include <string>

namespace qhh {

// Input could not be tokenized/parsed against the grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Input parsed but violates a structural invariant.  The message names the invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class NotFiniteDimensional : public ValidationError {
 public:
  explicit NotFiniteDimensional(const std::string& what) : ValidationError(what) {}
};

class UnsupportedField : public ValidationError {
 public:
  explicit UnsupportedField(const std::string& what) : ValidationError(what) {}
};

class NotRadicalSquareZero : public ValidationError {
 public:
  explicit NotRadicalSquareZero(const std::string& what) : ValidationError(what) {}
};

class NotDirected : public ValidationError {
 public:
  explicit NotDirected(const std::string& what) : ValidationError(what) {}
};

class VertexMismatch : public ValidationError {
 public:
  explicit VertexMismatch(const std::string& what) : ValidationError(what) {}
};

class InputNotInKernel : public ValidationError {
 public:
  explicit InputNotInKernel(const std::string& what) : ValidationError(what) {}
};

class NotAWalk : public ValidationError {
 public:
  explicit NotAWalk(const std::string& what) : ValidationError(what) {}
};

// A consistency check the library performs on its own results failed.  Any of
// these is a hard failure: it means a computed object contradicts another.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

class ImageNotInRelativeKernel : public VerificationError {
 public:
  explicit ImageNotInRelativeKernel(const std::string& what) : VerificationError(what) {}
};

}  // namespace qhh
