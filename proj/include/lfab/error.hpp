// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lfab
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not match.
class DimensionError : public Error
{
public:
  using Error::Error;
};

/// An argument violates a documented precondition.
class ArgumentError : public Error
{
public:
  using Error::Error;
};

/// A dense kernel failed to converge or produced an invalid result.
class ConvergenceError : public Error
{
public:
  using Error::Error;
};

/// A dense reference computation was requested above its size limit.
class SizeGuardError : public Error
{
public:
  using Error::Error;
};

/// Malformed input file. Carries the 1-based line number (0 when not applicable).
class ParseError : public Error
{
public:
  ParseError(const std::string &what, std::size_t line)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
  {
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace lfab
