// Copyright 2026 the dst authors
// Licensed under the Apache License, Version 2.0.

#ifndef DST_ERRORS_HPP
#define DST_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dst {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAGraphError : Error {
  using Error::Error;
};

struct UndefinedError : Error {
  using Error::Error;
};

struct NotASetError : Error {
  using Error::Error;
};

struct MalformedError : Error {
  using Error::Error;
};

struct NotUpwardClosedError : Error {
  NotUpwardClosedError(std::string msg, std::string a, std::string sup,
                       std::string b)
      : Error(std::move(msg)), witnessA(std::move(a)),
        witnessSuperset(std::move(sup)), witnessB(std::move(b)) {}
  std::string witnessA, witnessSuperset, witnessB;
};

struct OutOfCarrierError : Error {
  using Error::Error;
};

struct IndexMismatchError : Error {
  using Error::Error;
};

struct DomainMismatchError : Error {
  using Error::Error;
};

struct CheckFailedError : Error {
  using Error::Error;
};

struct BudgetExceededError : Error {
  BudgetExceededError(std::string msg, uint64_t size)
      : Error(std::move(msg)), computedSize(size) {}
  uint64_t computedSize;
};

struct NotAPullbackError : Error {
  using Error::Error;
};

struct IllTypedError : Error {
  IllTypedError(std::string msg, std::string nodePath)
      : Error(std::move(msg)), node(std::move(nodePath)) {}
  std::string node;
};

struct ParseError : Error {
  ParseError(std::string msg, int line, int column)
      : Error(std::move(msg)), line(line), column(column) {}
  int line;
  int column;
};

}  // namespace dst

#endif  // DST_ERRORS_HPP
