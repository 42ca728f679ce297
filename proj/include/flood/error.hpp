#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flood {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad ids, bad colours, inconsistent sizes.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Solvers that assume a connected arena reject anything else.
class DisconnectedGraph : public InvalidArgument {
 public:
  DisconnectedGraph() : InvalidArgument("graph is not connected") {}
};

/// A move inside a sequence was rejected; `index` is its position.
class InvalidMove : public InvalidArgument {
 public:
  InvalidMove(std::size_t index, const std::string& what)
      : InvalidArgument("move " + std::to_string(index) + ": " + what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Exact search gave up at its depth budget. Distinct from "no solution".
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(int budget)
      : Error("search budget of " + std::to_string(budget) + " exceeded"), budget_(budget) {}

  int budget() const noexcept { return budget_; }

 private:
  int budget_;
};

}  // namespace flood
