#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qmc/bigint.hpp"

namespace qmc {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroConstantTerm : public Error {
 public:
  ZeroConstantTerm() : Error("series has zero constant term; reciprocal undefined") {}
};

class NonzeroConstantTerm : public Error {
 public:
  NonzeroConstantTerm() : Error("series has nonzero constant term; exp undefined over Q") {}
};

class InvalidPrimePower : public Error {
 public:
  using Error::Error;
};

class CharNotTwo : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class BadKindParams : public Error {
 public:
  using Error::Error;
};

class NonIntegralCount : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, const BigInt& required, std::uint64_t budget)
      : Error(what + ": requires " + required.str() + " but budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  const BigInt& required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  BigInt required_;
  std::uint64_t budget_;
};

}  // namespace qmc
