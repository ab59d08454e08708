#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace orderlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which order or auxiliary-relation axiom a witness pair violates.
enum class Axiom {
  reflexivity,
  antisymmetry,
  transitivity,
  aux_below_order,     // i < j implies i <= j
  aux_saturation,      // u <= x < y <= z implies u < z
  aux_bottom,          // bottom relates to everything
};

const char* axiom_name(Axiom a);

class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, std::size_t first, std::size_t second);

  Axiom axiom() const { return axiom_; }
  std::pair<std::size_t, std::size_t> witness() const { return {first_, second_}; }

 private:
  Axiom axiom_;
  std::size_t first_;
  std::size_t second_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

class SeedViolatesOrder : public Error {
 public:
  SeedViolatesOrder(std::size_t i, std::size_t j);
  std::pair<std::size_t, std::size_t> pair() const { return {i_, j_}; }

 private:
  std::size_t i_;
  std::size_t j_;
};

class PosetMismatch : public Error {
 public:
  PosetMismatch() : Error("relations live on different posets") {}
};

class NotLower : public Error {
 public:
  using Error::Error;
};

class NotUpper : public Error {
 public:
  using Error::Error;
};

class NotPreApproximating : public Error {
 public:
  explicit NotPreApproximating(std::size_t x);
  std::size_t witness() const { return x_; }

 private:
  std::size_t x_;
};

class NotApproximating : public Error {
 public:
  explicit NotApproximating(std::size_t x);
  std::size_t witness() const { return x_; }

 private:
  std::size_t x_;
};

class ForeignElement : public Error {
 public:
  using Error::Error;
};

class UnknownSet : public Error {
 public:
  using Error::Error;
};

/// An open family missing the empty set or the universe, or not closed under
/// binary intersection and union.
class InvalidTopology : public Error {
 public:
  using Error::Error;
};

class WindowTooLarge : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON, set literals, relation specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace orderlab
