#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lcalc {

// Minimal value-or-error holder. Partial operations (merge, decrement,
// inference, stepping) return one of these instead of throwing.
template <class T, class E>
class Result {
 public:
  Result(T value) : data_(std::in_place_index<0>, std::move(value)) {}
  Result(E error) : data_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const noexcept { return data_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Result::value() on error");
    return std::get<0>(data_);
  }
  // By value, so range-for over a temporary's value() stays valid.
  T value() && {
    if (!ok()) throw std::logic_error("Result::value() on error");
    return std::get<0>(std::move(data_));
  }
  const E& error() const& {
    if (ok()) throw std::logic_error("Result::error() on value");
    return std::get<1>(data_);
  }

  const T* operator->() const { return &value(); }
  const T& operator*() const& { return value(); }

 private:
  std::variant<T, E> data_;
};

// Address of a subterm: the sequence of constructor-argument indices taken
// from the root.
using TermPath = std::vector<std::size_t>;

// "e" for the root, otherwise dot separated ("0.1.0").
std::string path_to_string(const TermPath& path);
// Inverse of path_to_string. Throws std::invalid_argument on malformed text.
TermPath path_from_string(const std::string& text);

// Error raised by every parser in the library.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Raised when an operation is asked to do more than its fuel allows.
struct FuelExhausted {
  std::size_t steps_taken = 0;
};

// Raised by step functions when no rule applies at the requested position.
struct NoRedex {
  TermPath at;
};

}  // namespace lcalc
