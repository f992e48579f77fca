#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace sylowbench {

// Base of every error thrown by the engines. The C API maps each subclass
// onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

// Element closure grew past the configured cap. `partial` is the number of
// elements found when enumeration stopped.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap, std::uint64_t partial)
      : Error(what + ": cap " + std::to_string(cap) + " exceeded (" + std::to_string(partial) +
              " elements found)"),
        cap_(cap),
        partial_(partial) {}

  std::uint64_t cap() const { return cap_; }
  std::uint64_t partial() const { return partial_; }

 private:
  std::uint64_t cap_;
  std::uint64_t partial_;
};

// Conjugation (or other) orbit larger than the orbit cap. `required` is a
// decimal string because it can exceed 64 bits (e.g. classes in S_34); it is
// empty when the size is not known in advance.
class OrbitCapExceeded : public Error {
 public:
  OrbitCapExceeded(std::uint64_t cap, std::string required)
      : Error("orbit cap " + std::to_string(cap) + " exceeded" +
              (required.empty() ? std::string() : "; required orbit size " + required)),
        cap_(cap),
        required_(std::move(required)) {}

  std::uint64_t cap() const { return cap_; }
  const std::string& required() const { return required_; }

 private:
  std::uint64_t cap_;
  std::string required_;
};

class IndexCapExceeded : public Error {
 public:
  IndexCapExceeded(std::uint64_t cap, std::uint64_t index)
      : Error("coset index " + std::to_string(index) + " exceeds degree cap " + std::to_string(cap)),
        cap_(cap),
        index_(index) {}

  std::uint64_t cap() const { return cap_; }
  std::uint64_t index() const { return index_; }

 private:
  std::uint64_t cap_;
  std::uint64_t index_;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  CatalogError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sylowbench
