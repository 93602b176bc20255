#pragma once

#include <stdexcept>
#include <string>

namespace pqwpa {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownAlgorithm : public Error {
 public:
  explicit UnknownAlgorithm(const std::string& name)
      : Error("unknown algorithm: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class NoMatchingKem : public Error {
 public:
  using Error::Error;
};

class InvalidHybrid : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IncompatibleConfig : public Error {
 public:
  using Error::Error;
};

class RoundTripLimitExceeded : public Error {
 public:
  RoundTripLimitExceeded(std::size_t round_trips, std::size_t cap)
      : Error("EAP round trips " + std::to_string(round_trips) +
              " exceed cap " + std::to_string(cap)),
        round_trips_(round_trips), cap_(cap) {}
  std::size_t round_trips() const { return round_trips_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t round_trips_;
  std::size_t cap_;
};

class DeliveryFailed : public Error {
 public:
  explicit DeliveryFailed(unsigned attempts)
      : Error("frame not delivered after " + std::to_string(attempts) +
              " attempts"),
        attempts_(attempts) {}
  unsigned attempts() const { return attempts_; }

 private:
  unsigned attempts_;
};

class AllRunsAborted : public Error {
 public:
  using Error::Error;
};

// Raised by the scenario-file parser. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0, std::string key = {})
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line), key_(std::move(key)) {}
  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  int line_;
  std::string key_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pqwpa
