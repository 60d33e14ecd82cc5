#pragma once

#include <stdexcept>
#include <string>

namespace opg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Out-of-range vertex id or self-loop passed to the graph builder.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is disconnected") {}
};

class NotBiconnected : public Error {
 public:
  using Error::Error;
};

class NotOuterplanar : public Error {
 public:
  using Error::Error;
};

/// The radius construction needs every interior face to have length at most (n+2)/4.
class FaceTooLong : public Error {
 public:
  FaceTooLong(int q, int n)
      : Error("max face length " + std::to_string(q) + " exceeds (n+2)/4 for n=" +
              std::to_string(n)),
        q_(q),
        n_(n) {}
  int q() const noexcept { return q_; }
  int n() const noexcept { return n_; }

 private:
  int q_;
  int n_;
};

class ZeroTotalWeight : public Error {
 public:
  ZeroTotalWeight() : Error("total weight is zero") {}
};

/// A bound formula was evaluated outside its stated parameter range.
class DomainError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace opg
