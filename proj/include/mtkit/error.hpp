#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mtkit/bits.hpp"

namespace mtkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class NotAPoset : public Error {
 public:
  NotAPoset(std::string what, std::vector<Element> witness)
      : Error(std::move(what)), witness_(std::move(witness)) {}
  const std::vector<Element>& witness() const { return witness_; }

 private:
  std::vector<Element> witness_;
};

class NotALattice : public Error {
 public:
  explicit NotALattice(std::optional<std::pair<Element, Element>> pair)
      : Error(pair ? "elements " + std::to_string(pair->first) + " and " +
                         std::to_string(pair->second) + " have no meet or join"
                   : std::string("empty poset has no top or bottom")),
        pair_(pair) {}
  const std::optional<std::pair<Element, Element>>& pair() const { return pair_; }

 private:
  std::optional<std::pair<Element, Element>> pair_;
};

class NotDistributive : public Error {
 public:
  using Error::Error;
};

class NotJoinPreserving : public Error {
 public:
  using Error::Error;
};

class NotAnEmbedding : public Error {
 public:
  using Error::Error;
};

class NotBoolean : public Error {
 public:
  using Error::Error;
};

/// An open family that fails to be a topology. The witness names the
/// offending sets (for a missing union or intersection, the pair).
class NotATopology : public Error {
 public:
  NotATopology(std::string what, std::vector<AtomSet> witness)
      : Error(std::move(what)), witness_(std::move(witness)) {}
  const std::vector<AtomSet>& witness() const { return witness_; }

 private:
  std::vector<AtomSet> witness_;
};

class ZeroRelativization : public Error {
 public:
  ZeroRelativization() : Error("cannot relativize to the zero element") {}
};

class NotOpen : public Error {
 public:
  using Error::Error;
};

class NotCJP : public Error {
 public:
  using Error::Error;
};

/// Violations of the Raney extension axioms.
class RaneyError : public Error {
 public:
  RaneyError(std::string what, std::vector<Element> witness)
      : Error(std::move(what)), witness_(std::move(witness)) {}
  const std::vector<Element>& witness() const { return witness_; }

 private:
  std::vector<Element> witness_;
};

class NotCoframe : public RaneyError {
 public:
  using RaneyError::RaneyError;
};
class NotJoinClosed : public RaneyError {
 public:
  using RaneyError::RaneyError;
};
class InexactJoin : public RaneyError {
 public:
  using RaneyError::RaneyError;
};
class NotMeetDense : public RaneyError {
 public:
  using RaneyError::RaneyError;
};

class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& expected)
      : Error(file + ":" + std::to_string(line) + ": expected " + expected),
        file_(std::move(file)),
        line_(line) {}
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

}  // namespace mtkit
