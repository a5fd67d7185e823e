#pragma once

#include <stdexcept>
#include <string>

namespace dris {

// Invalid generator or CLI configuration; the message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or wire payload; message carries a line number when known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Requested mutation cannot be applied to the snapshot (e.g. more deletes than pages).
class InfeasibleMutation : public std::runtime_error {
 public:
  explicit InfeasibleMutation(const std::string& what) : std::runtime_error(what) {}
};

// A name could not be resolved to a registered endpoint.
class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

// The peer answered with ok=false; `code` is the wire-level error string.
class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(const std::string& code) : std::runtime_error(code), code_(code) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class BadResumptionToken : public ProtocolError {
 public:
  BadResumptionToken() : ProtocolError("badResumptionToken") {}
};

// The peer could not be reached at all (down endpoint, socket failure, timeout).
class TransportError : public std::runtime_error {
 public:
  explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dris
