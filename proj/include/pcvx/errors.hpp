#pragma once

#include <stdexcept>
#include <string>

namespace pcvx {

/// Violated operation contract: dimension mismatch, empty-set precondition,
/// improper objective, oracle size guard. The CLI maps this to exit code 2.
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (rational literals, JSON documents, schema
/// violations). The CLI maps this to exit code 1.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pcvx
