#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bim {

enum class ErrorKind {
  DuplicateColorInFacet,
  FacetContainment,
  DanglingVertexReference,
  SimplexNotInComplex,
  VertexNotInComplex,
  IncompatibleVertexSpaces,
  NotAFacet,
  NotASubcomplex,
  AmbiguousDecode,
  ResourceLimit,
  InvalidParameters,
  UnsupportedFormat,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the CLI
/// exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Cap on enumeration sizes. Every builder that can blow up takes one.
struct Limits {
  std::size_t max_facets = 1'000'000;
};

}  // namespace bim
