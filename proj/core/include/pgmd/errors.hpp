#ifndef PGMD_ERRORS_HPP
#define PGMD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgmd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text (group spec token, graph file, CSV cell) could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Cayley-table validation failures. Each carries a witness.
class NotAssociativeError : public Error {
 public:
  NotAssociativeError(int a, int b, int c)
      : Error("table is not associative: witness triple (" + std::to_string(a) +
              ", " + std::to_string(b) + ", " + std::to_string(c) + ")"),
        a(a), b(b), c(c) {}
  int a, b, c;
};

class NoIdentityError : public Error {
 public:
  NoIdentityError() : Error("table has no two-sided identity element") {}
};

class NoInverseError : public Error {
 public:
  explicit NoInverseError(int element)
      : Error("element " + std::to_string(element) + " has no inverse"),
        element(element) {}
  int element;
};

// The closed-form dimension formula requires a twin partition without
// singleton classes.
class HasSingletonTwinError : public Error {
 public:
  explicit HasSingletonTwinError(int witness)
      : Error("graph has a singleton twin (vertex " + std::to_string(witness) +
              "); the twin-class formula does not apply"),
        witness(witness) {}
  int witness;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

// Exact-search input exceeds the configured vertex cap.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace pgmd

#endif  // PGMD_ERRORS_HPP
