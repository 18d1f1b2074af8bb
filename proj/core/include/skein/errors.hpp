#ifndef SKEIN_ERRORS_HPP
#define SKEIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skein {

// Base class for every domain error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// PD text that does not scan: bad token, wrong arity, stray characters.
class MalformedSyntax : public Error {
public:
  using Error::Error;
};

// Structurally broken diagram: an arc used != 2 times, or the strand
// orientation cannot be completed into consistent closed cycles.
class InconsistentDiagram : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

class NotHomogeneous : public Error {
public:
  using Error::Error;
};

class NotAlternating : public Error {
public:
  using Error::Error;
};

class NotReduced : public Error {
public:
  using Error::Error;
};

class DisconnectedDiagram : public Error {
public:
  using Error::Error;
};

class CrossingCapExceeded : public Error {
public:
  using Error::Error;
};

// Degree queries on the zero polynomial have no answer.
class ZeroPolynomial : public Error {
public:
  using Error::Error;
};

class MissingChi4 : public Error {
public:
  using Error::Error;
};

// A corpus record's stored signature disagrees with the computed one.
// This is a bug signal, never an expected condition.
class SignatureMismatch : public Error {
public:
  using Error::Error;
};

class SchemaError : public Error {
public:
  using Error::Error;
};

class CorpusInconsistency : public Error {
public:
  using Error::Error;
};

}  // namespace skein

#endif  // SKEIN_ERRORS_HPP
