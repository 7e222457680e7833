#ifndef LSPECIAL_ERRORS_HPP
#define LSPECIAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lspecial {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MixedBackendError : public Error {
public:
  using Error::Error;
};

class BackendError : public Error {
public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class ZeroDenominatorError : public Error {
public:
  using Error::Error;
};

class SpaceMismatchError : public Error {
public:
  using Error::Error;
};

class ZeroPolynomialError : public Error {
public:
  using Error::Error;
};

class BetaOutOfRangeError : public Error {
public:
  using Error::Error;
};

class NotDiagonalError : public Error {
public:
  using Error::Error;
};

class NotHomogeneousError : public Error {
public:
  using Error::Error;
};

class NotPositiveOnCircleError : public Error {
public:
  using Error::Error;
};

class NoSignChangeError : public Error {
public:
  using Error::Error;
};

class ToleranceError : public Error {
public:
  using Error::Error;
};

class VerificationError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace lspecial

#endif  // LSPECIAL_ERRORS_HPP
