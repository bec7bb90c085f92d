#pragma once

#include <stdexcept>
#include <string>

namespace zetaperiod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class AmbiguousSign : public Error {
 public:
  using Error::Error;
};

class InsufficientCoefficients : public Error {
 public:
  InsufficientCoefficients(int needed, int available)
      : Error("need " + std::to_string(needed) + " Fourier coefficients, have " +
              std::to_string(available)),
        needed_(needed),
        available_(available) {}
  int needed() const { return needed_; }
  int available() const { return available_; }

 private:
  int needed_;
  int available_;
};

class UnknownSign : public Error {
 public:
  UnknownSign() : Error("sign of the functional equation is unknown") {}
};

class DuplicateNode : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class ValueAtOneVanishes : public Error {
 public:
  using Error::Error;
};

class RemainderTooLarge : public Error {
 public:
  using Error::Error;
};

class BracketFailure : public Error {
 public:
  using Error::Error;
};

class VerificationFailed : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace zetaperiod
