#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pcurves {

enum class ErrorCode {
  SyntaxError,
  NotHomogeneous,
  ZeroPolynomial,
  DegenerateLeadingForm,
  WrongDegree,
  PrecisionExhausted,
  CommonComponent,
  SingularPoint,
  NotOnCurve,
  UnsupportedFamily,
  DegenerateIntersection,
  NoValidSelection,
  NotInPencil,
  IdenticallyDegenerate,
  DegreeMismatch,
  InfinitelyManySolutions,
  NoSolution,
  SingularA,
  AllAlphaZero,
  MalformedRelation,
  NotDiagonal,
  QuadratureFailure,
  DivisorContainsCurve,
  ZeroOnContour,
  InsufficientSpan,
  DegenerateCurve,
  NotGeneralPosition,
  NotAMorphism,
  InvalidArgument,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t pos, const std::string& msg)
      : Error(ErrorCode::SyntaxError, "syntax error at " + std::to_string(pos) + ": " + msg), position(pos) {}
  std::size_t position;
};

class NotHomogeneous : public Error {
 public:
  explicit NotHomogeneous(std::vector<int> degs);
  std::vector<int> degrees;
};

}  // namespace pcurves
