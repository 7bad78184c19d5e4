#include "pcurves/error.hpp"

namespace pcurves {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegenerateLeadingForm: return "DegenerateLeadingForm";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::CommonComponent: return "CommonComponent";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::DegenerateIntersection: return "DegenerateIntersection";
    case ErrorCode::NoValidSelection: return "NoValidSelection";
    case ErrorCode::NotInPencil: return "NotInPencil";
    case ErrorCode::IdenticallyDegenerate: return "IdenticallyDegenerate";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InfinitelyManySolutions: return "InfinitelyManySolutions";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::SingularA: return "SingularA";
    case ErrorCode::AllAlphaZero: return "AllAlphaZero";
    case ErrorCode::MalformedRelation: return "MalformedRelation";
    case ErrorCode::NotDiagonal: return "NotDiagonal";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::DivisorContainsCurve: return "DivisorContainsCurve";
    case ErrorCode::ZeroOnContour: return "ZeroOnContour";
    case ErrorCode::InsufficientSpan: return "InsufficientSpan";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {
std::string degree_list(const std::vector<int>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}
}  // namespace

NotHomogeneous::NotHomogeneous(std::vector<int> degs)
    : Error(ErrorCode::NotHomogeneous, "monomials of mixed degrees {" + degree_list(degs) + "}"),
      degrees(std::move(degs)) {}

}  // namespace pcurves
