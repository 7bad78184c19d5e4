#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcurves/arrangement/intersection.hpp"

namespace pcurves {

/// Curves Gamma_i = V(components[i]) with declared degrees `family`.
struct Configuration {
  std::vector<HomPoly> components;
  std::vector<int> family;

  /// Validates degrees. A component declared linear but given as the square
  /// of a linear form is replaced by that form. Throws WrongDegree,
  /// ZeroPolynomial, InvalidArgument.
  static Configuration make(std::vector<HomPoly> components, std::vector<int> family);
  std::size_t size() const { return components.size(); }
};

enum class Verdict { pass, fail, undecided, skipped };
const char* verdict_name(Verdict v);

struct ConditionResult {
  std::string key;
  Verdict verdict = Verdict::skipped;
  std::string detail;
  std::vector<ProjVec> points;
  std::vector<ProjVec> lines;
};

struct GenericityReport {
  std::vector<ConditionResult> conditions;
  std::vector<std::string> notes;
  long precision_bits = 0;

  const ConditionResult* find(const std::string& key) const;
  Verdict verdict(const std::string& key) const;
  /// No condition failed and none is undecided.
  bool all_pass() const;
  bool any_undecided() const;
};

/// Conditions (1)-(5) for 3 quadrics or k >= 4 curves; keys "s4.1".."s4.5".
/// Conditions that do not apply to the family are skipped. Throws
/// UnsupportedFamily for fewer than two curves or degrees above 8.
GenericityReport genericity_check_s4(const Configuration& cfg);

/// Pairwise intersection records of a configuration, pair-indexed.
struct PairIntersections {
  int i = 0, j = 0;
  std::vector<IntersectionRecord> records;
  bool common_component = false;
};
std::vector<PairIntersections> all_intersections(const Configuration& cfg);

/// A line of the 18-line system with its spanning points.
struct SystemLine {
  ProjVec line;
  int group = 0;  ///< 0: pair (1,2), 1: pair (1,3), 2: pair (2,3)
  int a = 0, b = 0;  ///< indices into the group's four points
  std::string label() const;
};

/// Groups of six lines per quadric pair, in the order
/// A1A2, A3A4, A1A3, A2A4, A1A4, A2A3 (three line pairs).
struct LineSystem {
  std::array<std::array<ProjVec, 4>, 3> points;
  std::array<std::array<SystemLine, 6>, 3> groups;
  std::vector<SystemLine> all() const;
};

struct S6Result {
  GenericityReport report;
  std::optional<LineSystem> lines;
  int distinct_lines = 0;
};

/// Raised when the line system cannot be built; carries the partial report.
class DegenerateIntersectionError : public Error {
 public:
  DegenerateIntersectionError(const std::string& what, GenericityReport partial)
      : Error(ErrorCode::DegenerateIntersection, what), report(std::move(partial)) {}
  GenericityReport report;
};

/// Conditions (1)-(4) for three quadrics, keys "s6.1".."s6.4"; (3) and (4) are
/// skipped when (1) or (2) fails.
S6Result genericity_check_s6(const HomPoly& q1, const HomPoly& q2, const HomPoly& q3);

/// Builds the 18 lines from four distinct points per pair.
LineSystem build_line_system(const std::array<std::array<ProjVec, 4>, 3>& points);

/// Number of pairwise distinct lines among the 18 (ties counted once).
int distinct_line_count(const LineSystem& ls);

class NoValidSelectionError : public Error {
 public:
  NoValidSelectionError(const std::string& what, std::vector<std::string> diag)
      : Error(ErrorCode::NoValidSelection, what), diagnostics(std::move(diag)) {}
  std::vector<std::string> diagnostics;
};

/// Drops one line pair per group. Candidates run over (d12, d13, d23) in
/// lexicographic order; the first with 12 distinct lines and no three
/// concurrent is returned.
std::vector<SystemLine> select_general_position(const LineSystem& ls);

/// Exhaustive check: pairwise distinct and no three concurrent.
Tri in_general_position(const std::vector<ProjVec>& lines);

}  // namespace pcurves
