#ifndef QDEG_CLI_HPP
#define QDEG_CLI_HPP

#include "qdeg/graded_ring.hpp"
#include "qdeg/homology.hpp"
#include "qdeg/plane.hpp"
#include "qdeg/stdpairs.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdeg::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kValidationError = 3,
  kPreconditionError = 4,
};

/// Contents of a job file (JSON). Polynomials stay as strings until a ring
/// exists to parse them in.
///
///   {
///     "variables": ["x", "y", "z"],          // default x_1..x_n from "matrix"
///     "matrix": [[1, 1, 1], ...],            // A; grades the ring by its columns
///     "degrees": [[1], [1], [1]],            // or: explicit degree per variable
///     "ideal": ["x*y", "y*z"],
///     "presentation": {"shifts": [[0]], "matrix": [["x*y", "y*z"]]}
///   }
///
/// Without "matrix" or "degrees" the ring has the standard Z-grading.
struct JobSpec {
  std::vector<std::string> variables;
  std::optional<IntMatrix> matrix;
  std::optional<IntMatrix> degrees;  // d x n, column j = deg(x_j)
  std::optional<std::vector<std::string>> ideal;
  std::optional<FreeModuleShifts> presentation_shifts;
  std::optional<std::vector<std::vector<std::string>>> presentation_matrix;
};

/// Throws ParseError for malformed JSON or wrong field types and
/// ValidationError for inconsistent shapes.
JobSpec parse_job(std::string_view text);

/// The graded ring a job describes. "matrix" goes through the A-graded ring
/// construction (positivity and ZA = Z^d are checked).
GradedRing job_ring(const JobSpec& job, MonomialOrder order);
std::vector<Polynomial> job_ideal(const JobSpec& job, const GradedRing& ring);
GradedPresentation job_presentation(const JobSpec& job, const GradedRing& ring);
/// The presentation if given, else R/I for the ideal.
GradedPresentation job_module(const JobSpec& job, const GradedRing& ring);

/// FNV-1a 64-bit digest of the job text, "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view text);

struct PlaneReport {
  std::string command;
  std::string input_digest;
  QuasidegreeSet planes;
};

/// JSON with exact rationals serialized as "p/q" strings.
std::string to_json(const PlaneReport& report);
PlaneReport parse_plane_report(std::string_view json);

/// Text form of a plane: {[b_1, ..., b_d], {[v_1], ...}} with raw generators.
std::string format_plane(const AffinePlane& plane);
/// (root monomial, {face variables})
std::string format_pair(const StandardPair& pair, const std::vector<std::string>& names);

/// Entry point shared by the executable and tests. Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdeg::cli

#endif
