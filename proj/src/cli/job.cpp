#include "qdeg/cli.hpp"

#include "qdeg/errors.hpp"
#include "qdeg/parser.hpp"
#include "qdeg/toric.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>

namespace qdeg::cli {

using nlohmann::json;

namespace {

Integer to_integer(const json& v, const char* field) {
  if (!v.is_number_integer()) throw ParseError(std::string("'") + field + "' must hold integers");
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  return Integer(std::to_string(v.get<std::int64_t>()));
}

std::vector<std::vector<Integer>> int_rows(const json& v, const char* field) {
  if (!v.is_array()) throw ParseError(std::string("'") + field + "' must be an array of arrays");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : v) {
    if (!row.is_array())
      throw ParseError(std::string("'") + field + "' must be an array of arrays");
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(to_integer(x, field));
    rows.push_back(std::move(r));
  }
  return rows;
}

IntMatrix to_matrix(const std::vector<std::vector<Integer>>& rows, const char* field) {
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      throw ValidationError(std::string("'") + field + "' has ragged rows");
  return IntMatrix::from_rows(rows);
}

std::vector<std::string> strings(const json& v, const char* field) {
  if (!v.is_array()) throw ParseError(std::string("'") + field + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) throw ParseError(std::string("'") + field + "' must hold strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

JobSpec parse_job(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid job file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("job file must be a JSON object");

  JobSpec job;
  if (doc.contains("variables")) job.variables = strings(doc["variables"], "variables");
  if (doc.contains("matrix")) {
    auto rows = int_rows(doc["matrix"], "matrix");
    if (rows.empty() || rows.front().empty()) throw ValidationError("'matrix' is empty");
    job.matrix = to_matrix(rows, "matrix");
  }
  if (doc.contains("degrees")) {
    // One row per variable in the file; stored with one column per variable.
    auto rows = int_rows(doc["degrees"], "degrees");
    if (rows.empty() || rows.front().empty()) throw ValidationError("'degrees' is empty");
    IntMatrix per_var = to_matrix(rows, "degrees");
    IntMatrix d(per_var.cols(), per_var.rows());
    for (std::size_t j = 0; j < per_var.rows(); ++j)
      for (std::size_t i = 0; i < per_var.cols(); ++i) d(i, j) = per_var(j, i);
    job.degrees = std::move(d);
  }
  if (job.matrix && job.degrees) throw ValidationError("give either 'matrix' or 'degrees'");
  if (doc.contains("ideal")) job.ideal = strings(doc["ideal"], "ideal");
  if (doc.contains("presentation")) {
    const json& p = doc["presentation"];
    if (!p.is_object() || !p.contains("shifts") || !p.contains("matrix"))
      throw ParseError("'presentation' needs 'shifts' and 'matrix'");
    FreeModuleShifts shifts;
    for (auto& row : int_rows(p["shifts"], "shifts")) shifts.push_back(std::move(row));
    std::vector<std::vector<std::string>> rows;
    if (!p["matrix"].is_array()) throw ParseError("presentation 'matrix' must be an array");
    for (const auto& row : p["matrix"]) rows.push_back(strings(row, "presentation matrix"));
    if (rows.size() != shifts.size())
      throw ValidationError("presentation needs one shift per matrix row");
    for (const auto& r : rows)
      if (r.size() != rows.front().size())
        throw ValidationError("presentation matrix has ragged rows");
    job.presentation_shifts = std::move(shifts);
    job.presentation_matrix = std::move(rows);
  }
  if (job.ideal && job.presentation_matrix)
    throw ValidationError("give either 'ideal' or 'presentation'");
  if (job.variables.empty()) {
    if (job.matrix)
      job.variables = default_variable_names(job.matrix->cols());
    else if (job.degrees)
      job.variables = default_variable_names(job.degrees->cols());
    else
      throw ValidationError("'variables' is required without a degree matrix");
  }
  return job;
}

GradedRing job_ring(const JobSpec& job, MonomialOrder order) {
  if (job.matrix) return to_a_graded_ring(*job.matrix, job.variables, order);
  if (job.degrees) return GradedRing(job.variables, *job.degrees, order);
  return GradedRing::standard(job.variables, order);
}

std::vector<Polynomial> job_ideal(const JobSpec& job, const GradedRing& ring) {
  if (!job.ideal) throw ValidationError("job has no 'ideal'");
  std::vector<Polynomial> out;
  for (const auto& s : *job.ideal) out.push_back(parse_polynomial(s, ring));
  return out;
}

GradedPresentation job_presentation(const JobSpec& job, const GradedRing& ring) {
  if (!job.presentation_matrix) throw ValidationError("job has no 'presentation'");
  const auto& rows = *job.presentation_matrix;
  GradedPresentation p;
  p.shifts = *job.presentation_shifts;
  for (const auto& s : p.shifts)
    if (s.size() != ring.grading_rank()) throw ValidationError("shift has wrong length");
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<Polynomial> column;
    for (const auto& row : rows) column.push_back(parse_polynomial(row[c], ring));
    p.relations.push_back(VectorElement::from_components(column));
  }
  return p;
}

GradedPresentation job_module(const JobSpec& job, const GradedRing& ring) {
  GradedPresentation p =
      job.presentation_matrix ? job_presentation(job, ring) : cyclic_presentation(job_ideal(job, ring), ring);
  validate_presentation(p, ring);
  return p;
}

std::string input_digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace qdeg::cli
