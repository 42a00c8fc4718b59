// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "properties.hpp"

#include "qdeg/cli.hpp"
#include "qdeg/groebner.hpp"
#include "qdeg/homology.hpp"
#include "qdeg/parser.hpp"
#include "qdeg/toric.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace qdeg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void require(Outcome& o, bool condition, const std::string& what) {
  if (!condition && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str()};
}

std::string write_job(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "qdeg_acceptance";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

const char* kExampleMatrix = R"({"matrix": [[1, 1, 1, 1, 1], [0, 0, 1, 1, 0], [0, 1, 1, 0, -2]]})";

AffinePlane plane(RatVector base, std::vector<RatVector> gens) {
  return AffinePlane(std::move(base), std::move(gens));
}

Outcome planes_of_xy_yz() {
  Outcome o;
  auto job = write_job("xy_yz.json", R"({"variables": ["x", "y", "z"], "ideal": ["x*y", "y*z"]})");
  auto r = cli_run({"qdeg", "--format", "machine", job});
  require(o, r.code == 0, "qdeg exit code " + std::to_string(r.code));
  if (!o.ok) return o;
  auto all = cli::parse_plane_report(r.out).planes;
  require(o, all.size() == 2, "expected two planes, got " + std::to_string(all.size()));
  if (!o.ok) return o;
  require(o, all.planes[0] == plane({0}, {{1}}), "first plane is not (0, span{1})");
  require(o, all.planes[1] == plane({0}, {{1}, {1}}), "second plane is not (0, span{1,1})");

  r = cli_run({"qdeg", "--reduce", "--format", "machine", job});
  auto reduced = cli::parse_plane_report(r.out).planes;
  require(o, reduced.size() == 1, "--reduce did not give one plane");
  if (!o.ok) return o;
  require(o, reduced.planes[0] == plane({0}, {{1}, {1}}), "--reduce plane is not (0, span{1,1})");
  require(o, reduced.planes[0].canonical_base() == RatVector{0} &&
                 reduced.planes[0].canonical_span() == std::vector<RatVector>{{1}},
          "canonical form is not (0, span{1})");
  return o;
}

Outcome toric_of_example() {
  Outcome o;
  auto r = cli_run({"toric", write_job("example.json", kExampleMatrix)});
  require(o, r.code == 0, "toric exit code " + std::to_string(r.code));
  if (!o.ok) return o;
  auto ring = GradedRing::standard(default_variable_names(5));
  std::vector<Polynomial> printed, binomials;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) printed.push_back(parse_polynomial(line, ring));
  for (auto t : {"x_1*x_3 - x_2*x_4", "x_1*x_4^2 - x_3^2*x_5", "x_1^2*x_4 - x_2*x_3*x_5",
                 "x_1^3 - x_2^2*x_5"})
    binomials.push_back(parse_polynomial(t, ring));
  require(o, ideal_equal(printed, binomials, 5), "ideal differs from the expected binomials");
  return o;
}

Outcome qlc_of_example() {
  Outcome o;
  auto r = cli_run({"qlc", "--format", "machine", write_job("example.json", kExampleMatrix)});
  require(o, r.code == 0, "qlc exit code " + std::to_string(r.code));
  if (!o.ok) return o;
  auto q = cli::parse_plane_report(r.out).planes;
  require(o, q.size() == 1, "expected one plane, got " + std::to_string(q.size()));
  if (!o.ok) return o;
  require(o, q.planes[0].same_set(plane({0, 0, 1}, {{1, 0, -2}})),
          "plane is not (0,0,1) + C(1,0,-2)");
  return o;
}

Outcome volume() {
  Outcome o;
  auto r = cli_run({"volume", write_job("example.json", kExampleMatrix)});
  require(o, r.code == 0 && r.out == "4\n", "volume printed '" + r.out + "'");
  return o;
}

Outcome rank_jump() {
  Outcome o;
  auto job = write_job("example.json", kExampleMatrix);
  auto check = [&](const std::string& beta, const std::string& expected) {
    auto r = cli_run({"check-beta", "--beta", beta, job});
    require(o, r.code == 0 && r.out == expected + "\n", "beta " + beta + " gave '" + r.out + "'");
  };
  check("0,0,1", "RANK-JUMP");
  check("3/2,0,-2", "RANK-JUMP");
  check("0,0,0", "EXPECTED-RANK vol(A)=4");
  return o;
}

Outcome run_cases(const std::function<std::string(std::uint64_t)>& c, std::uint64_t first,
                  int count, const std::string& name) {
  Outcome o;
  for (int k = 0; k < count; ++k) {
    auto e = c(first + k);
    require(o, e.empty(), name + " seed " + std::to_string(first + k) + ": " + e);
  }
  return o;
}

Outcome standard_pairs_suite() {
  return run_cases(property::standard_pairs_case, 1000, 150, "standard pairs");
}

Outcome groebner_suite() {
  auto o = run_cases(property::groebner_case, 2000, 120, "groebner");
  if (!o.ok) return o;
  return run_cases(property::binomial_hilbert_case, 3000, 40, "hilbert");
}

Outcome homology_suite() {
  auto o = run_cases(property::resolution_case, 4000, 40, "resolution");
  if (!o.ok) return o;
  auto x = to_a_graded_ring(IntMatrix::from_rows({{1}}), {"x"});
  auto m = cyclic_presentation(
      std::vector<Polynomial>{parse_polynomial("x", x)}, x);
  auto q = qlc(m, 0, x);
  require(o, q.size() == 1 && q.planes[0] == plane({0}, {}), "qlc(Q[x]/<x>, 0) is not {0}");
  if (!o.ok) return o;
  return run_cases(property::duality_case, 5000, 100, "duality");
}

Outcome planes_suite() { return run_cases(property::plane_family_case, 6000, 120, "planes"); }

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "qdeg of <xy, yz>: two planes, one after --reduce", 1, planes_of_xy_yz},
      {2, "toric ideal of the 3x5 matrix", 10, toric_of_example},
      {3, "qlc of R/I_A is (0,0,1) + C(1,0,-2)", 120, qlc_of_example},
      {4, "volume of the 3x5 matrix is 4", 10, volume},
      {5, "check-beta rank-jump predicate", 120, rank_jump},
      {6, "property suite: standard pairs (150 ideals)", 60, standard_pairs_suite},
      {7, "property suite: Groebner (120 ideals, 40 binomial Hilbert checks)", 120, groebner_suite},
      {8, "property suite: homology", 120, homology_suite},
      {9, "property suite: planes (120 families)", 120, planes_suite},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail = "runtime over " + std::to_string(c.limit_seconds) + " s";
    }
    all = all && o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << secs
         << " s)";
    if (!o.ok) line << " -- " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
