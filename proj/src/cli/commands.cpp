#include "qdeg/cli.hpp"

#include "qdeg/errors.hpp"
#include "qdeg/quasidegrees.hpp"
#include "qdeg/toric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace qdeg::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string job_path;
  std::string order = "grevlex";
  std::string format = "text";
  bool reduce = false;
  bool general = false;
  std::optional<std::size_t> index;
  std::string beta;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read job file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw ParseError("unknown order '" + name + "'");
}

RatVector parse_beta(const std::string& text, std::size_t d) {
  RatVector beta;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty component in beta");
    beta.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (beta.size() != d)
    throw ValidationError("beta has " + std::to_string(beta.size()) + " entries, expected " +
                          std::to_string(d));
  return beta;
}

void emit_planes(const std::string& command, const std::string& digest, const QuasidegreeSet& q,
                 const Options& opt, std::ostream& out) {
  if (opt.format == "machine") {
    out << to_json(PlaneReport{command, digest, q}) << "\n";
    return;
  }
  for (const auto& p : q.planes) out << format_plane(p) << "\n";
}

void cmd_std_pairs(const JobSpec& job, const GradedRing& ring, const std::string& digest,
                   const Options& opt, std::ostream& out) {
  auto pairs = standard_pairs(job_ideal(job, ring), ring.nvars());
  if (opt.format == "machine") {
    json list = json::array();
    for (const auto& p : pairs) {
      json face = json::array();
      for (auto v : p.face) face.push_back(ring.names()[v]);
      list.push_back({{"root", p.root}, {"face", face}});
    }
    out << json{{"command", "std-pairs"}, {"input_digest", digest}, {"pairs", list}}.dump()
        << "\n";
    return;
  }
  for (const auto& p : pairs) out << format_pair(p, ring.names()) << "\n";
}

void cmd_qdeg(const JobSpec& job, const GradedRing& ring, const std::string& digest,
              const Options& opt, std::ostream& out) {
  GradedPresentation p = job_module(job, ring);
  QuasidegreeSet q;
  if (opt.general) {
    q = quasidegrees_module(p.relations, p.shifts, ring);
  } else {
    q = quasidegrees_monomial(MonomialMatrix::from_columns(p.relations, p.shifts, ring.nvars()),
                              ring);
  }
  if (opt.reduce) q = remove_redundancy(q);
  emit_planes("qdeg", digest, q, opt, out);
}

const IntMatrix& require_matrix(const JobSpec& job) {
  if (!job.matrix) throw ValidationError("this command needs a degree 'matrix'");
  return *job.matrix;
}

void cmd_toric(const JobSpec& job, const GradedRing& ring, const std::string& digest,
               const Options& opt, std::ostream& out) {
  auto ideal = toric_ideal(require_matrix(job), ring);
  if (opt.format == "machine") {
    json gens = json::array();
    for (const auto& f : ideal) gens.push_back(render(f, ring.names()));
    out << json{{"command", "toric"}, {"input_digest", digest}, {"generators", gens}}.dump()
        << "\n";
    return;
  }
  for (const auto& f : ideal) out << render(f, ring.names()) << "\n";
}

void cmd_volume(const JobSpec& job, const std::string& digest, const Options& opt,
                std::ostream& out) {
  std::size_t vol = normalized_volume(require_matrix(job));
  if (opt.format == "machine") {
    out << json{{"command", "volume"}, {"input_digest", digest}, {"volume", vol}}.dump() << "\n";
    return;
  }
  out << vol << "\n";
}

// The module of a qlc/check-beta job: the given ideal or presentation, else
// R/I_A for the job's matrix.
GradedPresentation local_cohomology_module(const JobSpec& job, const GradedRing& ring) {
  if (job.ideal || job.presentation_matrix) return job_module(job, ring);
  return cyclic_presentation(toric_ideal(require_matrix(job), ring), ring);
}

void cmd_qlc(const JobSpec& job, const GradedRing& ring, const std::string& digest,
             const Options& opt, std::ostream& out) {
  GradedPresentation p = local_cohomology_module(job, ring);
  QuasidegreeSet q = opt.index ? qlc(p, *opt.index, ring) : qlc_total(p, ring);
  emit_planes("qlc", digest, q, opt, out);
}

void cmd_check_beta(const JobSpec& job, const GradedRing& ring, const std::string& digest,
                    const Options& opt, std::ostream& out) {
  const IntMatrix& a = require_matrix(job);
  RatVector beta = parse_beta(opt.beta, ring.grading_rank());
  QuasidegreeSet q = qlc_total(local_cohomology_module(job, ring), ring);
  bool jump = point_in_qdeg(beta, q);
  std::size_t vol = normalized_volume(a);
  if (opt.format == "machine") {
    json b = json::array();
    for (const auto& x : beta) b.push_back(to_string(x));
    out << json{{"command", "check-beta"},
                {"input_digest", digest},
                {"beta", b},
                {"verdict", jump ? "RANK-JUMP" : "EXPECTED-RANK"},
                {"volume", vol}}
               .dump()
        << "\n";
    return;
  }
  if (jump)
    out << "RANK-JUMP\n";
  else
    out << "EXPECTED-RANK vol(A)=" << vol << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasidegree sets of multigraded modules and local cohomology"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("job", opt.job_path, "Job file (JSON), or - for stdin")->required();
    sub->add_option("--order", opt.order, "Term order")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
  };
  auto* std_pairs = app.add_subcommand("std-pairs", "Standard pairs of a monomial ideal");
  common(std_pairs);
  auto* qdeg_cmd = app.add_subcommand("qdeg", "Quasidegrees of a presented module");
  common(qdeg_cmd);
  qdeg_cmd->add_flag("--reduce", opt.reduce, "Remove planes contained in others");
  qdeg_cmd->add_flag("--general", opt.general,
                     "Accept any homogeneous presentation (via initial modules)");
  auto* toric_cmd = app.add_subcommand("toric", "Toric ideal of the degree matrix");
  common(toric_cmd);
  auto* volume_cmd = app.add_subcommand("volume", "Normalized volume of the degree matrix");
  common(volume_cmd);
  auto* qlc_cmd = app.add_subcommand("qlc", "Quasidegrees of local cohomology at the maximal ideal");
  common(qlc_cmd);
  qlc_cmd->add_option("--i", opt.index, "Cohomological index (default: union over i < d)");
  auto* beta_cmd = app.add_subcommand("check-beta", "Rank-jump test for a parameter");
  common(beta_cmd);
  beta_cmd->add_option("--beta", opt.beta, "Comma-separated rationals, e.g. 3/2,0,-2")
      ->required();

  std::vector<const char*> argv{"qdeg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    std::string text = read_input(opt.job_path);
    std::string digest = input_digest(text);
    JobSpec job = parse_job(text);
    GradedRing ring = job_ring(job, parse_order(opt.order));
    if (std_pairs->parsed()) cmd_std_pairs(job, ring, digest, opt, out);
    if (qdeg_cmd->parsed()) cmd_qdeg(job, ring, digest, opt, out);
    if (toric_cmd->parsed()) cmd_toric(job, ring, digest, opt, out);
    if (volume_cmd->parsed()) cmd_volume(job, digest, opt, out);
    if (qlc_cmd->parsed()) cmd_qlc(job, ring, digest, opt, out);
    if (beta_cmd->parsed()) cmd_check_beta(job, ring, digest, opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidationError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << " (use --general)\n";
    return kPreconditionError;
  }
  return kOk;
}

}  // namespace qdeg::cli
