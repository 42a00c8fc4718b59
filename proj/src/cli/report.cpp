#include "qdeg/cli.hpp"

#include "qdeg/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace qdeg::cli {

using nlohmann::json;

namespace {

json vector_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json vectors_json(const std::vector<RatVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

RatVector parse_vector(const json& v) {
  if (!v.is_array()) throw ParseError("expected an array of rationals");
  RatVector out;
  for (const auto& x : v) {
    if (!x.is_string()) throw ParseError("rationals are serialized as strings");
    out.push_back(parse_rational(x.get<std::string>()));
  }
  return out;
}

std::string bracket(const RatVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

std::string to_json(const PlaneReport& report) {
  json planes = json::array();
  for (const auto& p : report.planes.planes) {
    planes.push_back({{"base", vector_json(p.base())},
                      {"span", vectors_json(p.generators())},
                      {"canonical",
                       {{"base", vector_json(p.canonical_base())},
                        {"span", vectors_json(p.canonical_span())}}}});
  }
  json doc = {{"command", report.command},
              {"input_digest", report.input_digest},
              {"planes", std::move(planes)}};
  return doc.dump();
}

PlaneReport parse_plane_report(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid plane report: ") + e.what());
  }
  PlaneReport report;
  try {
    report.command = doc.at("command").get<std::string>();
    report.input_digest = doc.at("input_digest").get<std::string>();
    for (const auto& p : doc.at("planes")) {
      std::vector<RatVector> span;
      for (const auto& v : p.at("span")) span.push_back(parse_vector(v));
      report.planes.planes.emplace_back(parse_vector(p.at("base")), std::move(span));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed plane report: ") + e.what());
  }
  return report;
}

std::string format_plane(const AffinePlane& plane) {
  std::string s = "{" + bracket(plane.base()) + ", {";
  for (std::size_t i = 0; i < plane.generators().size(); ++i) {
    if (i) s += ", ";
    s += bracket(plane.generators()[i]);
  }
  return s + "}}";
}

std::string format_pair(const StandardPair& pair, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "(";
  bool any = false;
  for (std::size_t v = 0; v < pair.root.size(); ++v) {
    if (pair.root[v] == 0) continue;
    if (any) out << "*";
    out << names[v];
    if (pair.root[v] > 1) out << "^" << pair.root[v];
    any = true;
  }
  if (!any) out << "1";
  out << ", {";
  for (std::size_t i = 0; i < pair.face.size(); ++i) {
    if (i) out << ", ";
    out << names[pair.face[i]];
  }
  out << "})";
  return out.str();
}

}  // namespace qdeg::cli
