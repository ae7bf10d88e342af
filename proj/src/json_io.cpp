#include "json_io.hpp"

#include <json.hpp>

#include "errors.hpp"

namespace hilb {

namespace {

using nlohmann::json;

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw SyntaxError("expected an integer or a decimal string", 0);
}

json vec_to_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

std::vector<Int> vec_from_json(const json& j) {
  if (!j.is_array()) throw SyntaxError("expected an array", 0);
  std::vector<Int> v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

unsigned uint_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw SyntaxError(std::string(what) + " must be a nonnegative integer", 0);
  return static_cast<unsigned>(j.get<long long>());
}

json parse_object(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!j.is_object()) throw SyntaxError("expected a JSON object", 0);
  return j;
}

}  // namespace

std::string presentation_to_json(const BoundaryPresentation& p) {
  json j;
  j["d"] = p.d;
  j["n"] = p.n;
  j["k"] = p.k;
  j["f"] = vec_to_json(p.f);
  j["c"] = int_to_json(p.c);
  j["g"] = vec_to_json(p.g);
  return j.dump();
}

BoundaryPresentation presentation_from_json(const std::string& text) {
  json j = parse_object(text);
  for (const char* key : {"d", "n", "k", "f", "c", "g"})
    if (!j.contains(key))
      throw SyntaxError(std::string("missing field \"") + key + "\"", 0);
  BoundaryPresentation p;
  p.d = uint_from_json(j["d"], "d");
  p.n = uint_from_json(j["n"], "n");
  p.k = uint_from_json(j["k"], "k");
  p.f = vec_from_json(j["f"]);
  p.c = int_from_json(j["c"]);
  p.g = vec_from_json(j["g"]);
  if (p.n > p.d || p.f.size() != p.k || p.g.size() != p.d - p.n)
    throw SyntaxError("inconsistent presentation dimensions", 0);
  return p;
}

std::string representation_to_json(const PositiveRepresentation& rep) {
  json terms = json::array();
  for (const auto& t : rep.terms) {
    json e;
    e["i"] = t.denom_exp;
    e["j"] = t.shift;
    e["a"] = int_to_json(t.coeff);
    terms.push_back(std::move(e));
  }
  json j;
  j["terms"] = std::move(terms);
  return j.dump();
}

PositiveRepresentation representation_from_json(const std::string& text) {
  json j = parse_object(text);
  if (!j.contains("terms") || !j["terms"].is_array())
    throw SyntaxError("missing \"terms\" array", 0);
  PositiveRepresentation rep;
  for (const auto& e : j["terms"]) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("a"))
      throw SyntaxError("each term needs fields i, j, a", 0);
    PositiveTerm t;
    t.denom_exp = uint_from_json(e["i"], "i");
    t.shift = uint_from_json(e["j"], "j");
    t.coeff = int_from_json(e["a"]);
    if (t.coeff < 0) throw SyntaxError("term coefficient must be nonnegative", 0);
    rep.terms.push_back(std::move(t));
  }
  return rep;
}

std::string report_to_json(const InvariantReport& r) {
  json j;
  j["dim"] = r.dim;
  j["numerator"] = r.numerator.to_string();
  j["hdepth"] = r.hdepth;
  j["hprojdim"] = r.hprojdim;
  j["hreg"] = r.hreg;
  j["delta_d_tilde"] = r.delta_d_tilde;
  j["deg_series"] = r.deg_series ? json(*r.deg_series) : json(nullptr);
  j["width_k"] = r.width_k ? json(*r.width_k) : json(nullptr);
  return j.dump();
}

}  // namespace hilb
