#pragma once

// Certificate formats.
//
// JSON:  {"v":V,"one_factor":[[u,w],...],"factors":[[{"center":c,"leaves":[...]},...],...]}
// Text:  "v: V", then "I: u-w u-w ...", then one star per line ("c; l1 l2 l3 l4 l5")
//        with a blank line before each factor.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "starfact/core.hpp"

namespace starfact {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_json(const Decomposition& d) {
  nlohmann::ordered_json j;
  j["v"] = d.v;
  auto& of = j["one_factor"] = nlohmann::ordered_json::array();
  for (const auto& [u, w] : d.one_factor) of.push_back({u, w});
  auto& fs = j["factors"] = nlohmann::ordered_json::array();
  for (const Factor& f : d.factors) {
    nlohmann::ordered_json stars = nlohmann::ordered_json::array();
    for (const Star& s : f.stars) {
      nlohmann::ordered_json js;
      js["center"] = s.center;
      js["leaves"] = s.leaves;
      stars.push_back(std::move(js));
    }
    fs.push_back(std::move(stars));
  }
  return j.dump() + "\n";
}

namespace serialize_detail {

inline Vertex as_vertex(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto x = j.get<long long>();
  if (x < INT32_MIN || x > INT32_MAX) throw ParseError(std::string(what) + " out of range");
  return static_cast<Vertex>(x);
}

}  // namespace serialize_detail

inline Decomposition from_json(std::string_view text) {
  using serialize_detail::as_vertex;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("certificate must be a JSON object");
  for (const char* key : {"v", "one_factor", "factors"})
    if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");

  Decomposition d;
  d.v = as_vertex(j["v"], "v");
  if (!j["one_factor"].is_array()) throw ParseError("one_factor must be an array");
  for (const auto& pr : j["one_factor"]) {
    if (!pr.is_array() || pr.size() != 2) throw ParseError("one_factor entries must be pairs");
    d.one_factor.emplace_back(as_vertex(pr[0], "matching vertex"), as_vertex(pr[1], "matching vertex"));
  }
  if (!j["factors"].is_array()) throw ParseError("factors must be an array");
  for (const auto& jf : j["factors"]) {
    if (!jf.is_array()) throw ParseError("each factor must be an array of stars");
    Factor f;
    for (const auto& js : jf) {
      if (!js.is_object() || !js.contains("center") || !js.contains("leaves") ||
          !js["leaves"].is_array())
        throw ParseError("each star must be an object with \"center\" and \"leaves\"");
      Star s{as_vertex(js["center"], "center"), {}};
      for (const auto& l : js["leaves"]) s.leaves.push_back(as_vertex(l, "leaf"));
      f.stars.push_back(std::move(s));
    }
    d.factors.push_back(std::move(f));
  }
  return d;
}

inline std::string to_text(const Decomposition& d) {
  std::ostringstream os;
  os << "v: " << d.v << "\nI:";
  for (const auto& [u, w] : d.one_factor) os << ' ' << u << '-' << w;
  os << '\n';
  for (const Factor& f : d.factors) {
    os << '\n';
    for (const Star& s : f.stars) os << to_string(s) << '\n';
  }
  return os.str();
}

inline Decomposition from_text(std::string_view text) {
  Decomposition d;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("line " + std::to_string(lineno) + ": " + why);
  };
  auto next_content = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_content() || line.rfind("v:", 0) != 0) fail("expected \"v: <order>\"");
  {
    std::istringstream ls(line.substr(2));
    if (!(ls >> d.v)) fail("bad order");
  }
  if (!next_content() || line.rfind("I:", 0) != 0) fail("expected \"I: u-w ...\"");
  {
    std::istringstream ls(line.substr(2));
    std::string tok;
    while (ls >> tok) {
      const auto dash = tok.find('-');
      if (dash == std::string::npos || dash == 0) fail("bad matching pair \"" + tok + "\"");
      try {
        std::size_t p1 = 0;
        std::size_t p2 = 0;
        const int u = std::stoi(tok.substr(0, dash), &p1);
        const int w = std::stoi(tok.substr(dash + 1), &p2);
        if (p1 != dash || p2 != tok.size() - dash - 1) fail("bad matching pair \"" + tok + "\"");
        d.one_factor.emplace_back(u, w);
      } catch (const std::logic_error&) {
        fail("bad matching pair \"" + tok + "\"");
      }
    }
  }

  bool in_factor = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      in_factor = false;
      continue;
    }
    const auto semi = line.find(';');
    if (semi == std::string::npos) fail("expected \"c; l1 l2 l3 l4 l5\"");
    Star s;
    {
      std::istringstream cs(line.substr(0, semi));
      std::string rest;
      if (!(cs >> s.center) || (cs >> rest)) fail("bad centre");
    }
    std::istringstream ls(line.substr(semi + 1));
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t p = 0;
        s.leaves.push_back(std::stoi(tok, &p));
        if (p != tok.size()) fail("bad leaf \"" + tok + "\"");
      } catch (const std::logic_error&) {
        fail("bad leaf \"" + tok + "\"");
      }
    }
    if (!in_factor) {
      d.factors.emplace_back();
      in_factor = true;
    }
    d.factors.back().stars.push_back(std::move(s));
  }
  return d;
}

/// JSON when the first non-blank character is '{', text otherwise.
inline Decomposition parse_certificate(std::string_view text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string_view::npos && text[p] == '{') return from_json(text);
  return from_text(text);
}

}  // namespace starfact
