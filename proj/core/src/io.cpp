#include "quiverk/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "quiverk/errors.hpp"

namespace quiverk {

using nlohmann::json;

namespace {

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Bridges nlohmann's typed-access exceptions into ParseError so malformed
// documents never surface as library exceptions.
template <typename F>
auto shaped(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

int strict_int(const std::string& s) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ParseError("expected an integer, got '" + s + "'");
  return value;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Quiver parse_quiver_json(const std::string& text) {
  const json j = parse_document(text);
  return shaped([&] {
    const int n = j.at("vertices").get<int>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) throw ParseError("arrow must be a [tail, head] pair");
      arrows.push_back(Arrow{a.at(0).get<int>() - 1, a.at(1).get<int>() - 1});
    }
    return Quiver(n, std::move(arrows));
  });
}

namespace {

OrbitVector parse_orbit_json(const std::string& text, const Quiver& q) {
  const json j = parse_document(text);
  return shaped([&] {
    std::vector<std::pair<DimVector, int>> entries;
    for (const auto& e : j.at("m")) {
      DimVector root;
      for (const auto& d : e.at("root")) root.push_back(d.get<int>());
      entries.emplace_back(std::move(root), e.at("mult").get<int>());
    }
    OrbitVector m = OrbitVector::from_entries(std::move(entries));
    dimension_vector(q, m);  // validates every root
    return m;
  });
}

OrbitVector parse_orbit_inline(const std::string& text, const Quiver& q) {
  std::vector<std::pair<DimVector, int>> entries;
  for (const std::string& raw : split(text, ';')) {
    const std::string field = strip(raw);
    if (field.empty()) continue;
    const auto parts = split(field, ':');
    if (parts.size() != 2) throw ParseError("orbit entry must look like 'd_1,..,d_N:mult'");
    DimVector root;
    for (const std::string& d : split(parts[0], ',')) root.push_back(strict_int(strip(d)));
    entries.emplace_back(std::move(root), strict_int(strip(parts[1])));
  }
  OrbitVector m = OrbitVector::from_entries(std::move(entries));
  dimension_vector(q, m);
  return m;
}

}  // namespace

OrbitVector parse_orbit(const std::string& text, const Quiver& q) {
  const std::string t = strip(text);
  if (!t.empty() && t.front() == '{') return parse_orbit_json(t, q);
  return parse_orbit_inline(t, q);
}

ResolutionPair parse_resolution_json(const std::string& text) {
  const json j = parse_document(text);
  return shaped([&] {
    ResolutionPair rp;
    for (const auto& i : j.at("i")) rp.vertex.push_back(i.get<int>() - 1);
    for (const auto& r : j.at("r")) rp.rank.push_back(r.get<int>());
    if (rp.vertex.size() != rp.rank.size())
      throw ParseError("resolution pair: 'i' and 'r' must have equal length");
    return drop_zero_steps(rp);
  });
}

std::string roots_text(const std::vector<DimVector>& roots) {
  std::ostringstream os;
  for (const auto& r : roots) os << dimvector_str(r) << '\n';
  return os.str();
}

std::string partition_parts_text(const RootPartition& parts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    os << "part " << (i + 1) << ':';
    for (const auto& r : parts[i]) os << ' ' << dimvector_str(r);
    os << '\n';
  }
  return os.str();
}

std::string resolution_text(const ResolutionPair& rp) {
  std::ostringstream os;
  os << "i = (";
  for (std::size_t k = 0; k < rp.vertex.size(); ++k) {
    if (k) os << ',';
    os << rp.vertex[k] + 1;
  }
  os << ")\nr = (";
  for (std::size_t k = 0; k < rp.rank.size(); ++k) {
    if (k) os << ',';
    os << rp.rank[k];
  }
  os << ")\n";
  return os.str();
}

std::string poly_text(const LaurentPoly& p) { return p.str(); }

namespace {

json poly_payload(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json m = json::array();
    for (const auto& [v, e] : t.mono.factors()) m.push_back(json::array({v.str(), e}));
    terms.push_back(json{{"c", rat_to_string(t.coef)}, {"m", std::move(m)}});
  }
  return json{{"terms", std::move(terms)}};
}

json envelope() { return json{{"schema", 1}}; }

}  // namespace

std::string roots_json(const std::vector<DimVector>& roots) {
  json j = envelope();
  j["roots"] = json::array();
  for (const auto& r : roots) j["roots"].push_back(r);
  return j.dump();
}

std::string resolve_json(const RootPartition& parts, const ResolutionPair& rp) {
  json j = envelope();
  j["partition"] = json::array();
  for (const auto& part : parts) {
    json p = json::array();
    for (const auto& r : part) p.push_back(r);
    j["partition"].push_back(std::move(p));
  }
  json i = json::array(), r = json::array();
  for (int v : rp.vertex) i.push_back(v + 1);
  for (int k : rp.rank) r.push_back(k);
  j["i"] = std::move(i);
  j["r"] = std::move(r);
  return j.dump();
}

std::string poly_json(const std::string& key, const LaurentPoly& p) {
  json j = envelope();
  j[key] = poly_payload(p);
  return j.dump();
}

std::string table_json(const QuiverCoefficientTable& t) {
  json j = envelope();
  j["codimension"] = t.codimension;
  json rows = json::array();
  for (const auto& [mu, c] : t.entries) {
    json tuple = json::array();
    for (const auto& part : mu) tuple.push_back(part);
    rows.push_back(json{{"mu", std::move(tuple)}, {"c", c}});
  }
  j["table"] = std::move(rows);
  return j.dump();
}

std::string coh_json(const ChernPoly& root_form, const LaurentPoly& class_form, int degree) {
  json j = envelope();
  j["degree"] = degree;
  j["root_form"] = poly_payload(root_form);
  j["chern_form"] = poly_payload(class_form);
  return j.dump();
}

std::string gpoly_json(const IntegerSequence& lambda, int rank_n, int rank_p,
                       const LaurentPoly& g) {
  json j = envelope();
  j["lambda"] = lambda;
  j["n"] = rank_n;
  j["p"] = rank_p;
  j["gpoly"] = poly_payload(g);
  return j.dump();
}

}  // namespace quiverk
