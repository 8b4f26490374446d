#include "permlab/serialize.hpp"

#include <cstdint>
#include <limits>

#include "permlab/errors.hpp"

namespace permlab {

Json to_json(const Permutation& p) {
  Json j = Json::array();
  for (int v : p.values()) j.push_back(v);
  return j;
}

Json to_json(const MultiPoly& poly) {
  static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
  static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
  Json terms = Json::array();
  for (const auto& [e, c] : poly.terms()) {
    Json coeff;
    if (c >= kMin && c <= kMax) {
      coeff = static_cast<std::int64_t>(c);
    } else {
      coeff = c.str();
    }
    terms.push_back({{"exp", e}, {"coeff", coeff}});
  }
  return {{"vars", poly.vars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json& j) {
  try {
    const auto vars = j.at("vars").get<std::vector<std::string>>();
    MultiPoly out(vars);
    for (const auto& t : j.at("terms")) {
      const auto& c = t.at("coeff");
      const BigInt coeff = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<std::int64_t>());
      out += MultiPoly::monomial(vars, t.at("exp").get<Exponent>(), coeff);
    }
    return out;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json to_json(const Tableau& t) { return t.rows; }

Json to_json(const Statistics& s) {
  return {{"fp", s.fp}, {"exc", s.exc}, {"crs", s.crs},
          {"nes", s.nes}, {"inv", s.inv}, {"maj", s.maj}};
}

Json to_json(const ArcPair& a) {
  return {{"i", a.i}, {"j", a.j}, {"kind", std::string(arc_kind_name(a.kind))}};
}

Json to_json(const Tunnel& t) {
  Json mid;
  if (t.midpoint_x2 % 2 == 0) {
    mid = t.midpoint_x2 / 2;
  } else {
    mid = static_cast<double>(t.midpoint_x2) / 2.0;
  }
  return {{"up_index", t.up_index},
          {"down_index", t.down_index},
          {"midpoint_x", mid},
          {"side", std::string(tunnel_side_name(t.side))}};
}

Json to_json(const ThetaTraceRow& row) {
  Json ins = nullptr;
  if (row.insertion) ins = Json::array({row.insertion->first, row.insertion->second});
  return {{"l", row.l},
          {"reduced_prefix", row.reduced_prefix.to_string()},
          {"insertion", ins},
          {"image", row.image.to_string()}};
}

Json to_json(const ThetaTrace& trace) {
  Json j = Json::array();
  for (const auto& row : trace) j.push_back(to_json(row));
  return j;
}

Json to_json(const WilfReport& report) {
  Json stats = Json::array();
  for (Stat s : report.stats) stats.push_back(std::string(stat_name(s)));
  Json classes = Json::array();
  for (const auto& c : report.classes) {
    Json pats = Json::array();
    for (const auto& p : c.patterns) pats.push_back(p.to_compact());
    Json witness = Json::object();
    for (std::size_t n = 0; n < c.witness.size(); ++n) {
      witness[std::to_string(n + 1)] = c.witness[n].pretty();
    }
    classes.push_back({{"patterns", pats}, {"witness", witness}});
  }
  return {{"stats", stats},
          {"n_range", Json::array({report.n_min, report.n_max})},
          {"classes", classes}};
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    const auto& c = cells[i];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      out += c;
      continue;
    }
    out += '"';
    for (char ch : c) {
      if (ch == '"') out += '"';
      out += ch;
    }
    out += '"';
  }
  return out;
}

std::string poly_to_csv(const MultiPoly& poly) {
  std::vector<std::string> header = poly.vars();
  header.push_back("coeff");
  std::string out = csv_row(header) + "\n";
  for (const auto& [e, c] : poly.terms()) {
    std::vector<std::string> row;
    for (auto k : e) row.push_back(std::to_string(k));
    row.push_back(c.str());
    out += csv_row(row) + "\n";
  }
  return out;
}

}  // namespace permlab
