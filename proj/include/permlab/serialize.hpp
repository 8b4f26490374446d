#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "permlab/bijections.hpp"
#include "permlab/distributions.hpp"
#include "permlab/dyck.hpp"
#include "permlab/poly.hpp"
#include "permlab/statistics.hpp"
#include "permlab/tableaux.hpp"

namespace permlab {

using Json = nlohmann::ordered_json;

/// Entries as a JSON array of integers.
Json to_json(const Permutation& p);

/// {"vars":[...],"terms":[{"exp":[...],"coeff":c},...]} in canonical order.
/// Coefficients outside the int64 range are emitted as decimal strings.
Json to_json(const MultiPoly& poly);
MultiPoly poly_from_json(const Json& j);

/// Arrays of rows.
Json to_json(const Tableau& t);

Json to_json(const Statistics& s);
Json to_json(const ArcPair& a);
Json to_json(const Tunnel& t);
Json to_json(const ThetaTraceRow& row);
Json to_json(const ThetaTrace& trace);
Json to_json(const WilfReport& report);

/// "var1,...,coeff" header followed by one row per term.
std::string poly_to_csv(const MultiPoly& poly);

/// Joins cells with commas; cells containing a comma or quote are quoted.
std::string csv_row(const std::vector<std::string>& cells);

}  // namespace permlab
