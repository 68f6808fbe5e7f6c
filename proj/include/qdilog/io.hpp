#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qdilog/quantum_algebra.hpp"
#include "qdilog/strata.hpp"

namespace qdilog {

using Json = nlohmann::json;

/// {"vertices": [names], "arrows": [{"id", "tail", "head"}]}
Quiver quiver_from_json(const Json& j);
Json quiver_to_json(const Quiver& q);
Quiver load_quiver(const std::string& path);

/// Inline JSON if the text starts with '[' or '{', otherwise a file path.
Json read_json_argument(const std::string& spec_or_path);

/// Array of vertex-name arrays.
std::vector<std::vector<std::string>> partition_from_json(const Json& j);

/// Object vertex name -> integer; absent vertices are 0.
DimVector gamma_from_json(const Quiver& q, const Json& j);

Json to_json(const DimVector& g);
DimVector dim_vector_from_json(const Json& j);

/// {"v_max", "min_exp", "coeffs"}; coefficients as decimal strings.
Json to_json(const VSeries& s);
VSeries vseries_from_json(const Json& j);

Json to_json(const KostantPartition& m);
KostantPartition kostant_partition_from_json(const Json& j);
Json to_json(const KostantSeries& m);
KostantSeries kostant_series_from_json(const Json& j);

Json to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const Json& j);

Json to_json(const CodimReport& r);
CodimReport codim_report_from_json(const Json& j);

Json to_json(const BettiReport& r);
BettiReport betti_report_from_json(const Json& j);

}  // namespace qdilog
