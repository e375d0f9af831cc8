#pragma once

// JSON schemas for inputs and reports.

#include <array>
#include <string>

#include <json.hpp>

#include "nodal/goodpoints.hpp"
#include "nodal/grassmann.hpp"
#include "nodal/identities.hpp"
#include "nodal/pick.hpp"

namespace nodal {

using Json = nlohmann::json;

/// Parses a file; InputError on I/O or syntax errors.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

/// [re, im] or a bare real number.
Complex complex_from_json(const Json& j);
Json complex_to_json(Complex z);
Json matrix_to_json(const ComplexMatrix& m);

/// {"lambda": [re,im], "nodes": [[re,im],...]}.
NodeConfig node_config_from_json(const Json& j);
Json to_json(const NodeConfig& cfg);

/// Node config plus "targets": scalars [[re,im],...] or blocks (list of k x k
/// arrays of [re,im]); an optional "k" must match the block size.
InterpolationProblem problem_from_json(const Json& j);
Json to_json(const InterpolationProblem& prob);

/// {"lambda": real, "points": [4 reals]}.
struct GoodPointsInput {
  double lambda;
  std::array<double, 4> points;
};
GoodPointsInput goodpoints_input_from_json(const Json& j);

Json to_json(const ScalarParam& p);
Json to_json(const MatrixParam& p);
Json to_json(const FamilyParam& p);
Json to_json(const SamplingPlan& plan);
Json to_json(const FeasibilityReport& rep);
Json to_json(const NormReport& rep);
Json to_json(const BivarPoly& p);  // [[deg_x, deg_y, "p/q"], ...]
Json to_json(const IdentityReport& rep);
Json to_json(const GoodPointsReport& rep, bool include_samples = false);
Json to_json(const QSqrt2& v);  // {"a": "p/q", "b": "p/q", "text": ..., "value": double}
Json to_json(const PaperCertificate& cert);
Json to_json(const EmbedRecord& rec);

std::string verdict_name(Verdict v);

}  // namespace nodal
