#ifndef CONFSPACE_JSON_IO_HPP
#define CONFSPACE_JSON_IO_HPP

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "confspace/configuration.hpp"
#include "confspace/equipartition.hpp"
#include "confspace/face_poset.hpp"
#include "confspace/obstruction.hpp"

namespace confspace {

using Json = nlohmann::ordered_json;

class MalformedInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// {d, n, kind, elements: [{sigma, seps, dim}], covers: [[lo, hi], ...]}
Json poset_to_json(const FacePoset& poset);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json big_to_json(const BigInt& value);

/// {n, d, gcd, prime_power: {p, k} | null, group, map_exists, witness | null}
Json report_to_json(const ObstructionReport& report);

/// Points given as a list of n coordinate lists of equal length d.
ConfigurationXd configuration_from_json(const Json& points);

enum class EquipartMode { weights, equalize };

struct EquipartRequest {
  Polygon polygon;
  int n = 0;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  EquipartMode mode = EquipartMode::weights;
  std::optional<Sites> sites;
};

/// {polygon: [[x, y], ...], n, tol, seed, mode: "weights" | "equalize",
///  sites: [[x, y], ...]}. Sites are required in weights mode; n defaults to
/// the number of sites there. Throws MalformedInput.
EquipartRequest parse_equipart_request(const Json& input);

struct EquipartOutcome {
  PowerDiagram diagram;
  double spread = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// {sites, weights, cells, areas, perimeters, spread, iterations, converged}
Json outcome_to_json(const EquipartOutcome& outcome);

}  // namespace confspace

#endif  // CONFSPACE_JSON_IO_HPP
