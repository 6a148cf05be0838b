#include "confspace/json_io.hpp"

#include <limits>

namespace confspace {

Json poset_to_json(const FacePoset& poset) {
  Json out;
  out["d"] = poset.d();
  out["n"] = poset.n();
  out["kind"] = to_string(poset.kind());
  Json elements = Json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& e = poset.element(i);
    elements.push_back(Json{{"sigma", e.sigma()}, {"seps", e.seps()}, {"dim", poset.dim(i)}});
  }
  out["elements"] = std::move(elements);
  Json covers = Json::array();
  for (auto [lo, hi] : poset.covers()) covers.push_back(Json::array({lo, hi}));
  out["covers"] = std::move(covers);
  return out;
}

Json big_to_json(const BigInt& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

Json report_to_json(const ObstructionReport& report) {
  Json out;
  out["n"] = report.n;
  out["d"] = report.d;
  out["gcd"] = big_to_json(report.gcd);
  if (report.prime_power)
    out["prime_power"] = Json{{"p", report.prime_power->p}, {"k", report.prime_power->k}};
  else
    out["prime_power"] = nullptr;
  out["group"] = report.group();
  out["map_exists"] = report.map_exists;
  if (report.witness) {
    Json values = Json::array();
    for (const auto& x : report.witness->values) values.push_back(big_to_json(x));
    out["witness"] = std::move(values);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

ConfigurationXd configuration_from_json(const Json& points) {
  if (!points.is_array() || points.empty()) throw MalformedInput("points must be a non-empty array");
  const std::size_t n = points.size();
  if (!points[0].is_array() || points[0].empty()) throw MalformedInput("each point must be a coordinate list");
  const std::size_t d = points[0].size();
  ConfigurationXd config(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const auto& p = points[k];
    if (!p.is_array() || p.size() != d) throw MalformedInput("points must all have the same dimension");
    for (std::size_t i = 0; i < d; ++i) {
      if (!p[i].is_number()) throw MalformedInput("coordinates must be numbers");
      config(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = p[i].get<double>();
    }
  }
  return config;
}

namespace {

std::vector<Vec2> planar_points(const Json& points, const char* what) {
  if (!points.is_array()) throw MalformedInput(std::string(what) + " must be an array of [x, y] pairs");
  std::vector<Vec2> out;
  for (const auto& p : points) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw MalformedInput(std::string(what) + " must be an array of [x, y] pairs");
    out.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return out;
}

Json pairs(const Sites& sites) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < sites.cols(); ++i) out.push_back(Json::array({sites(0, i), sites(1, i)}));
  return out;
}

Json vector_json(const Eigen::VectorXd& v) { return Json(std::vector<double>(v.data(), v.data() + v.size())); }

}  // namespace

EquipartRequest parse_equipart_request(const Json& input) {
  if (!input.is_object()) throw MalformedInput("input must be a JSON object");
  EquipartRequest req;
  if (!input.contains("polygon")) throw MalformedInput("missing polygon");
  try {
    req.polygon = Polygon(planar_points(input.at("polygon"), "polygon"));
  } catch (const MalformedInput&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(std::string("bad polygon: ") + e.what());
  }

  const std::string mode = input.value("mode", std::string("weights"));
  if (mode == "weights")
    req.mode = EquipartMode::weights;
  else if (mode == "equalize")
    req.mode = EquipartMode::equalize;
  else
    throw MalformedInput("mode must be \"weights\" or \"equalize\"");

  try {
    if (input.contains("tol")) req.tol = input.at("tol").get<double>();
    if (input.contains("seed")) req.seed = input.at("seed").get<std::uint64_t>();
    if (input.contains("n")) req.n = input.at("n").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("bad scalar field: ") + e.what());
  }
  if (!(req.tol > 0.0)) throw MalformedInput("tol must be positive");

  if (input.contains("sites")) {
    const auto pts = planar_points(input.at("sites"), "sites");
    Sites sites(2, static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) sites.col(static_cast<Eigen::Index>(i)) = pts[i];
    req.sites = std::move(sites);
  }
  if (req.mode == EquipartMode::weights) {
    if (!req.sites || req.sites->cols() == 0) throw MalformedInput("weights mode needs sites");
    if (req.n == 0) req.n = static_cast<int>(req.sites->cols());
    if (req.n != req.sites->cols()) throw MalformedInput("n does not match the number of sites");
  }
  if (req.n < 1) throw MalformedInput("n must be at least 1");
  return req;
}

Json outcome_to_json(const EquipartOutcome& outcome) {
  const auto& diagram = outcome.diagram;
  Json out;
  out["sites"] = pairs(diagram.sites);
  out["weights"] = vector_json(diagram.weights);
  Json cells = Json::array();
  for (const auto& cell : diagram.cells) {
    Json verts = Json::array();
    for (const auto& v : cell.vertices()) verts.push_back(Json::array({v.x(), v.y()}));
    cells.push_back(std::move(verts));
  }
  out["cells"] = std::move(cells);
  out["areas"] = vector_json(diagram.areas);
  out["perimeters"] = vector_json(diagram.perimeters);
  out["spread"] = outcome.spread;
  out["iterations"] = outcome.iterations;
  out["converged"] = outcome.converged;
  return out;
}

}  // namespace confspace
