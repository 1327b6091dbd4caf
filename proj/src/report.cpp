#include "sphereflow/report.hpp"

#include "sphereflow/poly_io.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace sphereflow {

Json to_json(Polynomial const &p) { return to_string(p); }

Json to_json(SphereField const &field)
{
  Json j;
  j["family"] = std::string(to_string(field.family()));
  j["P"] = to_json(field.P());
  j["Q"] = to_json(field.Q());
  j["R"] = to_json(field.R());
  if (field.sphere_cofactor()) {
    j["sphere_cofactor"] = to_json(*field.sphere_cofactor());
  }
  return j;
}

Json to_json(PlanarField const &planar)
{
  Json j;
  j["Pcal"] = to_json(planar.Pcal);
  j["Qcal"] = to_json(planar.Qcal);
  j["Ptilde"] = to_json(planar.Ptilde);
  j["Qtilde"] = to_json(planar.Qtilde);
  j["Rtilde"] = to_json(planar.Rtilde);
  return j;
}

Json to_json(InvariantSetReport const &report)
{
  Json j;
  j["polynomial"] = to_json(report.polynomial);
  j["cofactor"] = to_json(report.cofactor);
  if (report.multiplicity) {
    if (report.multiplicity->infinite) {
      j["multiplicity"] = "infinite";
    } else {
      j["multiplicity"] = report.multiplicity->value;
    }
  }
  return j;
}

Json to_json(CircleSpec const &circle)
{
  return Json::array({to_string(circle.a), to_string(circle.b), to_string(circle.c), to_string(circle.d)});
}

Json to_json(GreatCircleResult const &result)
{
  Json j;
  j["infinite"] = result.infinite;
  j["budget_exhausted"] = result.budget_exhausted;
  j["certified"] = result.certified_count();
  Json circles = Json::array();
  for (auto const &c : result.circles) {
    Json entry;
    entry["direction"] = c.direction;
    entry["residual"] = c.residual;
    if (c.exact) {
      entry["plane"] = to_json(c.exact->plane());
      entry["cofactor"] = to_json(*c.cofactor);
      entry["case"] = great_circle_case(*c.exact);
    } else {
      entry["plane"] = nullptr;
      entry["numeric_only"] = true;
    }
    circles.push_back(std::move(entry));
  }
  j["circles"] = std::move(circles);
  return j;
}

Json to_json(PeriodicityVerdict const &verdict)
{
  Json j;
  j["periodic"] = verdict.periodic;
  j["degenerate"] = verdict.degenerate;
  j["g"] = to_json(verdict.g);
  Json boundary = Json::array();
  for (auto const &c : verdict.boundary.coefficients()) {
    boundary.push_back(to_string(c));
  }
  j["boundary_polynomial_ascending"] = std::move(boundary);
  j["excluded_point_value"] = to_string(verdict.excluded_value);
  j["sturm"] = {{"variations_at_neg_inf", verdict.sturm.variations_at_neg_inf},
                {"variations_at_pos_inf", verdict.sturm.variations_at_pos_inf},
                {"real_roots", verdict.sturm.roots}};
  return j;
}

std::string location_class(SingularityReport const &report)
{
  if (!report.planar) {
    return "outside";
  }
  double const u = (*report.planar)[0], v = (*report.planar)[1];
  double const r = std::hypot(u, v);
  if (r > 1.0 + 1e-9) {
    return "outside";
  }
  if (r < 1e-9) {
    return "origin";
  }
  bool const on_boundary = std::abs(r - 1.0) <= 1e-9;
  if (on_boundary && std::abs(v) < 1e-9) {
    return "axis-u";
  }
  if (on_boundary && std::abs(u) < 1e-9) {
    return "axis-v";
  }
  return on_boundary ? "boundary" : "interior";
}

Json to_json(SingularityReport const &report)
{
  Json j;
  j["sphere"] = report.sphere_point;
  if (report.exact_point) {
    j["exact"] = Json::array();
    for (auto const &c : *report.exact_point) {
      j["exact"].push_back(to_string(c));
    }
  }
  if (report.squared_point) {
    j["squared"] = Json::array();
    for (auto const &c : *report.squared_point) {
      j["squared"].push_back(to_string(c));
    }
  }
  j["planar"] = report.planar ? Json(*report.planar) : Json(nullptr);
  j["location"] = location_class(report);
  j["jacobian"] = {{report.jacobian(0, 0), report.jacobian(0, 1)}, {report.jacobian(1, 0), report.jacobian(1, 1)}};
  j["trace"] = report.trace;
  j["determinant"] = report.determinant;
  j["discriminant"] = report.discriminant;
  j["eigenvalues"] = Json::array();
  for (auto const &e : report.eigenvalues) {
    j["eigenvalues"].push_back({{"re", e.real()}, {"im", e.imag()}});
  }
  j["classification"] = std::string(to_string(report.classification));
  j["provenance"] = std::string(to_string(report.provenance));
  return j;
}

std::string to_string(Real50 const &value, int digits)
{
  std::ostringstream out;
  out << std::setprecision(digits) << value;
  return out.str();
}

Json to_json(InteriorCharacteristicData const &data)
{
  Json j;
  auto put = [&](char const *key, Real50 const &v) {
    j[key] = {{"value", v.convert_to<double>()}, {"digits", to_string(v)}};
  };
  put("u0", data.u0);
  put("v0", data.v0);
  put("D2", data.D2);
  put("F", data.F);
  put("trace", data.trace);
  put("Pv", data.Pv);
  put("Delta", data.Delta);
  put("factor_plus", data.factor_plus);
  put("factor_minus", data.factor_minus);
  return j;
}

} // namespace sphereflow
