#include "sphereflow/portrait.hpp"

#include "sphereflow/integrator.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace sphereflow {

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 0.05 * kSize;
constexpr double kScale = (kSize - 2.0 * kMargin) / 2.0;

std::string fmt(double value)
{
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  std::string s(buffer);
  return s == "-0.00" ? "0.00" : s;
}

double sx(double u) { return kSize / 2.0 + kScale * u; }
double sy(double v) { return kSize / 2.0 - kScale * v; }

std::string colour(Classification c)
{
  switch (c) {
  case Classification::StableNode:
  case Classification::StableFocus:
    return "#1f5fbf";
  case Classification::UnstableNode:
  case Classification::UnstableFocus:
    return "#c0392b";
  case Classification::Saddle:
    return "#2e8b57";
  case Classification::CenterOrFocus:
    return "#8e44ad";
  case Classification::Degenerate:
    return "#7f7f7f";
  }
  return "#000000";
}

std::string glyph(SingularityReport const &r)
{
  double const x = sx((*r.planar)[0]), y = sy((*r.planar)[1]);
  std::string const c = colour(r.classification);
  std::ostringstream out;
  out << "<g class=\"singularity\" data-class=\"" << to_string(r.classification) << "\">";
  switch (r.classification) {
  case Classification::StableNode:
    out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"6\" fill=\"" << c << "\"/>";
    break;
  case Classification::UnstableNode:
    out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"6\" fill=\"white\" stroke=\"" << c
        << "\" stroke-width=\"2\"/>";
    break;
  case Classification::Saddle:
    out << "<rect x=\"" << fmt(x - 5) << "\" y=\"" << fmt(y - 5) << "\" width=\"10\" height=\"10\" fill=\"" << c
        << "\"/>";
    break;
  case Classification::StableFocus:
  case Classification::UnstableFocus:
  case Classification::CenterOrFocus: {
    bool const filled = r.classification == Classification::StableFocus;
    out << "<polygon points=\"" << fmt(x) << "," << fmt(y - 7) << " " << fmt(x + 7) << "," << fmt(y) << " "
        << fmt(x) << "," << fmt(y + 7) << " " << fmt(x - 7) << "," << fmt(y) << "\" fill=\""
        << (filled ? c : std::string("white")) << "\" stroke=\"" << c << "\" stroke-width=\"2\"/>";
    break;
  }
  case Classification::Degenerate:
    out << "<polygon points=\"" << fmt(x) << "," << fmt(y - 7) << " " << fmt(x + 6) << "," << fmt(y + 5) << " "
        << fmt(x - 6) << "," << fmt(y + 5) << "\" fill=\"" << c << "\"/>";
    break;
  }
  out << "</g>\n";
  return out.str();
}

struct SeedResult
{
  std::vector<Eigen::Vector2d> forward, backward;
  std::string failure;
};

/// Arrow at the arc-length midpoint, pointing along the direction of the flow.
std::string arrow(std::vector<Eigen::Vector2d> const &path, bool reversed)
{
  if (path.size() < 3) {
    return {};
  }
  std::vector<double> length(path.size(), 0.0);
  for (std::size_t i = 1; i < path.size(); ++i) {
    length[i] = length[i - 1] + (path[i] - path[i - 1]).norm();
  }
  if (length.back() < 0.05) {
    return {};
  }
  std::size_t i = 1;
  while (i + 1 < path.size() && length[i] < length.back() / 2.0) {
    ++i;
  }
  Eigen::Vector2d d = path[i] - path[i - 1];
  if (d.norm() == 0.0) {
    return {};
  }
  d.normalize();
  if (reversed) {
    d = -d;
  }
  // Screen coordinates flip v.
  Eigen::Vector2d const tip(sx(path[i](0)), sy(path[i](1)));
  Eigen::Vector2d const dir(d(0), -d(1));
  Eigen::Vector2d const normal(-dir(1), dir(0));
  Eigen::Vector2d const a = tip - 9.0 * dir + 4.0 * normal;
  Eigen::Vector2d const b = tip - 9.0 * dir - 4.0 * normal;
  return "<polygon class=\"arrow\" points=\"" + fmt(tip(0)) + "," + fmt(tip(1)) + " " + fmt(a(0)) + "," + fmt(a(1)) +
         " " + fmt(b(0)) + "," + fmt(b(1)) + "\" fill=\"#333333\"/>\n";
}

std::string polyline(std::vector<Eigen::Vector2d> const &path)
{
  std::string out = "<polyline class=\"trajectory\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\" points=\"";
  std::string last;
  bool first = true;
  for (auto const &p : path) {
    std::string const pt = fmt(sx(p(0))) + "," + fmt(sy(p(1)));
    if (pt == last) {
      continue;
    }
    if (!first) {
      out += ' ';
    }
    out += pt;
    last = pt;
    first = false;
  }
  return out + "\"/>\n";
}

std::vector<SingularityReport> singular_points(SphereField const &field, PlanarField const &planar,
                                               bool singular_boundary)
{
  if (field.kolmogorov()) {
    return analyze_kolmogorov(*field.kolmogorov());
  }
  std::vector<SingularityReport> reports;
  for (auto const &p : find_planar_singularities(planar, 41, singular_boundary)) {
    SingularityReport r;
    double const rho = p[0] * p[0] + p[1] * p[1];
    r.sphere_point = {2 * p[0] / (1 + rho), 2 * p[1] / (1 + rho), (1 - rho) / (1 + rho)};
    r.planar = p;
    reports.push_back(std::move(r));
  }
  analyze_singularities(field, reports);
  return reports;
}

Json invariant_circles(SphereField const &field)
{
  Json out = Json::array();
  if (is_homogeneous_field(field)) {
    return to_json(solve_great_circles_homogeneous(field))["circles"];
  }
  auto const [x, y, z] = sphere_vars();
  for (auto const &plane : {x, y, z}) {
    if (auto report = cofactor_of(field, plane)) {
      out.push_back({{"plane", to_json(plane)}, {"cofactor", to_json(report->cofactor)}});
    }
  }
  return out;
}

} // namespace

std::string topology_signature(Json const &report)
{
  std::map<std::string, std::set<std::string>> classes;
  for (auto const &s : report.at("singularities")) {
    std::string const location = s.at("location").get<std::string>();
    if (location != "outside") {
      classes[location].insert(s.at("classification").get<std::string>());
    }
  }
  bool const singular_curve = report.contains("boundary") && report["boundary"].value("singular_curve", false);
  if (singular_curve) {
    classes["boundary"].insert("singular-curve");
  }
  auto join = [&](std::string const &key) {
    auto const it = classes.find(key);
    if (it == classes.end()) {
      return std::string("none");
    }
    std::string out;
    for (auto const &c : it->second) {
      out += (out.empty() ? "" : "+") + c;
    }
    return out;
  };
  std::string sig = "origin:" + join("origin") + "|axis-u:" + join("axis-u") + "|axis-v:" + join("axis-v") +
                    "|interior:" + join("interior");
  if (classes.count("boundary")) {
    sig += "|boundary:" + join("boundary");
  }
  return sig;
}

PortraitOutput run_portrait(SphereField const &field, PortraitSettings const &settings)
{
  if (settings.rings <= 0 || settings.spokes <= 0 || !(settings.duration > 0) || !(settings.tolerance > 0)) {
    throw std::invalid_argument("run_portrait: rings, spokes, duration and tolerance must be positive");
  }
  PlanarField const planar = pushforward(field);
  bool const singular_boundary = boundary_is_singular(planar);
  bool const invariant_boundary = exact_divide(planar.Rtilde, unit_circle_polynomial()).has_value();
  std::vector<SingularityReport> const singular = singular_points(field, planar, singular_boundary);

  Json report;
  report["field"] = to_json(field);
  report["settings"] = {{"rings", settings.rings},     {"spokes", settings.spokes},
                        {"duration", settings.duration}, {"tolerance", settings.tolerance},
                        {"seed", settings.seed},       {"arrows", settings.arrows}};
  report["singularities"] = Json::array();
  for (auto const &s : singular) {
    report["singularities"].push_back(to_json(s));
  }
  report["boundary"] = {{"invariant", invariant_boundary}, {"singular_curve", singular_boundary}};
  if (auto const &d = field.decomposition(); d && great_circle_form_check(*d)) {
    report["periodicity"] = to_json(great_circle_is_periodic(*d));
  } else {
    report["periodicity"] = nullptr;
  }
  if (auto const &k = field.kolmogorov()) {
    report["no_periodic_orbit"] = no_periodic_orbit_predicate(*k);
    report["degenerate"] = kolmogorov_degenerate(*k);
  }
  report["invariant_circles"] = invariant_circles(field);

  // Seeds: ring/spoke pattern with a seeded angular offset, away from singular points.
  std::mt19937_64 rng(settings.seed);
  double const offset = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi / settings.spokes)(rng);
  std::vector<Eigen::Vector2d> seeds;
  for (int i = 0; i < settings.rings; ++i) {
    double const r = (i + 0.5) / settings.rings;
    for (int j = 0; j < settings.spokes; ++j) {
      double const theta = offset + 2.0 * std::numbers::pi * j / settings.spokes;
      Eigen::Vector2d const p(r * std::cos(theta), r * std::sin(theta));
      bool const near = std::any_of(singular.begin(), singular.end(), [&](SingularityReport const &s) {
        return s.planar && std::hypot((*s.planar)[0] - p(0), (*s.planar)[1] - p(1)) < 1e-3;
      });
      if (!near) {
        seeds.push_back(p);
      }
    }
  }
  IntegrationControls controls;
  controls.rtol = settings.tolerance;
  controls.atol = settings.tolerance * 1e-2;
  controls.bounded_speed = true;
  controls.max_step = 0.02;
  controls.max_steps = 20000;
  std::vector<std::future<SeedResult>> jobs;
  jobs.reserve(seeds.size());
  for (auto const &seed : seeds) {
    jobs.push_back(std::async(std::launch::async, [&planar, &controls, &settings, seed] {
      SeedResult out;
      try {
        for (double sign : {1.0, -1.0}) {
          auto const t = integrate(planar, seed, sign * settings.duration, controls);
          if (t.stop == StopReason::StepUnderflow) {
            out.failure = "step-underflow";
          }
          (sign > 0 ? out.forward : out.backward) = t.points;
        }
      } catch (std::exception const &e) {
        out.failure = e.what();
      }
      return out;
    }));
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  svg << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  Json skipped = Json::array();
  int drawn = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    SeedResult const r = jobs[i].get();
    if (!r.failure.empty()) {
      skipped.push_back({{"seed", {seeds[i](0), seeds[i](1)}}, {"reason", r.failure}});
      continue;
    }
    ++drawn;
    svg << polyline(r.forward) << polyline(r.backward);
    if (settings.arrows) {
      svg << arrow(r.forward, false) << arrow(r.backward, true);
    }
  }
  if (singular_boundary) {
    svg << "<circle class=\"singular-curve\" cx=\"400.00\" cy=\"400.00\" r=\"" << fmt(kScale)
        << "\" fill=\"none\" stroke=\"#7f7f7f\" stroke-width=\"4\" stroke-dasharray=\"6,4\"/>\n";
  } else {
    svg << "<circle class=\"boundary\" cx=\"400.00\" cy=\"400.00\" r=\"" << fmt(kScale)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (auto const &s : singular) {
    if (s.in_closed_disk()) {
      svg << glyph(s);
    }
  }
  svg << "</svg>\n";
  report["trajectories"] = {{"seeds", seeds.size()}, {"drawn", drawn}, {"skipped", std::move(skipped)}};
  report["signature"] = topology_signature(report);
  return {svg.str(), std::move(report)};
}

} // namespace sphereflow
