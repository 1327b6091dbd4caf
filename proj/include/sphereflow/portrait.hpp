#pragma once

#include "sphereflow/field_spec.hpp"
#include "sphereflow/report.hpp"

#include <string>

namespace sphereflow {

struct PortraitOutput
{
  std::string svg;
  Json report;
};

/// Singular points, invariant circles, periodicity verdicts and trajectories seeded on
/// `rings` x `spokes` points of the disk, integrated forward and backward.
/// The SVG maps the closed unit disk to an 800 x 800 viewport with a 5% margin, y up.
PortraitOutput run_portrait(SphereField const &field, PortraitSettings const &settings = {});

/// "origin:X|axis-u:Y|axis-v:Z|interior:W" from the report's singular points in the closed disk.
/// Several classes at one location are sorted and joined by '+'; an absent location reads "none".
/// A "boundary" entry is appended only when the report has boundary points off the axes or a
/// boundary made of singular points.
std::string topology_signature(Json const &report);

} // namespace sphereflow
