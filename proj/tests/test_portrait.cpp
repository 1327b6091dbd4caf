#include "catch_amalgamated.hpp"

#include "sphereflow/portrait.hpp"
#include "support.hpp"

#include <regex>

using namespace sphereflow;

namespace {

KolmogorovParams kolmo(int A, int B, int C) { return {0, 0, 0, A, B, C}; }

PortraitSettings small()
{
  PortraitSettings s;
  s.rings = 4;
  s.spokes = 8;
  s.duration = 3.0;
  return s;
}

std::string reverse_stability(std::string s)
{
  static std::regex const token("(stable|unstable)-");
  std::string out;
  std::sregex_iterator it(s.begin(), s.end(), token), end;
  std::size_t last = 0;
  for (; it != end; ++it) {
    out += s.substr(last, it->position() - last);
    out += (*it)[1] == "stable" ? "unstable-" : "stable-";
    last = it->position() + it->length();
  }
  return out + s.substr(last);
}

int count(std::string const &text, std::string const &needle)
{
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

} // namespace

TEST_CASE("topology signatures of the six sign cases", "[portrait]")
{
  std::array<std::array<int, 3>, 3> const cases{{{1, 1, 1}, {-1, 1, 1}, {1, 1, -1}}};
  std::vector<std::string> all;
  for (auto const &[A, B, C] : cases) {
    std::string const forward = run_portrait(build_kolmogorov(kolmo(A, B, C)), small()).report["signature"];
    std::string const backward = run_portrait(build_kolmogorov(kolmo(-A, -B, -C)), small()).report["signature"];
    CHECK(backward == reverse_stability(forward));
    all.push_back(forward);
    all.push_back(backward);
  }
  std::sort(all.begin(), all.end());
  CHECK(std::unique(all.begin(), all.end()) == all.end());

  CHECK(all.end() != std::find(all.begin(), all.end(), "origin:unstable-node|axis-u:stable-node|axis-v:saddle|interior:none"));
  std::string const doubled = run_portrait(build_kolmogorov(kolmo(2, 2, 2)), small()).report["signature"];
  std::string const unit = run_portrait(build_kolmogorov(kolmo(1, 1, 1)), small()).report["signature"];
  CHECK(doubled == unit);
}

TEST_CASE("axis classifications follow the closed-form Jacobians", "[portrait]")
{
  // origin 2 diag(B, C); (1, 0): 8 diag(-B, -A); (0, 1): 8 diag(A, -C).
  std::string const sig = run_portrait(build_kolmogorov(kolmo(-1, 1, 1)), small()).report["signature"];
  CHECK(sig == "origin:unstable-node|axis-u:saddle|axis-v:stable-node|interior:none");
}

TEST_CASE("singular boundary", "[portrait]")
{
  PortraitOutput const out = run_portrait(build_kolmogorov(kolmo(0, 1, 1)), small());
  CHECK(out.report["boundary"]["singular_curve"] == true);
  CHECK(out.svg.find("singular-curve") != std::string::npos);
  CHECK(out.report["no_periodic_orbit"] == true);
}

TEST_CASE("interior points of A = 5, B = -1, C = 2", "[portrait]")
{
  PortraitOutput const out = run_portrait(build_kolmogorov(kolmo(5, -1, 2)), small());
  CHECK(out.report["signature"] == "origin:saddle|axis-u:saddle|axis-v:saddle|interior:center-or-focus");
  CHECK(count(out.svg, "data-class=\"center-or-focus\"") == 4);
}

TEST_CASE("portrait output properties", "[portrait][property]")
{
  for (auto const &k : {kolmo(1, 1, 1), kolmo(5, -1, 2), kolmo(1, -2, -1)}) {
    SphereField const X = build_kolmogorov(k);
    PortraitOutput const a = run_portrait(X, small());
    PortraitOutput const b = run_portrait(X, small());
    CHECK(a.svg == b.svg);
    CHECK(a.report.dump() == b.report.dump());

    // One glyph per singular point in the closed disk.
    int in_disk = 0;
    for (auto const &s : a.report["singularities"]) {
      if (s.contains("planar") && !s["planar"].is_null()) {
        double const u = s["planar"][0], v = s["planar"][1];
        if (std::hypot(u, v) <= 1 + 1e-12) ++in_disk;
      }
    }
    CHECK(count(a.svg, "class=\"singularity\"") == in_disk);

    // Polyline vertices stay in the disk (viewport centre 400, radius 360, line width allowance 1 px).
    std::regex const points("class=\"trajectory\"[^>]*points=\"([^\"]*)\"");
    for (std::sregex_iterator it(a.svg.begin(), a.svg.end(), points), end; it != end; ++it) {
      std::istringstream in((*it)[1].str());
      double px = 0, py = 0;
      char comma = 0;
      while (in >> px >> comma >> py) {
        CHECK(std::hypot(px - 400, py - 400) <= 361.0);
      }
    }
  }
  PortraitSettings other = small();
  other.seed = 7;
  CHECK(run_portrait(build_kolmogorov(kolmo(1, 1, 1)), other).svg !=
        run_portrait(build_kolmogorov(kolmo(1, 1, 1)), small()).svg);
}
