#include "manna/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "manna/baselines.hpp"
#include "manna/errors.hpp"
#include "manna/solve.hpp"

namespace manna {
namespace {

struct ReportData {
  std::vector<std::pair<Rat, Rat>> frontier;
  std::vector<std::pair<Rat, Rat>> competitive;
  std::pair<Rat, Rat> egal;
  std::pair<Rat, Rat> fairShare;
};

ReportData collect(const Problem& p) {
  ReportData data;
  data.frontier = frontier_profiles(p);
  for (const auto& d : solve_competitive(p).divisions)
    data.competitive.emplace_back(d.profile[0], d.profile[1]);
  const UtilityProfile er = egalitarian(p).profile;
  data.egal = {er[0], er[1]};
  const UtilityProfile fs = fair_share(p);
  data.fairShare = {fs[0], fs[1]};
  return data;
}

}  // namespace

std::vector<std::pair<Rat, Rat>> frontier_profiles(const Problem& p) {
  p.validate();
  if (p.num_agents() != 2)
    throw NonPlottable("profile reports need exactly two agents, got " +
                       std::to_string(p.num_agents()));
  if (p.num_items() > 16)
    throw InputError("frontier enumeration capped at sixteen items");

  const size_t m = p.num_items();
  std::vector<std::pair<Rat, Rat>> pts;
  for (size_t bits = 0; bits < (size_t(1) << m); ++bits) {
    Rat u1, u2;
    for (size_t a = 0; a < m; ++a) {
      if (bits >> a & 1) u2 += p.u[1][a]; else u1 += p.u[0][a];
    }
    pts.emplace_back(u1, u2);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto cross = [](const std::pair<Rat, Rat>& o, const std::pair<Rat, Rat>& a,
                  const std::pair<Rat, Rat>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<Rat, Rat>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), pt).sign() >= 0)
      hull.pop_back();
    hull.push_back(pt);
  }
  size_t start = 0;
  for (size_t i = 1; i < hull.size(); ++i)
    if (hull[i].second > hull[start].second) start = i;
  return {hull.begin() + start, hull.end()};
}

std::string report_csv(const Problem& p) {
  const ReportData data = collect(p);
  std::ostringstream os;
  os << "label,U1,U2\n";
  for (const auto& [x, y] : data.frontier)
    os << "frontier," << x << "," << y << "\n";
  for (const auto& [x, y] : data.competitive)
    os << "CR," << x << "," << y << "\n";
  os << "ER," << data.egal.first << "," << data.egal.second << "\n";
  os << "FS," << data.fairShare.first << "," << data.fairShare.second << "\n";
  return os.str();
}

std::string report_svg(const Problem& p) {
  const ReportData data = collect(p);

  double lox = 0, hix = 0, loy = 0, hiy = 0;
  auto widen = [&](const std::pair<Rat, Rat>& pt) {
    lox = std::min(lox, pt.first.to_double());
    hix = std::max(hix, pt.first.to_double());
    loy = std::min(loy, pt.second.to_double());
    hiy = std::max(hiy, pt.second.to_double());
  };
  for (const auto& pt : data.frontier) widen(pt);
  for (const auto& pt : data.competitive) widen(pt);
  widen(data.egal);
  widen(data.fairShare);
  const double padx = 0.08 * std::max(1.0, hix - lox);
  const double pady = 0.08 * std::max(1.0, hiy - loy);
  lox -= padx; hix += padx; loy -= pady; hiy += pady;

  const double W = 480, H = 480;
  auto X = [&](const Rat& v) {
    return (v.to_double() - lox) / (hix - lox) * W;
  };
  auto Y = [&](const Rat& v) {
    return H - (v.to_double() - loy) / (hiy - loy) * H;
  };

  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W
     << "' height='" << H << "' viewBox='0 0 " << W << " " << H << "'>\n";
  os << "  <rect width='" << W << "' height='" << H
     << "' fill='white' stroke='none'/>\n";
  // axes through the origin
  os << "  <line x1='" << X(Rat(0)) << "' y1='0' x2='" << X(Rat(0))
     << "' y2='" << H << "' stroke='#bbbbbb'/>\n";
  os << "  <line x1='0' y1='" << Y(Rat(0)) << "' x2='" << W << "' y2='"
     << Y(Rat(0)) << "' stroke='#bbbbbb'/>\n";
  os << "  <polyline fill='none' stroke='black' stroke-width='1.5' points='";
  for (const auto& [x, y] : data.frontier) os << X(x) << "," << Y(y) << " ";
  os << "'/>\n";
  for (const auto& [x, y] : data.competitive) {
    os << "  <circle cx='" << X(x) << "' cy='" << Y(y)
       << "' r='6' fill='none' stroke='black' stroke-width='2'/>\n";
    os << "  <text x='" << X(x) + 9 << "' y='" << Y(y) - 6
       << "' font-size='12'>CR</text>\n";
  }
  os << "  <rect x='" << X(data.egal.first) - 5 << "' y='"
     << Y(data.egal.second) - 5
     << "' width='10' height='10' fill='none' stroke='black'"
        " stroke-width='2'/>\n";
  os << "  <text x='" << X(data.egal.first) + 9 << "' y='"
     << Y(data.egal.second) - 6 << "' font-size='12'>ER</text>\n";
  const double fx = X(data.fairShare.first), fy = Y(data.fairShare.second);
  os << "  <path d='M " << fx << " " << fy - 7 << " L " << fx + 7 << " " << fy
     << " L " << fx << " " << fy + 7 << " L " << fx - 7 << " " << fy
     << " Z' fill='none' stroke='black' stroke-width='2'/>\n";
  os << "  <text x='" << fx + 9 << "' y='" << fy + 16
     << "' font-size='12'>FS</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace manna
