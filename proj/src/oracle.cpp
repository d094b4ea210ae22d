#include "univalence/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <tuple>
#include <unordered_map>

namespace univalence {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool lex_less(cplx a, cplx b) {
  return std::pair{a.real(), a.imag()} < std::pair{b.real(), b.imag()};
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

struct GridGeometry {
  double radial_ratio = 0.0;   // q - 1
  double angular_step = 0.0;   // 2 pi / M

  double cell_diameter(double r) const { return r * std::hypot(radial_ratio, angular_step); }

  double neighbour_spacing(double r) const {
    const double radial = radial_ratio > 0.0 ? radial_ratio : angular_step;
    return r * std::min(radial, angular_step);
  }
};

GridGeometry geometry_of(const SamplingPlan& plan) {
  validate_plan(plan);
  GridGeometry g;
  if (plan.radial_count >= 2) {
    g.radial_ratio = std::pow(plan.r_max / plan.r_min, 1.0 / static_cast<double>(plan.radial_count - 1)) - 1.0;
  }
  g.angular_step = 2.0 * std::numbers::pi / static_cast<double>(plan.angular_count);
  return g;
}

struct ImagePoint {
  cplx z;
  cplx w;
  double cell_image = 0.0;  // |f'| x cell diameter
};

// Candidate unordered pairs (i < j) with |w_i - w_j| <= cell_i + cell_j.
// Points are grouped by level l with cell_image <= base * 2^l; each point
// queries the buckets of its own level and every coarser level.
std::vector<std::pair<std::size_t, std::size_t>> bucketed_candidates(const std::vector<ImagePoint>& pts) {
  std::vector<double> cells;
  cells.reserve(pts.size());
  for (const auto& p : pts) cells.push_back(p.cell_image);
  double base = median(cells);
  if (!(base > 0.0)) base = std::numeric_limits<double>::min();

  auto level_of = [&](double cell) {
    if (cell <= base) return 0;
    return static_cast<int>(std::ceil(std::log2(cell / base)));
  };
  using Key = std::pair<long long, long long>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<long long>{}(k.first * 73856093LL ^ k.second * 19349663LL);
    }
  };
  std::map<int, std::unordered_map<Key, std::vector<std::size_t>, KeyHash>> levels;
  std::vector<int> level(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    level[i] = level_of(pts[i].cell_image);
    const double width = std::ldexp(base, level[i]);
    const Key key{static_cast<long long>(std::floor(pts[i].w.real() / width)),
                  static_cast<long long>(std::floor(pts[i].w.imag() / width))};
    levels[level[i]][key].push_back(i);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (auto it = levels.lower_bound(level[i]); it != levels.end(); ++it) {
      const double width = std::ldexp(base, it->first);
      const double radius = pts[i].cell_image + width;
      const long long x0 = static_cast<long long>(std::floor((pts[i].w.real() - radius) / width));
      const long long x1 = static_cast<long long>(std::floor((pts[i].w.real() + radius) / width));
      const long long y0 = static_cast<long long>(std::floor((pts[i].w.imag() - radius) / width));
      const long long y1 = static_cast<long long>(std::floor((pts[i].w.imag() + radius) / width));
      for (long long x = x0; x <= x1; ++x) {
        for (long long y = y0; y <= y1; ++y) {
          const auto bucket = it->second.find(Key{x, y});
          if (bucket == it->second.end()) continue;
          for (std::size_t j : bucket->second) {
            if (j == i) continue;
            // Same-level pairs are seen from both ends; keep one.
            if (level[j] == level[i] && j < i) continue;
            if (std::abs(pts[i].w - pts[j].w) <= pts[i].cell_image + pts[j].cell_image) {
              pairs.emplace_back(std::min(i, j), std::max(i, j));
            }
          }
        }
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<std::pair<std::size_t, std::size_t>> pairwise_candidates(const std::vector<ImagePoint>& pts) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (std::abs(pts[i].w - pts[j].w) <= pts[i].cell_image + pts[j].cell_image) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

// Solves f(z) = target by Newton from `start`.
std::optional<cplx> newton_preimage(const MeromorphicFn& f, cplx target, cplx start) {
  cplx z = start;
  for (int iter = 0; iter < 60; ++iter) {
    TaylorJet<1> j;
    try {
      j = f.jet<1>(z);
    } catch (const Error&) {
      return std::nullopt;
    }
    if (j.d1() == cplx{0.0, 0.0}) return std::nullopt;
    const cplx step = (j.value() - target) / j.d1();
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) return z;
  }
  return z;
}

}  // namespace

cplx evaluate_plain(const MeromorphicFn& f, cplx z) {
  return std::visit(
      overloaded{
          [&](const Identity&) { return z; },
          [&](const Joukowski& j) {
            if (z == cplx{0.0, 0.0}) throw Error(ErrorKind::PoleAtPoint, "pole at 0", z);
            return z + j.c / z;
          },
          [&](const Laurent& l) {
            if (z == cplx{0.0, 0.0}) throw Error(ErrorKind::PoleAtPoint, "pole at 0", z);
            const cplx inv = 1.0 / z;
            cplx tail{0.0, 0.0};
            for (auto it = l.tail.rbegin(); it != l.tail.rend(); ++it) tail = (tail + *it) * inv;
            return l.b * z + l.b0 + tail;
          },
          [&](const MoebiusOf& m) {
            const cplx inner = evaluate_plain(*m.inner, z);
            const cplx den = m.c * inner + m.d;
            if (den == cplx{0.0, 0.0}) throw Error(ErrorKind::PoleAtPoint, "Moebius denominator vanishes", z);
            return (m.a * inner + m.b) / den;
          },
      },
      f.spec());
}

CollisionReport injectivity_scan(const MeromorphicFn& f, const SamplingPlan& plan,
                                 const InjectivityOptions& options) {
  return injectivity_scan(f, sample_exterior(plan), plan, options);
}

CollisionReport injectivity_scan(const MeromorphicFn& f, const std::vector<cplx>& points,
                                 const SamplingPlan& plan, const InjectivityOptions& options) {
  const GridGeometry geom = geometry_of(plan);
  std::vector<ImagePoint> pts;
  pts.reserve(points.size());
  std::vector<double> image_spacing;
  std::vector<double> domain_spacing;
  for (cplx z : points) {
    TaylorJet<1> j;
    try {
      j = f.jet<1>(z);
    } catch (const Error& e) {
      throw Error(ErrorKind::EvaluationFailure, e.what(), z);
    }
    const double r = std::abs(z);
    const double stretch = std::abs(j.d1());
    pts.push_back({z, j.value(), stretch * geom.cell_diameter(r)});
    image_spacing.push_back(stretch * geom.neighbour_spacing(r));
    domain_spacing.push_back(geom.neighbour_spacing(r));
  }

  CollisionReport report;
  report.grid_size = pts.size();
  report.collision_tolerance = options.collision_tolerance.value_or(1e-9 * median(image_spacing));
  report.separation_floor = options.separation_floor.value_or(2.0 * median(domain_spacing));

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  if (options.mode == ScanMode::pairwise) {
    if (pts.size() > kPairwiseLimit) {
      throw Error(ErrorKind::InvalidPlan, "pairwise mode is limited to 2000 grid points");
    }
    candidates = pairwise_candidates(pts);
  } else {
    candidates = bucketed_candidates(pts);
  }

  const double slack = 1e-12;
  for (const auto& [i, j] : candidates) {
    if (std::abs(pts[i].z - pts[j].z) < report.separation_floor) continue;
    ++report.candidates_examined;
    const bool i_first = lex_less(pts[i].z, pts[j].z);
    const ImagePoint& anchor = i_first ? pts[i] : pts[j];
    const ImagePoint& partner = i_first ? pts[j] : pts[i];
    const auto polished = newton_preimage(f, anchor.w, partner.z);
    if (!polished) continue;
    const double r = std::abs(*polished);
    if (r < plan.r_min * (1.0 - slack) || r > plan.r_max * (1.0 + slack)) continue;
    const double domain_distance = std::abs(*polished - anchor.z);
    if (domain_distance < report.separation_floor) continue;
    const double image_distance = std::abs(f(*polished) - anchor.w);
    if (!(image_distance <= report.collision_tolerance)) continue;
    report.collisions.push_back({anchor.z, *polished, image_distance, domain_distance});
  }

  auto order = [](const Collision& a, const Collision& b) {
    if (a.z1 != b.z1) return lex_less(a.z1, b.z1);
    return lex_less(a.z2, b.z2);
  };
  std::sort(report.collisions.begin(), report.collisions.end(), order);
  auto same = [](const Collision& a, const Collision& b) {
    return a.z1 == b.z1 && std::abs(a.z2 - b.z2) <= 1e-9 * std::max(1.0, std::abs(a.z2));
  };
  report.collisions.erase(std::unique(report.collisions.begin(), report.collisions.end(), same),
                          report.collisions.end());
  return report;
}

int winding_number(const std::vector<cplx>& contour, cplx point) {
  if (contour.size() < 3) throw Error(ErrorKind::OpenContour, "contour needs at least three samples");
  if (std::abs(contour.front() - contour.back()) > 1e-12 * std::max(1.0, std::abs(contour.front()))) {
    throw Error(ErrorKind::OpenContour, "first and last contour samples differ");
  }
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < contour.size(); ++k) {
    const cplx a = contour[k];
    const cplx b = contour[k + 1];
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    double t = len2 > 0.0 ? ((point - a) * std::conj(ab)).real() / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    if (std::abs(point - (a + t * ab)) <= 1e-9) {
      throw Error(ErrorKind::PointTooCloseToContour, "point lies on the contour", point);
    }
    total += std::arg((b - point) / (a - point));
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= 0.1) {
    throw Error(ErrorKind::PointTooCloseToContour, "phase increments do not close to an integer", point);
  }
  return static_cast<int>(rounded);
}

ComplexJet fd_derivatives(const MeromorphicFn& f, cplx z, double step) {
  if (!(step > 0.0)) throw Error(ErrorKind::StencilLeavesDomain, "step must be positive", z);
  const double h = step;
  for (double offset : {-2.0 * h, -h, h, 2.0 * h}) {
    if (!(std::abs(z + offset) > 1.0)) {
      throw Error(ErrorKind::StencilLeavesDomain, "stencil reaches |z| <= 1", z + offset);
    }
  }
  if (!(std::abs(z) > 1.0)) throw Error(ErrorKind::StencilLeavesDomain, "center outside |z| > 1", z);
  const cplx f0 = evaluate_plain(f, z);
  const cplx fp1 = evaluate_plain(f, z + h);
  const cplx fm1 = evaluate_plain(f, z - h);
  const cplx fp2 = evaluate_plain(f, z + 2.0 * h);
  const cplx fm2 = evaluate_plain(f, z - 2.0 * h);
  const cplx d1 = (fp1 - fm1) / (2.0 * h);
  const cplx d2 = (fp1 - 2.0 * f0 + fm1) / (h * h);
  const cplx d3 = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
  return ComplexJet::from_derivatives({f0, d1, d2, d3});
}

}  // namespace univalence
