#include "wrideal/covernum.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <map>
#include <set>

namespace wrideal {

std::string to_string(CoverKind k) {
  switch (k) {
    case CoverKind::VerticalLine: return "vertical-line";
    case CoverKind::SecondType: return "second-type";
    case CoverKind::SecondTypePi: return "second-type-pi";
    case CoverKind::Graph: return "graph";
    case CoverKind::NondecreasingGraph: return "nondecreasing-graph";
  }
  return "unknown";
}

std::optional<CoverKind> cover_kind_from_string(const std::string& s) {
  for (CoverKind k : {CoverKind::VerticalLine, CoverKind::SecondType, CoverKind::SecondTypePi, CoverKind::Graph,
                      CoverKind::NondecreasingGraph}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

bool compatible(CoverKind kind, Point a, Point b, const std::function<Nat(Point)>& pi) {
  if (a == b) return true;
  switch (kind) {
    case CoverKind::VerticalLine: return a.col == b.col;
    case CoverKind::SecondType: return second_type_pair(a, b);
    case CoverKind::SecondTypePi:
      if (!pi) throw Error("second-type-pi cover needs a map");
      return wrpi_pair(a, b, pi);
    case CoverKind::Graph: return a.col != b.col;
    case CoverKind::NondecreasingGraph: return chi_up_color(a, b) == Color::Zero;
  }
  return false;
}

std::vector<std::string> check_certificate(const CoverCertificate& cert, const PointSet& a,
                                           const std::function<Nat(Point)>& pi) {
  std::vector<std::string> issues;
  PointSet covered;
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    const auto& part = cert.parts[i];
    const auto pts = part.members.points();
    for (std::size_t x = 0; x < pts.size(); ++x) {
      for (std::size_t y = x + 1; y < pts.size(); ++y) {
        if (!compatible(part.kind, pts[x], pts[y], pi)) {
          issues.push_back("part " + std::to_string(i) + " (" + to_string(part.kind) + ") contains incompatible " +
                           to_string(pts[x]) + " and " + to_string(pts[y]));
        }
      }
    }
    covered = covered.united(part.members);
  }
  if (!covered.includes(a)) issues.push_back("certificate does not cover the input");
  if (!a.includes(covered)) issues.push_back("certificate covers points outside the input");
  return issues;
}

namespace {

bool part_less(const CoverPart& x, const CoverPart& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  const auto a = x.members.points();
  const auto b = y.members.points();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_parts(CoverCertificate& cert) { std::sort(cert.parts.begin(), cert.parts.end(), part_less); }

// Preference when labelling a part admissible for several kinds.
constexpr CoverKind kLabelOrder[] = {CoverKind::SecondType, CoverKind::SecondTypePi, CoverKind::NondecreasingGraph,
                                     CoverKind::Graph, CoverKind::VerticalLine};

}  // namespace

CoverCertificate brute_force_cover(const PointSet& a, const CoverUniverse& universe, std::size_t limit) {
  const std::size_t n = a.size();
  if (n > limit) throw Error("oracle scale exceeded");
  if (n == 0) return {};
  if (universe.kinds.empty()) throw Error("no generator system");

  const auto pts = a.points();
  const std::size_t kinds = universe.kinds.size();
  // compat[k][i]: bitmask of points that may share a part of kind k with i.
  std::vector<std::vector<std::uint32_t>> compat(kinds, std::vector<std::uint32_t>(n, 0));
  for (std::size_t k = 0; k < kinds; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (compatible(universe.kinds[k], pts[i], pts[j], universe.pi)) compat[k][i] |= 1u << j;
      }
    }
  }

  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::uint8_t> adm(std::size_t{full} + 1, 0);
  adm[0] = static_cast<std::uint8_t>((1u << kinds) - 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    std::uint8_t bits = 0;
    for (std::size_t k = 0; k < kinds; ++k) {
      if ((adm[rest] >> k & 1) && (rest & ~compat[k][low]) == 0) bits |= static_cast<std::uint8_t>(1u << k);
    }
    adm[mask] = bits;
  }

  constexpr std::uint32_t kInf = ~0u;
  std::vector<std::uint32_t> dp(std::size_t{full} + 1, kInf);
  std::vector<std::uint32_t> choice(std::size_t{full} + 1, 0);
  dp[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t others = mask ^ low;
    std::uint32_t s = others;
    while (true) {
      const std::uint32_t sub = s | low;
      if (adm[sub] && dp[mask ^ sub] != kInf && dp[mask ^ sub] + 1 < dp[mask]) {
        dp[mask] = dp[mask ^ sub] + 1;
        choice[mask] = sub;
      }
      if (s == 0) break;
      s = (s - 1) & others;
    }
  }

  CoverCertificate cert;
  for (std::uint32_t mask = full; mask != 0; mask ^= choice[mask]) {
    const std::uint32_t sub = choice[mask];
    std::vector<Point> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (sub >> i & 1) members.push_back(pts[i]);
    }
    CoverKind label = universe.kinds.front();
    bool found = false;
    for (CoverKind pref : kLabelOrder) {
      for (std::size_t k = 0; k < kinds && !found; ++k) {
        if (universe.kinds[k] == pref && (adm[sub] >> k & 1)) {
          label = pref;
          found = true;
        }
      }
      if (found) break;
    }
    cert.parts.push_back({label, PointSet(std::move(members))});
  }
  sort_parts(cert);
  return cert;
}

CoverCertificate second_type_cover(const PointSet& a) {
  // Sweep intervals [col, sum] by left end; a color is free again once its
  // last interval ended strictly before the current start.
  std::vector<Point> order(a.begin(), a.end());
  std::stable_sort(order.begin(), order.end(),
                   [](Point x, Point y) { return x.col != y.col ? x.col < y.col : sum(x) < sum(y); });
  std::vector<std::vector<Point>> classes;
  std::set<std::size_t> free_colors;
  std::multimap<Nat, std::size_t> busy;  // end -> color
  for (Point p : order) {
    while (!busy.empty() && busy.begin()->first < p.col) {
      free_colors.insert(busy.begin()->second);
      busy.erase(busy.begin());
    }
    std::size_t c;
    if (free_colors.empty()) {
      c = classes.size();
      classes.emplace_back();
    } else {
      c = *free_colors.begin();
      free_colors.erase(free_colors.begin());
    }
    classes[c].push_back(p);
    busy.emplace(sum(p), c);
  }
  CoverCertificate cert;
  for (auto& cls : classes) cert.parts.push_back({CoverKind::SecondType, PointSet(std::move(cls))});
  sort_parts(cert);
  return cert;
}

Nat second_type_cover_number(const PointSet& a) { return second_type_cover(a).cost(); }

CoverCertificate nondecreasing_cover(const PointSet& a) {
  const auto pts = a.points();
  const std::size_t n = pts.size();
  auto below = [&](std::size_t i, std::size_t j) { return pts[i].col < pts[j].col && pts[i].row <= pts[j].row; };
  std::vector<std::ptrdiff_t> match_right(n, -1);  // right j -> left i
  std::vector<std::ptrdiff_t> match_left(n, -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!below(i, j) || seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] < 0 || augment(static_cast<std::size_t>(match_right[j]))) {
        match_right[j] = static_cast<std::ptrdiff_t>(i);
        match_left[i] = static_cast<std::ptrdiff_t>(j);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    seen.assign(n, 0);
    augment(i);
  }
  CoverCertificate cert;
  for (std::size_t start = 0; start < n; ++start) {
    if (match_right[start] >= 0) continue;
    std::vector<Point> chain;
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start); i >= 0; i = match_left[static_cast<std::size_t>(i)]) {
      chain.push_back(pts[static_cast<std::size_t>(i)]);
    }
    cert.parts.push_back({CoverKind::NondecreasingGraph, PointSet(std::move(chain))});
  }
  sort_parts(cert);
  return cert;
}

CoverCertificate graph_cover(const PointSet& a) {
  std::vector<std::vector<Point>> layers;
  std::size_t depth = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    depth = (i > 0 && a[i].col == a[i - 1].col) ? depth + 1 : 0;
    if (layers.size() <= depth) layers.emplace_back();
    layers[depth].push_back(a[i]);
  }
  CoverCertificate cert;
  for (auto& layer : layers) cert.parts.push_back({CoverKind::Graph, PointSet(std::move(layer))});
  sort_parts(cert);
  return cert;
}

namespace {

constexpr std::size_t kPiRemainderLimit = 14;

}  // namespace

PhiResult phi(const IdealPresentation& ideal, const PointSet& a) {
  std::function<CoverCertificate(const PointSet&)> remainder;
  switch (ideal.family()) {
    case Family::WR: remainder = second_type_cover; break;
    case Family::ED: remainder = graph_cover; break;
    case Family::EDup: remainder = nondecreasing_cover; break;
    case Family::WRpi: {
      auto pi = std::make_shared<MapSpec>(ideal.pi());
      remainder = [pi](const PointSet& rest) {
        return brute_force_cover(rest, {{CoverKind::SecondTypePi}, [pi](Point p) { return pi->value(p); }},
                                 kPiRemainderLimit);
      };
      break;
    }
    default:
      throw Error("no generator system");
  }

  std::vector<Nat> cols;
  for (Point p : a) {
    if (cols.empty() || cols.back() != p.col) cols.push_back(p.col);
  }

  auto evaluate = [&](const std::vector<std::size_t>& chosen) {
    std::set<Nat> lines;
    for (std::size_t i : chosen) lines.insert(cols[i]);
    std::vector<Point> rest;
    std::map<Nat, std::vector<Point>> line_parts;
    for (Point p : a) {
      if (lines.count(p.col)) {
        line_parts[p.col].push_back(p);
      } else {
        rest.push_back(p);
      }
    }
    CoverCertificate cert = remainder(PointSet(std::move(rest)));
    for (auto& [c, members] : line_parts) cert.parts.push_back({CoverKind::VerticalLine, PointSet(std::move(members))});
    sort_parts(cert);
    return cert;
  };

  CoverCertificate best = evaluate({});
  // Line sets by increasing size; a size reaching the current best cannot win.
  for (std::size_t k = 1; k <= cols.size() && k < best.cost(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      CoverCertificate cand = evaluate(idx);
      if (cand.cost() < best.cost()) best = std::move(cand);
      if (k >= best.cost()) break;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == cols.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return {best.cost(), std::move(best)};
}

std::optional<SparsityWitness> remark21_check(std::span<const Point> points) {
  if (points.empty()) return std::nullopt;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].col <= points[i - 1].col) return std::nullopt;
  }
  const Nat last = points.back().col;
  for (Point p : points) {
    if (sum(p) <= last) return std::nullopt;
  }
  return SparsityWitness{std::vector<Point>(points.begin(), points.end()), points.size() - 1};
}

}  // namespace wrideal
