#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wrideal/grid.hpp"
#include "wrideal/presentations.hpp"

namespace wrideal {

enum class CoverKind { VerticalLine, SecondType, SecondTypePi, Graph, NondecreasingGraph };

std::string to_string(CoverKind k);
std::optional<CoverKind> cover_kind_from_string(const std::string& s);

struct CoverPart {
  CoverKind kind;
  PointSet members;

  friend bool operator==(const CoverPart&, const CoverPart&) = default;
};

struct CoverCertificate {
  std::vector<CoverPart> parts;

  Nat cost() const { return parts.size(); }
};

// Which generator traces a cover may use. SecondTypePi needs pi.
struct CoverUniverse {
  std::vector<CoverKind> kinds;
  std::function<Nat(Point)> pi;

  static CoverUniverse second_type() { return {{CoverKind::SecondType}, {}}; }
  static CoverUniverse wr() { return {{CoverKind::VerticalLine, CoverKind::SecondType}, {}}; }
  static CoverUniverse ed() { return {{CoverKind::VerticalLine, CoverKind::Graph}, {}}; }
  static CoverUniverse ed_up() { return {{CoverKind::VerticalLine, CoverKind::NondecreasingGraph}, {}}; }
  static CoverUniverse wr_pi(std::function<Nat(Point)> pi) {
    return {{CoverKind::VerticalLine, CoverKind::SecondTypePi}, std::move(pi)};
  }
};

// True iff two distinct points may lie in one generator of the given kind.
// Every kind is determined by its pairs.
bool compatible(CoverKind kind, Point a, Point b, const std::function<Nat(Point)>& pi = {});

// Checks that the certificate covers A exactly and that every part is a
// subset of a generator of its kind. Returns the problems found.
std::vector<std::string> check_certificate(const CoverCertificate& cert, const PointSet& a,
                                           const std::function<Nat(Point)>& pi = {});

inline constexpr std::size_t kOracleLimit = 12;

// Exhaustive minimum cover over all partitions of A into admissible parts.
// Throws "oracle scale exceeded" when |A| > limit.
CoverCertificate brute_force_cover(const PointSet& a, const CoverUniverse& universe,
                                   std::size_t limit = kOracleLimit);

// Minimum number of second-type generators covering A, by coloring the
// interval graph of [col, col + row].
CoverCertificate second_type_cover(const PointSet& a);
Nat second_type_cover_number(const PointSet& a);

// Minimum number of nondecreasing graphs covering A (minimum chain cover of
// "col strictly smaller and row <=", via bipartite matching).
CoverCertificate nondecreasing_cover(const PointSet& a);

// Minimum number of graphs covering A: the largest column multiplicity.
CoverCertificate graph_cover(const PointSet& a);

struct PhiResult {
  Nat value = 0;
  CoverCertificate certificate;
};

// Covering-number submeasure for WR, WRpi, ED and EDup. Among minimum covers
// the one with fewest vertical lines is returned.
PhiResult phi(const IdealPresentation& ideal, const PointSet& a);

struct SparsityWitness {
  std::vector<Point> points;
  Nat level = 0;
};

// Witness of level |points| - 1 iff the columns strictly increase and every
// point's sum exceeds the last column.
std::optional<SparsityWitness> remark21_check(std::span<const Point> points);

}  // namespace wrideal
