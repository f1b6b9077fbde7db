#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wrideal/grid.hpp"
#include "wrideal/map_spec.hpp"

namespace wrideal {

// Injective sigma on the grid with sigma^{-1}[A] in WR^{pi0} for every A in
// WR^{pi}, built stage by stage:
//   stage 0 is the identity on column 0 (m_0 = 1);
//   stage n >= 1 maps the points of columns [m_{n-1}, m_n) with pi0 > m_n
//   onto column 2n minus A_n, A_n = {a : col(a) <= 2n, pi(a) <= 2n};
//   the remaining points B (pi0 <= m_n on those columns) go to odd columns.
// Construction is lazy in the number of stages; build() runs enough stages to
// make sigma total on every column below the window.
class StagedSigma {
 public:
  // Throws "invalid π" unless both maps are point-to-index maps with level
  // bounds passing the bounded onto/finite-to-one check. When no point of
  // column 0 takes pi-value 0, pi is replaced by its column-zero adjustment.
  StagedSigma(const MapSpec& pi, const MapSpec& pi0, Nat window);

  const MapSpec& pi() const { return pi_; }  // after adjustment
  const MapSpec& pi0() const { return pi0_; }
  bool adjusted() const { return adjusted_; }
  Nat window() const { return window_; }

  Nat stage_count() const { return stages_.size(); }
  Nat m(Nat n) const { return stages_.at(n).m; }
  const PointSet& a_set(Nat n) const { return stages_.at(n).a; }
  // Stages where the defining set of m_n was empty; m_n = m_{n-1} there.
  const std::vector<Nat>& flagged_stages() const { return flagged_; }

  // Stage whose column range holds col; 0 for column 0.
  Nat stage_of_column(Nat col) const;
  bool in_b(Point a) const;

  // Defined for every point with col < window.
  Point apply(Point a) const;
  // Preimage of q when q lies in the image of a point below the window.
  std::optional<Point> preimage(Point q) const;

  // All B points below the window in enumeration order, with their images.
  const std::vector<std::pair<Point, Point>>& b_images() const { return b_seq_; }

 private:
  struct Stage {
    Nat m = 0;
    Nat lo = 0;  // columns [lo, m) belong to the stage
    PointSet a;
    std::vector<Nat> excluded_rows;  // rows of column 2n lying in A_n, sorted
    Nat dense_from = 0;              // rows >= dense_from have pi0 > m on every column
  };

  void add_stage();
  void ensure_columns(Nat col);
  Nat domain_rank(const Stage& s, Point a) const;
  Point domain_point(const Stage& s, Nat rank) const;
  Nat range_row(const Stage& s, Nat rank) const;
  std::optional<Nat> range_rank(const Stage& s, Nat row) const;
  Point stage_image(Nat n, Point a) const;
  std::optional<Point> stage_preimage(Nat n, Point q) const;
  Nat bound_pi(Nat v) const;
  Nat bound_pi0(Nat v) const;
  void build_b();

  MapSpec pi_;
  MapSpec pi0_;
  bool adjusted_ = false;
  Nat window_;
  std::vector<Stage> stages_;
  std::vector<Nat> flagged_;
  std::vector<Point> b_lex_;  // B points of built stages, lexicographic
  std::vector<std::pair<Point, Point>> b_seq_;
  std::map<Point, Point> b_forward_;
  std::map<Point, Point> b_backward_;
};

// Point map wrapping a built sigma; evaluation outside the window is an error.
struct SigmaBuild {
  std::shared_ptr<const StagedSigma> sigma;
  MapSpec map;
};

SigmaBuild build_sigma_lemma54(const MapSpec& pi, const MapSpec& pi0, Nat window);

struct DecompositionReport {
  bool ok = true;
  PointSet preimage;
  PointSet b_part;
  std::vector<Point> rest;  // lexicographic
  PointSet rest_even;
  PointSet rest_odd;
  std::vector<std::string> issues;
};

// Splits sigma^{-1}[G] into its B part and the rest and checks that the B
// part, the even-indexed rest and the odd-indexed rest are each WR^{pi0}
// second-type sets. Throws unless G is second-type for sigma's pi.
DecompositionReport verify_preimage_decomposition(const StagedSigma& sigma, const PointSet& g);

}  // namespace wrideal
