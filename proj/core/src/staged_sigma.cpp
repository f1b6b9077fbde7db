#include "wrideal/staged_sigma.hpp"

#include <algorithm>

#include "wrideal/presentations.hpp"
#include "wrideal/reductions.hpp"

namespace wrideal {

namespace {

constexpr Nat kStageCap = 1 << 16;

void require_valid(const MapSpec& m) {
  if (m.kind() != MapKind::PointToIndex || !m.has_level_bound()) throw Error("invalid π");
  if (!validate_onto_finite_to_one(m).ok) throw Error("invalid π");
}

}  // namespace

StagedSigma::StagedSigma(const MapSpec& pi, const MapSpec& pi0, Nat window) : pi_(pi), pi0_(pi0), window_(window) {
  require_valid(pi);
  require_valid(pi0);
  if (!hits_zero_in_column_zero(pi_)) {
    pi_ = adjust_for_column_zero(pi);
    adjusted_ = true;
  }
  Stage first;
  first.m = 1;
  first.lo = 0;
  stages_.push_back(first);
  build_b();
}

Nat StagedSigma::bound_pi(Nat v) const { return *pi_.level_bound(v); }
Nat StagedSigma::bound_pi0(Nat v) const { return *pi0_.level_bound(v); }

void StagedSigma::add_stage() {
  const Nat n = stages_.size();
  if (n >= kStageCap) throw Error("sigma construction did not reach the window");
  const Stage& prev = stages_.back();

  Stage s;
  s.lo = prev.m;
  std::vector<Point> a;
  const Nat bound = bound_pi(2 * n);
  for (Nat c = 0; c < std::min(2 * n + 1, bound); ++c) {
    for (Nat r = 0; r < bound; ++r) {
      if (pi_.value({c, r}) <= 2 * n) a.push_back({c, r});
    }
  }
  s.a = PointSet(std::move(a));

  std::optional<Nat> best;
  for (Point q : s.a) {
    if (q.col % 2 != 0) continue;
    const Nat j = q.col / 2;
    if (j >= n || stages_[j].a.contains(q)) continue;
    const auto pre = stage_preimage(j, q);
    if (!pre) continue;
    const Nat v = pi0_.value(*pre);
    if (!best || v > *best) best = v;
  }
  if (!best) {
    flagged_.push_back(n);
    s.m = prev.m;
  } else {
    s.m = std::max(prev.m, *best);
  }
  for (Point q : s.a) {
    if (q.col == 2 * n) s.excluded_rows.push_back(q.row);
  }
  s.dense_from = bound_pi0(s.m);

  for (Nat c = s.lo; c < s.m; ++c) {
    for (Nat r = 0; r < s.dense_from; ++r) {
      if (pi0_.value({c, r}) <= s.m) b_lex_.push_back({c, r});
    }
  }
  stages_.push_back(std::move(s));
}

void StagedSigma::ensure_columns(Nat col) {
  while (stages_.back().m <= col) add_stage();
}

Nat StagedSigma::stage_of_column(Nat col) const {
  auto it = std::upper_bound(stages_.begin(), stages_.end(), col, [](Nat c, const Stage& s) { return c < s.m; });
  if (it == stages_.end()) throw Error("column " + std::to_string(col) + " beyond the built stages");
  return static_cast<Nat>(it - stages_.begin());
}

bool StagedSigma::in_b(Point a) const {
  const Nat n = stage_of_column(a.col);
  return n > 0 && pi0_.value(a) <= stages_[n].m;
}

Nat StagedSigma::domain_rank(const Stage& s, Point a) const {
  const Nat width = s.m - s.lo;
  auto qualifying = [&](Nat r, Nat upto) {
    Nat k = 0;
    for (Nat c = s.lo; c < upto; ++c) {
      if (pi0_.value({c, r}) > s.m) ++k;
    }
    return k;
  };
  Nat rank = 0;
  for (Nat r = 0; r < std::min(a.row, s.dense_from); ++r) rank += qualifying(r, s.m);
  if (a.row > s.dense_from) rank += (a.row - s.dense_from) * width;
  rank += a.row >= s.dense_from ? a.col - s.lo : qualifying(a.row, a.col);
  return rank;
}

Point StagedSigma::domain_point(const Stage& s, Nat rank) const {
  const Nat width = s.m - s.lo;
  for (Nat r = 0; r < s.dense_from; ++r) {
    for (Nat c = s.lo; c < s.m; ++c) {
      if (pi0_.value({c, r}) > s.m) {
        if (rank == 0) return {c, r};
        --rank;
      }
    }
  }
  return {s.lo + rank % width, s.dense_from + rank / width};
}

Nat StagedSigma::range_row(const Stage& s, Nat rank) const {
  Nat r = rank;
  for (Nat e : s.excluded_rows) {
    if (e <= r) ++r;
  }
  return r;
}

std::optional<Nat> StagedSigma::range_rank(const Stage& s, Nat row) const {
  if (std::binary_search(s.excluded_rows.begin(), s.excluded_rows.end(), row)) return std::nullopt;
  const auto below = std::lower_bound(s.excluded_rows.begin(), s.excluded_rows.end(), row) - s.excluded_rows.begin();
  return row - static_cast<Nat>(below);
}

Point StagedSigma::stage_image(Nat n, Point a) const {
  if (n == 0) return a;
  const Stage& s = stages_[n];
  return {2 * n, range_row(s, domain_rank(s, a))};
}

std::optional<Point> StagedSigma::stage_preimage(Nat n, Point q) const {
  if (q.col != 2 * n) return std::nullopt;
  if (n == 0) return q;
  const Stage& s = stages_[n];
  if (s.m == s.lo) return std::nullopt;
  const auto rank = range_rank(s, q.row);
  if (!rank) return std::nullopt;
  return domain_point(s, *rank);
}

void StagedSigma::build_b() {
  ensure_columns(window_ == 0 ? 0 : window_ - 1);
  std::optional<Nat> vmax;
  for (Point b : b_lex_) {
    if (b.col >= window_) break;
    const Nat v = pi0_.value(b);
    if (!vmax || v > *vmax) vmax = v;
  }
  if (!vmax) return;
  Nat need = 0;
  for (Nat v = 0; v <= *vmax; ++v) need = std::max({need, bound_pi0(v), v + 1});
  ensure_columns(need - 1);

  std::vector<std::pair<Nat, Point>> order;
  for (Point b : b_lex_) {
    const Nat v = pi0_.value(b);
    if (v <= *vmax) order.emplace_back(v, b);
  }
  // pi0 nondecreasing; among equal values the lexicographically larger first.
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : y.second < x.second;
  });

  std::optional<Nat> prev;
  for (const auto& [v, b] : order) {
    const Nat f = static_cast<Nat>(std::lower_bound(b_lex_.begin(), b_lex_.end(), Point{v, 0}) - b_lex_.begin());
    const Nat h = static_cast<Nat>(std::lower_bound(b_lex_.begin(), b_lex_.end(), b) - b_lex_.begin());
    const Nat threshold = std::max(2 * f + 1, prev.value_or(0));
    const Nat col = 2 * h + 1;
    std::optional<Point> image;
    for (Nat r = 0; r <= bound_pi(threshold); ++r) {
      const Nat w = pi_.value({col, r});
      if (w > 2 * f + 1 && (!prev || w > *prev)) {
        image = Point{col, r};
        break;
      }
    }
    if (!image) throw Error("invalid π");
    prev = pi_.value(*image);
    b_seq_.emplace_back(b, *image);
    b_forward_.emplace(b, *image);
    b_backward_.emplace(*image, b);
  }
}

Point StagedSigma::apply(Point a) const {
  const Nat n = stage_of_column(a.col);
  if (n == 0) return a;
  if (pi0_.value(a) > stages_[n].m) return stage_image(n, a);
  auto it = b_forward_.find(a);
  if (it == b_forward_.end()) throw Error("point " + to_string(a) + " outside the sigma window");
  return it->second;
}

std::optional<Point> StagedSigma::preimage(Point q) const {
  if (q.col % 2 == 1) {
    auto it = b_backward_.find(q);
    if (it == b_backward_.end()) return std::nullopt;
    return it->second;
  }
  const Nat n = q.col / 2;
  if (n >= stages_.size()) return std::nullopt;
  return stage_preimage(n, q);
}

SigmaBuild build_sigma_lemma54(const MapSpec& pi, const MapSpec& pi0, Nat window) {
  auto sigma = std::make_shared<const StagedSigma>(pi, pi0, window);
  MapSpec map = MapSpec::point_map(
      "lemma54-sigma",
      [sigma](Point a) {
        if (a.col >= sigma->window()) throw Error("point " + to_string(a) + " outside the sigma window");
        return sigma->apply(a);
      },
      [sigma](Point q) { return sigma->preimage(q); });
  map.with_params({{"pi", pi.name()}, {"pi0", pi0.name()}, {"window", window}}).with_window(window);
  return {sigma, map};
}

DecompositionReport verify_preimage_decomposition(const StagedSigma& sigma, const PointSet& g) {
  if (!is_second_type_wrpi(g.points(), sigma.pi())) throw Error("sample is not a second-type set for pi");
  DecompositionReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.issues.push_back(std::move(msg));
  };
  std::vector<Point> pre;
  std::vector<Point> b_part;
  for (Point q : g) {
    const auto a = sigma.preimage(q);
    if (!a) continue;
    if (sigma.apply(*a) != q) fail("sigma does not send " + to_string(*a) + " to " + to_string(q));
    pre.push_back(*a);
    if (sigma.in_b(*a)) {
      b_part.push_back(*a);
    } else {
      rep.rest.push_back(*a);
    }
  }
  std::sort(rep.rest.begin(), rep.rest.end());
  std::vector<Point> even;
  std::vector<Point> odd;
  for (std::size_t i = 0; i < rep.rest.size(); ++i) (i % 2 == 0 ? even : odd).push_back(rep.rest[i]);
  rep.preimage = PointSet(std::move(pre));
  rep.b_part = PointSet(std::move(b_part));
  rep.rest_even = PointSet(std::move(even));
  rep.rest_odd = PointSet(std::move(odd));
  if (!is_second_type_wrpi(rep.b_part.points(), sigma.pi0())) fail("B part is not one second-type set for pi0");
  if (!is_second_type_wrpi(rep.rest_even.points(), sigma.pi0())) fail("even-indexed rest is not second-type for pi0");
  if (!is_second_type_wrpi(rep.rest_odd.points(), sigma.pi0())) fail("odd-indexed rest is not second-type for pi0");
  return rep;
}

}  // namespace wrideal
