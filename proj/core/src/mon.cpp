#include "wrideal/mon.hpp"

#include <algorithm>
#include <map>

namespace wrideal {

std::string to_string(ColumnMode m) {
  switch (m) {
    case ColumnMode::Nondecreasing: return "nondecreasing";
    case ColumnMode::Nonincreasing: return "nonincreasing";
    case ColumnMode::EventuallyConstant: return "eventually-constant";
  }
  return "unknown";
}

std::optional<ColumnMode> column_mode_from_string(const std::string& s) {
  for (ColumnMode m : {ColumnMode::Nondecreasing, ColumnMode::Nonincreasing, ColumnMode::EventuallyConstant}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::Increasing: return "increasing";
    case Direction::Constant: return "constant";
    case Direction::Decreasing: return "decreasing";
  }
  return "unknown";
}

std::optional<Direction> direction_from_string(const std::string& s) {
  for (Direction d : {Direction::Increasing, Direction::Constant, Direction::Decreasing}) {
    if (to_string(d) == s) return d;
  }
  return std::nullopt;
}

ColumnFamilyDescriptor::ColumnFamilyDescriptor(std::vector<ColumnSpec> columns) : columns_(std::move(columns)) {
  std::stable_sort(columns_.begin(), columns_.end(),
                   [](const ColumnSpec& a, const ColumnSpec& b) { return a.column < b.column; });
}

ColumnFamilyDescriptor ColumnFamilyDescriptor::tabulate(Nat count, Nat depth,
                                                        const std::function<Rational(Nat, Nat)>& term,
                                                        const std::function<ColumnMode(Nat)>& mode,
                                                        const std::function<ExtendedRational(Nat)>& limit,
                                                        const std::function<Nat(Nat)>& constant_from) {
  std::vector<ColumnSpec> cols;
  for (Nat i = 0; i < count; ++i) {
    ColumnSpec s;
    s.column = i;
    s.mode = mode(i);
    s.limit = limit(i);
    if (constant_from) s.constant_from = constant_from(i);
    for (Nat j = 0; j < depth; ++j) {
      s.rows.push_back(j);
      s.values.push_back(term(i, j));
    }
    cols.push_back(std::move(s));
  }
  return ColumnFamilyDescriptor(std::move(cols));
}

const ColumnSpec* ColumnFamilyDescriptor::find(Nat column) const {
  auto it = std::lower_bound(columns_.begin(), columns_.end(), column,
                             [](const ColumnSpec& s, Nat c) { return s.column < c; });
  if (it == columns_.end() || it->column != column) return nullptr;
  return &*it;
}

std::optional<Rational> ColumnFamilyDescriptor::value(Point a) const {
  const ColumnSpec* s = find(a.col);
  if (!s) return std::nullopt;
  auto it = std::lower_bound(s->rows.begin(), s->rows.end(), a.row);
  if (it == s->rows.end() || *it != a.row) return std::nullopt;
  return s->values[static_cast<std::size_t>(it - s->rows.begin())];
}

std::vector<std::string> ColumnFamilyDescriptor::issues() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    const ColumnSpec& s = columns_[i];
    const std::string where = "column " + std::to_string(s.column) + ": ";
    if (i > 0 && columns_[i - 1].column == s.column) out.push_back(where + "listed twice");
    if (s.rows.size() != s.values.size()) {
      out.push_back(where + "rows and values differ in length");
      continue;
    }
    if (s.rows.empty()) {
      out.push_back(where + "no terms");
      continue;
    }
    for (std::size_t k = 1; k < s.rows.size(); ++k) {
      if (s.rows[k] <= s.rows[k - 1]) out.push_back(where + "rows not strictly increasing");
    }
    bool nondec = true;
    bool noninc = true;
    for (std::size_t k = 1; k < s.values.size(); ++k) {
      if (s.values[k] < s.values[k - 1]) nondec = false;
      if (s.values[k] > s.values[k - 1]) noninc = false;
    }
    switch (s.mode) {
      case ColumnMode::Nondecreasing:
        if (!nondec) out.push_back(where + "values not nondecreasing");
        for (const Rational& v : s.values) {
          if (!(v < s.limit)) {
            out.push_back(where + "value " + to_string(v) + " not below the limit " + to_string(s.limit));
            break;
          }
        }
        break;
      case ColumnMode::Nonincreasing:
        if (!noninc) out.push_back(where + "values not nonincreasing");
        for (const Rational& v : s.values) {
          if (!(s.limit < v)) {
            out.push_back(where + "value " + to_string(v) + " not above the limit " + to_string(s.limit));
            break;
          }
        }
        break;
      case ColumnMode::EventuallyConstant:
        if (!nondec && !noninc) out.push_back(where + "values not monotone");
        if (!s.limit.is_finite()) {
          out.push_back(where + "eventually-constant column with infinite limit");
          break;
        }
        if (s.constant_from >= s.values.size()) {
          out.push_back(where + "constant part starts past the verification depth");
          break;
        }
        for (std::size_t k = s.constant_from; k < s.values.size(); ++k) {
          if (s.values[k] != s.limit.value) {
            out.push_back(where + "value at position " + std::to_string(k) + " differs from the limit");
            break;
          }
        }
        break;
    }
  }
  return out;
}

ColumnFamilyDescriptor ColumnFamilyDescriptor::negated() const {
  std::vector<ColumnSpec> cols = columns_;
  for (auto& s : cols) {
    for (auto& v : s.values) v = -v;
    s.limit = s.limit.negated();
    if (s.mode == ColumnMode::Nondecreasing) {
      s.mode = ColumnMode::Nonincreasing;
    } else if (s.mode == ColumnMode::Nonincreasing) {
      s.mode = ColumnMode::Nondecreasing;
    }
  }
  return ColumnFamilyDescriptor(std::move(cols));
}

Nat witness_offset(Nat level) { return level <= 2 ? level : level * (level - 1) / 2; }

namespace {

// Longest subsequence strictly ordered by `before`, as positions.
template <class Before>
std::vector<std::size_t> longest_chain(const std::vector<ExtendedRational>& v, Before before) {
  std::vector<std::size_t> tails;
  std::vector<std::ptrdiff_t> prev(v.size(), -1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), i,
                               [&](std::size_t t, std::size_t x) { return before(v[t], v[x]); });
    if (it != tails.begin()) prev[i] = static_cast<std::ptrdiff_t>(*(it - 1));
    if (it == tails.end()) {
      tails.push_back(i);
    } else {
      *it = i;
    }
  }
  std::vector<std::size_t> out;
  for (std::ptrdiff_t i = tails.empty() ? -1 : static_cast<std::ptrdiff_t>(tails.back()); i >= 0;
       i = prev[static_cast<std::size_t>(i)]) {
    out.push_back(static_cast<std::size_t>(i));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

struct Plan {
  MonCase mon_case;
  std::vector<const ColumnSpec*> columns;
};

Plan choose_plan(const std::vector<const ColumnSpec*>& t) {
  std::vector<ExtendedRational> limits;
  for (const ColumnSpec* s : t) limits.push_back(s->limit);

  auto pick = [&](const std::vector<std::size_t>& pos) {
    std::vector<const ColumnSpec*> out;
    for (std::size_t p : pos) out.push_back(t[p]);
    return out;
  };
  const auto inc = longest_chain(limits, [](const auto& a, const auto& b) { return a < b; });
  const auto dec = longest_chain(limits, [](const auto& a, const auto& b) { return b < a; });

  // Constant limit groups, split by eventually-constant versus strictly below.
  std::map<ExtendedRational, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> groups;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto& g = groups[limits[i]];
    (t[i]->mode == ColumnMode::EventuallyConstant ? g.first : g.second).push_back(i);
  }
  Plan constant{MonCase::ConstantEventually, {}};
  for (const auto& [limit, g] : groups) {
    const bool eventually = g.first.size() >= g.second.size();
    const auto& chosen = eventually ? g.first : g.second;
    if (chosen.size() > constant.columns.size()) {
      constant = {eventually ? MonCase::ConstantEventually : MonCase::ConstantIncreasing, pick(chosen)};
    }
  }

  Plan best{MonCase::LimitsIncreasing, pick(inc)};
  if (constant.columns.size() > best.columns.size()) best = constant;
  if (dec.size() > best.columns.size()) best = {MonCase::LimitsDecreasing, pick(dec)};
  return best;
}

}  // namespace

MonCertificate extract_mon(const MapSpec& pi, const ColumnFamilyDescriptor& d, Nat target_len, Nat target_level) {
  if (pi.kind() != MapKind::IndexToPoint) throw Error("extraction needs an index-to-point map");
  if (auto issues = d.issues(); !issues.empty()) throw Error("descriptor invalid: " + issues.front());
  for (Nat level = 1; level <= target_level; ++level) {
    if (witness_offset(level) + level >= target_len) {
      throw Error("target_level " + std::to_string(target_level) + " needs more than " + std::to_string(target_len) +
                  " points");
    }
  }

  std::size_t up = 0;
  std::size_t down = 0;
  for (const auto& s : d.columns()) {
    if (s.mode != ColumnMode::Nonincreasing) ++up;
    if (s.mode != ColumnMode::Nondecreasing) ++down;
  }
  MonCertificate cert;
  cert.dual = down > up;
  const ColumnFamilyDescriptor work = cert.dual ? d.negated() : d;

  std::vector<const ColumnSpec*> t;
  for (const auto& s : work.columns()) {
    if (s.mode != ColumnMode::Nonincreasing) t.push_back(&s);
  }
  const Plan plan = choose_plan(t);
  cert.mon_case = plan.mon_case;
  switch (plan.mon_case) {
    case MonCase::LimitsIncreasing:
    case MonCase::ConstantIncreasing: cert.direction = cert.dual ? Direction::Decreasing : Direction::Increasing; break;
    case MonCase::ConstantEventually: cert.direction = Direction::Constant; break;
    case MonCase::LimitsDecreasing: cert.direction = cert.dual ? Direction::Increasing : Direction::Decreasing; break;
  }
  for (const ColumnSpec* s : plan.columns) cert.columns.push_back(s->column);

  const auto& cols = plan.columns;
  std::optional<Nat> prev_index;
  std::optional<Rational> prev_value;
  for (Nat i = 0; i < target_len; ++i) {
    const bool need_next = plan.mon_case == MonCase::LimitsDecreasing;
    if (2 * i >= cols.size() || (need_next && i + 1 >= cols.size())) {
      throw MonPartialError("ran out of columns after " + std::to_string(i) + " points", cert);
    }
    const ColumnSpec& s = *cols[i];
    const Nat growth = cols[2 * i]->column;
    std::optional<std::size_t> found;
    Nat found_index = 0;
    for (std::size_t k = 0; k < s.rows.size() && !found; ++k) {
      const Point a{s.column, s.rows[k]};
      const Rational& y = s.values[k];
      if (sum(a) <= growth) continue;
      const auto idx = pi.index_of(a);
      if (!idx || (prev_index && *idx <= *prev_index)) continue;
      bool value_ok = true;
      switch (plan.mon_case) {
        case MonCase::LimitsIncreasing:
        case MonCase::ConstantIncreasing: value_ok = !prev_value || y > *prev_value; break;
        case MonCase::ConstantEventually: value_ok = s.limit.is_finite() && y == s.limit.value; break;
        case MonCase::LimitsDecreasing: value_ok = cols[i + 1]->limit < y; break;
      }
      if (!value_ok) continue;
      found = k;
      found_index = *idx;
    }
    if (!found) {
      throw MonPartialError("column " + std::to_string(s.column) + " has no admissible row within its " +
                                std::to_string(s.rows.size()) + " terms (point " + std::to_string(i) + ")",
                            cert);
    }
    const Point a{s.column, s.rows[*found]};
    const Rational y = s.values[*found];
    cert.indices.push_back(found_index);
    cert.points.push_back(a);
    cert.values.push_back(cert.dual ? -y : y);
    prev_index = found_index;
    prev_value = y;
  }

  for (Nat level = 1; level <= target_level; ++level) {
    const Nat p = witness_offset(level);
    std::vector<Point> pts(cert.points.begin() + static_cast<std::ptrdiff_t>(p),
                           cert.points.begin() + static_cast<std::ptrdiff_t>(p + level + 1));
    auto w = remark21_check(pts);
    if (!w) throw Error("witness of level " + std::to_string(level) + " failed its own check");
    cert.witnesses.push_back(std::move(*w));
  }
  return cert;
}

CertificateCheck verify_certificate(const MonCertificate& c, const MapSpec& pi, const ColumnFamilyDescriptor& d) {
  CertificateCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.reasons.push_back(std::move(msg));
  };
  const std::size_t n = c.points.size();
  if (c.indices.size() != n || c.values.size() != n) {
    fail("indices, points and values differ in length");
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && c.indices[i] <= c.indices[i - 1]) fail("indices not strictly increasing at " + std::to_string(i));
    Point expect;
    try {
      expect = pi.at(c.indices[i]);
    } catch (const Error& e) {
      fail(e.what());
      continue;
    }
    if (expect != c.points[i]) {
      fail("index " + std::to_string(c.indices[i]) + " maps to " + to_string(expect) + ", not " +
           to_string(c.points[i]));
    }
    const auto y = d.value(c.points[i]);
    if (!y) {
      fail(to_string(c.points[i]) + " is not a term of the descriptor");
    } else if (*y != c.values[i]) {
      fail("value at " + to_string(c.points[i]) + " is " + to_string(*y) + ", certificate says " +
           to_string(c.values[i]));
    }
    if (i == 0) continue;
    const Rational& a = c.values[i - 1];
    const Rational& b = c.values[i];
    const bool ok = c.direction == Direction::Increasing ? a < b
                    : c.direction == Direction::Constant ? a == b
                                                         : a > b;
    if (!ok) fail("values not " + to_string(c.direction) + " at position " + std::to_string(i));
  }
  for (const auto& w : c.witnesses) {
    const std::string tag = "witness of level " + std::to_string(w.level) + ": ";
    auto it = std::search(c.points.begin(), c.points.end(), w.points.begin(), w.points.end());
    if (w.points.empty() || it == c.points.end()) fail(tag + "points are not a run of the certificate");
    const auto check = remark21_check(w.points);
    if (!check) {
      fail(tag + "sparsity hypothesis fails");
    } else if (check->level != w.level) {
      fail(tag + "declared level does not match its size");
    }
  }
  return out;
}

}  // namespace wrideal
