#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wrideal/covernum.hpp"
#include "wrideal/grid.hpp"
#include "wrideal/map_spec.hpp"
#include "wrideal/rational.hpp"

namespace wrideal {

enum class ColumnMode { Nondecreasing, Nonincreasing, EventuallyConstant };

std::string to_string(ColumnMode m);
std::optional<ColumnMode> column_mode_from_string(const std::string& s);

// One column i of the grid, seen through a monotone subsequence of rows.
// Nondecreasing columns stay strictly below their limit, nonincreasing ones
// strictly above; eventually-constant columns are monotone and equal their
// (finite) limit from position constant_from on.
struct ColumnSpec {
  Nat column = 0;
  ColumnMode mode = ColumnMode::Nondecreasing;
  std::vector<Nat> rows;         // j_0 < j_1 < ...
  std::vector<Rational> values;  // y(column, j_k)
  ExtendedRational limit;
  Nat constant_from = 0;
};

class ColumnFamilyDescriptor {
 public:
  ColumnFamilyDescriptor() = default;
  explicit ColumnFamilyDescriptor(std::vector<ColumnSpec> columns);

  // Columns 0..count-1 with rows 0..depth-1 (or the given row selector) and
  // values from term(i, j).
  static ColumnFamilyDescriptor tabulate(Nat count, Nat depth, const std::function<Rational(Nat, Nat)>& term,
                                         const std::function<ColumnMode(Nat)>& mode,
                                         const std::function<ExtendedRational(Nat)>& limit,
                                         const std::function<Nat(Nat)>& constant_from = {});

  const std::vector<ColumnSpec>& columns() const { return columns_; }
  const ColumnSpec* find(Nat column) const;
  std::optional<Rational> value(Point a) const;

  // Empty when the data agree with the declared modes and limits.
  std::vector<std::string> issues() const;

  // Every value and limit negated, nondecreasing and nonincreasing swapped.
  ColumnFamilyDescriptor negated() const;

 private:
  std::vector<ColumnSpec> columns_;  // sorted by column
};

enum class MonCase { LimitsIncreasing = 1, ConstantEventually = 2, ConstantIncreasing = 3, LimitsDecreasing = 4 };
enum class Direction { Increasing, Constant, Decreasing };

std::string to_string(Direction d);
std::optional<Direction> direction_from_string(const std::string& s);

struct MonCertificate {
  std::vector<Nat> indices;        // pi-preimages, strictly increasing
  std::vector<Point> points;       // a_0, a_1, ...
  std::vector<Rational> values;    // y at each point
  Direction direction = Direction::Increasing;
  MonCase mon_case = MonCase::LimitsIncreasing;
  bool dual = false;               // the nonincreasing-column branch
  std::vector<Nat> columns;        // the chosen column sequence C_0, C_1, ...
  std::vector<SparsityWitness> witnesses;
};

// Raised when the descriptor runs out of columns or rows before target_len
// points are found; carries the certificate built so far.
class MonPartialError : public Error {
 public:
  MonPartialError(const std::string& what, MonCertificate prefix) : Error(what), prefix_(std::move(prefix)) {}
  const MonCertificate& prefix() const { return prefix_; }

 private:
  MonCertificate prefix_;
};

// Monotone subsequence extraction along a pi-enumeration of the grid. Picks
// a column sequence by the monotone pattern of the column limits, then points
// a_i in column C_i with increasing pi-index, the case's value condition and
// sum(a_i) > C_{2i}, each time the least admissible row. Throws
// "descriptor invalid" on inconsistent data.
MonCertificate extract_mon(const MapSpec& pi, const ColumnFamilyDescriptor& d, Nat target_len, Nat target_level);

// Start of the level-L witness window a_p, ..., a_{p+L}.
Nat witness_offset(Nat level);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> reasons;
};

CertificateCheck verify_certificate(const MonCertificate& c, const MapSpec& pi, const ColumnFamilyDescriptor& d);

}  // namespace wrideal
