#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bondzeta/linalg.hpp"

namespace bondzeta {

/// One compared pair of values inside a verification.
struct CheckRecord {
  std::string name;
  cplx lhs;
  cplx rhs;
  double error = 0.0;  // relative unless the check says otherwise
  bool pass = false;
  std::string note;
};

/// Outcome of a verification routine. pass() holds iff every record passes;
/// warnings never affect it.
struct Report {
  Report() = default;
  Report(std::string report_name, double tol)
      : name(std::move(report_name)), tolerance(tol) {}

  std::string name;
  double tolerance = 0.0;
  std::vector<CheckRecord> records;
  std::vector<std::string> warnings;

  bool pass() const;
  double max_error() const;

  /// Appends a record, computing pass as error <= tolerance.
  void add(std::string check, cplx lhs, cplx rhs, double error, std::string note = {});
  /// Appends a record with relative_error(lhs, rhs).
  void add_relative(std::string check, cplx lhs, cplx rhs, std::string note = {});
  /// Folds another report's records and warnings into this one.
  void merge(const Report& other, const std::string& prefix = {});
};

}  // namespace bondzeta
