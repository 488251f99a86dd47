#include "bondzeta/report.hpp"

#include <algorithm>

namespace bondzeta {

bool Report::pass() const {
  return !records.empty() &&
         std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
}

double Report::max_error() const {
  double worst = 0.0;
  for (const auto& r : records) worst = std::max(worst, r.error);
  return worst;
}

void Report::add(std::string check, cplx lhs, cplx rhs, double error, std::string note) {
  records.push_back(
      CheckRecord{std::move(check), lhs, rhs, error, error <= tolerance, std::move(note)});
}

void Report::add_relative(std::string check, cplx lhs, cplx rhs, std::string note) {
  add(std::move(check), lhs, rhs, relative_error(lhs, rhs), std::move(note));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto r : other.records) {
    r.name = prefix + r.name;
    records.push_back(std::move(r));
  }
  for (const auto& w : other.warnings) warnings.push_back(prefix + w);
}

}  // namespace bondzeta
