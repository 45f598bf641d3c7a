#include "crucible/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace crucible {
namespace {

std::string format_number(real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

nlohmann::ordered_json number(real v) {
  if (!std::isfinite(v)) return nullptr;
  return static_cast<double>(v);
}

}  // namespace

ReportEntry numeric_entry(std::string id, std::string anchor, real claimed, real computed,
                          real tolerance, std::optional<std::uint64_t> seed) {
  ReportEntry e;
  e.id = std::move(id);
  e.paper_anchor = std::move(anchor);
  e.claimed = claimed;
  e.computed = computed;
  e.abs_error = std::fabs(computed - claimed);
  e.tolerance = tolerance;
  e.passed = e.abs_error <= tolerance;
  e.seed = seed;
  return e;
}

ReportEntry text_entry(std::string id, std::string anchor, std::string claimed, real computed,
                       real abs_error, real tolerance, std::optional<std::uint64_t> seed) {
  ReportEntry e;
  e.id = std::move(id);
  e.paper_anchor = std::move(anchor);
  e.claimed = std::move(claimed);
  e.computed = computed;
  e.abs_error = abs_error;
  e.tolerance = tolerance;
  e.passed = abs_error <= tolerance;
  e.seed = seed;
  return e;
}

void VerificationReport::add(ReportEntry entry) {
  const bool duplicate = std::any_of(entries_.begin(), entries_.end(),
                                     [&](const ReportEntry& e) { return e.id == entry.id; });
  if (duplicate) throw std::invalid_argument("duplicate report id: " + entry.id);
  entries_.push_back(std::move(entry));
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& e : other.entries_) add(e);
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const ReportEntry& e) { return !e.passed; }));
}

nlohmann::ordered_json VerificationReport::to_json(bool include_runtime) const {
  nlohmann::ordered_json out;
  out["schema_version"] = kReportSchemaVersion;
  out["all_passed"] = all_passed();
  out["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json j;
    j["id"] = e.id;
    j["paper_anchor"] = e.paper_anchor;
    if (const auto* v = std::get_if<real>(&e.claimed)) {
      j["claimed"] = number(*v);
    } else {
      j["claimed"] = std::get<std::string>(e.claimed);
    }
    j["computed"] = number(e.computed);
    j["abs_error"] = number(e.abs_error);
    j["tolerance"] = number(e.tolerance);
    j["passed"] = e.passed;
    j["seed"] = e.seed ? nlohmann::ordered_json(*e.seed) : nlohmann::ordered_json(nullptr);
    if (include_runtime) j["runtime_ms"] = static_cast<double>(e.runtime_ms);
    out["entries"].push_back(std::move(j));
  }
  return out;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "id,paper_anchor,claimed,computed,abs_error,tolerance,passed,seed\n";
  for (const auto& e : entries_) {
    const std::string claimed = std::holds_alternative<real>(e.claimed)
                                    ? format_number(std::get<real>(e.claimed))
                                    : std::get<std::string>(e.claimed);
    out << csv_field(e.id) << ',' << csv_field(e.paper_anchor) << ',' << csv_field(claimed) << ','
        << format_number(e.computed) << ',' << format_number(e.abs_error) << ','
        << format_number(e.tolerance) << ',' << (e.passed ? "true" : "false") << ','
        << (e.seed ? std::to_string(*e.seed) : std::string()) << '\n';
  }
  return out.str();
}

}  // namespace crucible
