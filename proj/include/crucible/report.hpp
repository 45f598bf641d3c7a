#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "crucible/types.hpp"

namespace crucible {

inline constexpr const char* kReportSchemaVersion = "1";

struct ReportEntry {
  std::string id;
  std::string paper_anchor;
  std::variant<real, std::string> claimed;
  real computed = 0;
  real abs_error = 0;
  real tolerance = 0;
  bool passed = false;
  real runtime_ms = 0;
  std::optional<std::uint64_t> seed;
};

// Numeric claim: abs_error = |computed - claimed|, passed iff abs_error <= tolerance.
ReportEntry numeric_entry(std::string id, std::string anchor, real claimed, real computed,
                          real tolerance, std::optional<std::uint64_t> seed = {});

// Claim stated in words; the caller measures the violation as abs_error.
ReportEntry text_entry(std::string id, std::string anchor, std::string claimed, real computed,
                       real abs_error, real tolerance, std::optional<std::uint64_t> seed = {});

class VerificationReport {
 public:
  // Throws std::invalid_argument on a duplicate id.
  void add(ReportEntry entry);
  void append(const VerificationReport& other);

  const std::vector<ReportEntry>& entries() const { return entries_; }
  bool all_passed() const;
  std::size_t failures() const;

  nlohmann::ordered_json to_json(bool include_runtime = true) const;
  std::string to_csv() const;

 private:
  std::vector<ReportEntry> entries_;
};

}  // namespace crucible
