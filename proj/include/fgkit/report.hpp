#ifndef FGKIT_REPORT_HPP
#define FGKIT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fgkit/surface_family.hpp"
#include "fgkit/word.hpp"

namespace fgkit {

inline constexpr const char* kReportSchema = "fgkit-report/1";
inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct CheckTiming {
  std::string check;
  double milliseconds = 0.0;
};

/// Outcome of every check for one (g, l). Mathematical failures are
/// recorded here, never thrown.
struct VerificationReport {
  FamilyParams params;
  bool injective = false;
  std::size_t image_rank = 0;
  bool closed_form_ok = false;
  bool identities_ok = false;
  bool block_letter_ok = false;
  std::optional<std::uint64_t> quotient_order;  // nullopt = infinite
  std::uint64_t stated_order = 0;               // 4l + 4
  bool stated_order_match = false;
  CyclicWord boundary_class{handlebody_alphabet()};  // canonical, unoriented
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  std::vector<CheckTiming> timings;

  /// All hard checks: injectivity, closed forms, identities, block letters, finiteness.
  bool passed() const noexcept {
    return injective && closed_form_ok && identities_ok && block_letter_ok && quotient_order.has_value();
  }
};

VerificationReport verify(const FamilyParams& p, std::uint64_t seed = kDefaultSeed);

struct DistinctnessRow {
  int g = 0;
  std::vector<int> l_values;
  bool unoriented_distinct = false;
  bool oriented_distinct = false;
  bool all_nontrivial = false;
  bool passed() const noexcept { return unoriented_distinct && all_nontrivial; }
};

DistinctnessRow check_distinctness(int g, const std::vector<int>& l_values);

struct SweepConfig {
  std::vector<int> g_values;
  std::vector<int> l_values;
  std::uint64_t seed = kDefaultSeed;
  unsigned parallelism = 1;

  /// Throws InvalidParams.
  void validate() const;
};

struct SweepResult {
  std::vector<VerificationReport> reports;  // ordered by (g, l)
  std::vector<DistinctnessRow> distinctness;  // ordered by g
  bool passed() const noexcept;
};

SweepResult run_sweep(const SweepConfig& config);

enum class ReportFormat { json, csv, table };

struct RenderOptions {
  ReportFormat format = ReportFormat::json;
  bool timings = true;
};

nlohmann::json to_json(const VerificationReport& r, bool timings);
nlohmann::json to_json(const DistinctnessRow& d);

std::string render(const VerificationReport& r, const RenderOptions& options);
std::string render(const SweepResult& s, const RenderOptions& options);

}  // namespace fgkit

#endif  // FGKIT_REPORT_HPP
