#include "fgkit/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "fgkit/abelianization.hpp"
#include "fgkit/stallings.hpp"

namespace fgkit {

namespace {

template <typename F>
auto timed(std::vector<CheckTiming>& timings, const char* name, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  timings.push_back({name, elapsed.count()});
  return result;
}

std::string order_text(const std::optional<std::uint64_t>& order) {
  return order ? std::to_string(*order) : std::string("INFINITE");
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double total_ms(const VerificationReport& r) {
  double total = 0.0;
  for (const auto& t : r.timings) total += t.milliseconds;
  return total;
}

}  // namespace

VerificationReport verify(const FamilyParams& p, std::uint64_t seed) {
  p.validate();
  VerificationReport r;
  r.params = p;

  const auto recursive = surface_images_recursive(p);
  r.closed_form_ok = timed(r.timings, "closed_form", [&] { return recursive == surface_images_closed(p); });
  if (!r.closed_form_ok) r.failures.push_back("closed-form images differ from the recursive construction");

  r.identities_ok = timed(r.timings, "identities", [&] {
    const auto failure = find_shuffle_failure(p.g, p.g, p.l);
    if (failure) {
      r.failures.push_back("shuffle identity " + to_string(failure->branch) + " fails at i=" +
                           std::to_string(failure->i) + " j=" + std::to_string(failure->j));
    }
    return !failure;
  });

  r.block_letter_ok = timed(r.timings, "block_letters", [&] {
    const BlockLetterCheck check = check_block_letters(p, seed);
    if (!check.ok) r.failures.push_back("block-letter property fails for " + render_word(*check.counterexample));
    return check.ok;
  });

  const Homomorphism phi(surface_alphabet(p.g), handlebody_alphabet(), recursive);
  const InjectivityCertificate cert = timed(r.timings, "injectivity", [&] { return is_injective(phi); });
  r.injective = cert.injective;
  r.image_rank = cert.image_rank;
  if (!r.injective) {
    r.failures.push_back("image rank " + std::to_string(cert.image_rank) + " < domain rank " +
                         std::to_string(cert.domain_rank));
  }

  r.quotient_order = timed(r.timings, "quotient_order", [&] { return quotient_order(image_matrix(phi), 3).order; });
  r.stated_order = 4 * static_cast<std::uint64_t>(p.l) + 4;
  r.stated_order_match = r.quotient_order == r.stated_order;
  if (!r.quotient_order) {
    r.failures.push_back("abelianized quotient is infinite");
  } else if (!r.stated_order_match) {
    r.warnings.push_back("quotient order " + std::to_string(*r.quotient_order) + " differs from 4l+4 = " +
                         std::to_string(r.stated_order));
  }

  r.boundary_class = timed(r.timings, "boundary_class", [&] {
    return canonical_class(apply(phi, boundary_word(p.g)), Orientation::unoriented);
  });
  if (r.boundary_class.empty()) r.failures.push_back("boundary image is trivial");
  return r;
}

DistinctnessRow check_distinctness(int g, const std::vector<int>& l_values) {
  DistinctnessRow row;
  row.g = g;
  row.l_values = l_values;
  const SlopeCheck unoriented = slope_distinctness(g, l_values, Orientation::unoriented);
  const SlopeCheck oriented = slope_distinctness(g, l_values, Orientation::oriented);
  row.unoriented_distinct = unoriented.pairwise_distinct;
  row.oriented_distinct = oriented.pairwise_distinct;
  row.all_nontrivial = unoriented.all_nontrivial;
  return row;
}

void SweepConfig::validate() const {
  if (g_values.empty()) throw InvalidParams("g list must not be empty");
  if (l_values.empty()) throw InvalidParams("l list must not be empty");
  if (parallelism == 0) throw InvalidParams("parallelism must be positive");
  for (int g : g_values) FamilyParams::make(g, 3);
  for (int l : l_values) FamilyParams::make(2, l);
}

bool SweepResult::passed() const noexcept {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); }) &&
         std::all_of(distinctness.begin(), distinctness.end(), [](const auto& d) { return d.passed(); });
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<int> gs = config.g_values;
  std::vector<int> ls = config.l_values;
  std::sort(gs.begin(), gs.end());
  gs.erase(std::unique(gs.begin(), gs.end()), gs.end());

  std::vector<FamilyParams> jobs;
  for (int g : gs) {
    for (int l : ls) jobs.push_back(FamilyParams::make(g, l));
  }
  std::sort(jobs.begin(), jobs.end());

  SweepResult result;
  result.reports.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        result.reports[k] = verify(jobs[k], config.seed);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<unsigned>(config.parallelism, static_cast<unsigned>(jobs.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);

  for (int g : gs) result.distinctness.push_back(check_distinctness(g, ls));
  return result;
}

nlohmann::json to_json(const VerificationReport& r, bool timings) {
  nlohmann::json j;
  j["params"] = {{"g", r.params.g}, {"l", r.params.l}};
  j["injective"] = r.injective;
  j["image_rank"] = r.image_rank;
  j["closed_form_ok"] = r.closed_form_ok;
  j["identities_36_37_ok"] = r.identities_ok;
  j["block_letter_ok"] = r.block_letter_ok;
  if (r.quotient_order) {
    j["quotient_order"] = *r.quotient_order;
  } else {
    j["quotient_order"] = "INFINITE";
  }
  j["reference_order"] = r.stated_order;
  j["paper_order_match"] = r.stated_order_match;
  j["boundary_class"] = render_letters(*r.boundary_class.alphabet(), r.boundary_class.letters());
  j["boundary_class_length"] = r.boundary_class.size();
  j["passed"] = r.passed();
  j["failures"] = r.failures;
  j["warnings"] = r.warnings;
  if (timings) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& entry : r.timings) t[entry.check + "_ms"] = entry.milliseconds;
    j["timings"] = t;
  }
  return j;
}

nlohmann::json to_json(const DistinctnessRow& d) {
  return {{"g", d.g},
          {"l_values", d.l_values},
          {"unoriented_distinct", d.unoriented_distinct},
          {"oriented_distinct", d.oriented_distinct},
          {"all_nontrivial", d.all_nontrivial},
          {"passed", d.passed()}};
}

namespace {

const char* kCsvHeader =
    "kind,g,l,injective,image_rank,closed_form_ok,identities_36_37_ok,block_letter_ok,quotient_order,"
    "reference_order,paper_order_match,boundary_class,unoriented_distinct,oriented_distinct,all_nontrivial,"
    "passed";

std::string csv_row(const VerificationReport& r, bool timings) {
  std::ostringstream out;
  out << "instance," << r.params.g << ',' << r.params.l << ',' << yes_no(r.injective) << ',' << r.image_rank << ','
      << yes_no(r.closed_form_ok) << ',' << yes_no(r.identities_ok) << ',' << yes_no(r.block_letter_ok) << ','
      << order_text(r.quotient_order) << ',' << r.stated_order << ',' << yes_no(r.stated_order_match) << ','
      << csv_field(render_letters(*r.boundary_class.alphabet(), r.boundary_class.letters())) << ",,,,"
      << yes_no(r.passed());
  if (timings) out << ',' << std::fixed << std::setprecision(3) << total_ms(r);
  return out.str();
}

std::string csv_row(const DistinctnessRow& d, bool timings) {
  std::ostringstream out;
  out << "distinctness," << d.g << ',' << join(d.l_values, ';') << ",,,,,,,,,," << yes_no(d.unoriented_distinct)
      << ',' << yes_no(d.oriented_distinct) << ',' << yes_no(d.all_nontrivial) << ',' << yes_no(d.passed());
  if (timings) out << ',';
  return out.str();
}

std::string table_header() {
  std::ostringstream out;
  out << std::left << std::setw(4) << "g" << std::setw(5) << "l" << std::setw(10) << "injective" << std::setw(6)
      << "rank" << std::setw(8) << "closed" << std::setw(11) << "identities" << std::setw(8) << "blocks"
      << std::setw(10) << "order" << std::setw(8) << "4l+4" << std::setw(8) << "class" << "status";
  return out.str();
}

std::string table_row(const VerificationReport& r, bool timings) {
  std::ostringstream out;
  out << std::left << std::setw(4) << r.params.g << std::setw(5) << r.params.l << std::setw(10)
      << yes_no(r.injective) << std::setw(6) << r.image_rank << std::setw(8) << yes_no(r.closed_form_ok)
      << std::setw(11) << yes_no(r.identities_ok) << std::setw(8) << yes_no(r.block_letter_ok) << std::setw(10)
      << order_text(r.quotient_order) << std::setw(8) << r.stated_order << std::setw(8) << r.boundary_class.size()
      << (r.passed() ? (r.warnings.empty() ? "PASS" : "PASS (warning)") : "FAIL");
  if (timings) out << "  " << std::fixed << std::setprecision(1) << total_ms(r) << " ms";
  return out.str();
}

std::string table_row(const DistinctnessRow& d) {
  std::ostringstream out;
  out << "distinct classes g=" << d.g << " l=" << join(d.l_values, ',') << ": unoriented "
      << yes_no(d.unoriented_distinct) << ", oriented " << yes_no(d.oriented_distinct) << ", nontrivial "
      << yes_no(d.all_nontrivial) << "  " << (d.passed() ? "PASS" : "FAIL");
  return out.str();
}

void append_warnings(std::ostringstream& out, const VerificationReport& r) {
  for (const auto& w : r.warnings) out << "WARNING g=" << r.params.g << " l=" << r.params.l << ": " << w << '\n';
  for (const auto& f : r.failures) out << "FAILURE g=" << r.params.g << " l=" << r.params.l << ": " << f << '\n';
}

}  // namespace

std::string render(const VerificationReport& r, const RenderOptions& options) {
  std::ostringstream out;
  switch (options.format) {
    case ReportFormat::json: {
      nlohmann::json j = to_json(r, options.timings);
      j["schema"] = kReportSchema;
      out << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::csv:
      out << kCsvHeader << (options.timings ? ",total_ms" : "") << '\n' << csv_row(r, options.timings) << '\n';
      break;
    case ReportFormat::table:
      out << table_header() << '\n' << table_row(r, options.timings) << '\n';
      append_warnings(out, r);
      break;
  }
  return out.str();
}

std::string render(const SweepResult& s, const RenderOptions& options) {
  std::ostringstream out;
  switch (options.format) {
    case ReportFormat::json: {
      nlohmann::json j;
      j["schema"] = kReportSchema;
      j["reports"] = nlohmann::json::array();
      for (const auto& r : s.reports) j["reports"].push_back(to_json(r, options.timings));
      j["distinctness"] = nlohmann::json::array();
      for (const auto& d : s.distinctness) j["distinctness"].push_back(to_json(d));
      j["passed"] = s.passed();
      out << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::csv:
      out << kCsvHeader << (options.timings ? ",total_ms" : "") << '\n';
      for (const auto& r : s.reports) out << csv_row(r, options.timings) << '\n';
      for (const auto& d : s.distinctness) out << csv_row(d, options.timings) << '\n';
      break;
    case ReportFormat::table:
      out << table_header() << '\n';
      for (const auto& r : s.reports) out << table_row(r, options.timings) << '\n';
      for (const auto& d : s.distinctness) out << table_row(d) << '\n';
      for (const auto& r : s.reports) append_warnings(out, r);
      break;
  }
  return out.str();
}

}  // namespace fgkit
