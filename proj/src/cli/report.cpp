#include "f4prolong/cli/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace f4prolong {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::paper_discrepancy:
      return "paper-discrepancy";
  }
  return "fail";
}

void Report::check(std::string id, std::string description, bool ok, std::string computed, std::string expected,
                   std::string paper_ref) {
  items.push_back({std::move(id), std::move(description), ok ? Status::pass : Status::fail, std::move(computed),
                   std::move(expected), std::move(paper_ref)});
}

void Report::discrepancy(std::string id, std::string description, std::string computed, std::string printed,
                         std::string paper_ref) {
  items.push_back({std::move(id), std::move(description), Status::paper_discrepancy, std::move(computed),
                   std::move(printed), std::move(paper_ref)});
}

void Report::append(const Report& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

bool Report::passed() const { return count(Status::fail) == 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [s](const CheckItem& c) { return c.status == s; }));
}

const CheckItem* Report::find(const std::string& id) const {
  for (const auto& c : items)
    if (c.id == id) return &c;
  return nullptr;
}

nlohmann::json report_to_json(const Report& r, bool include_timing) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& c : r.items) {
    items.push_back({{"id", c.id},
                     {"description", c.description},
                     {"status", to_string(c.status)},
                     {"computed", c.computed},
                     {"expected", c.expected},
                     {"paper_ref", c.paper_ref}});
  }
  nlohmann::json j{{"schema", kSchema},
                   {"suite", r.suite},
                   {"seed", r.seed},
                   {"summary",
                    {{"pass", r.count(Status::pass)},
                     {"fail", r.count(Status::fail)},
                     {"paper-discrepancy", r.count(Status::paper_discrepancy)}}},
                   {"items", std::move(items)}};
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

void print_report(std::ostream& os, const Report& r) {
  for (const auto& c : r.items) {
    const char* tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "NOTE";
    os << tag << "  " << c.id << "  " << c.description;
    if (c.status != Status::pass) os << "  [computed: " << c.computed << "; expected: " << c.expected << "]";
    os << "\n";
  }
  os << r.suite << ": " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
     << r.count(Status::paper_discrepancy) << " paper-discrepancy (" << std::fixed << std::setprecision(1)
     << r.elapsed_ms << " ms, seed " << r.seed << ")\n";
}

}  // namespace f4prolong
