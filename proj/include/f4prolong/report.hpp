#ifndef F4PROLONG_REPORT_HPP
#define F4PROLONG_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace f4prolong {

/// paper_discrepancy marks a confirmed misprint in the published statement;
/// it never fails a run.
enum class Status { pass, fail, paper_discrepancy };

const char* to_string(Status s);

struct CheckItem {
  std::string id;
  std::string description;
  Status status = Status::pass;
  std::string computed;
  std::string expected;
  std::string paper_ref;
};

struct Report {
  std::string suite;
  std::vector<CheckItem> items;
  std::uint64_t seed = 0;
  double elapsed_ms = 0;

  void add(CheckItem item) { items.push_back(std::move(item)); }
  void check(std::string id, std::string description, bool ok, std::string computed, std::string expected,
             std::string paper_ref = {});
  void discrepancy(std::string id, std::string description, std::string computed, std::string printed,
                   std::string paper_ref = {});
  void append(const Report& other);

  bool passed() const;
  std::size_t count(Status s) const;
  const CheckItem* find(const std::string& id) const;
};

}  // namespace f4prolong

#endif  // F4PROLONG_REPORT_HPP
