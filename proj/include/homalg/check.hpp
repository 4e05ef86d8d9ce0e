#pragma once

#include <string>
#include <vector>

namespace homalg {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

/// One named verdict inside a report.
struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

class CheckList {
 public:
  void pass(std::string name, std::string detail = {});
  void fail(std::string name, std::string detail = {});
  void skip(std::string name, std::string detail = {});
  /// Records pass or fail depending on `ok`.
  void expect(bool ok, std::string name, std::string detail = {});
  void append(const CheckList& other, const std::string& prefix = {});

  const std::vector<CheckResult>& items() const { return items_; }
  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }

 private:
  std::vector<CheckResult> items_;
};

}  // namespace homalg
