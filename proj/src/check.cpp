#include "homalg/check.hpp"

#include <algorithm>

namespace homalg {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

void CheckList::pass(std::string name, std::string detail) {
  items_.push_back({std::move(name), Status::pass, std::move(detail)});
}

void CheckList::fail(std::string name, std::string detail) {
  items_.push_back({std::move(name), Status::fail, std::move(detail)});
}

void CheckList::skip(std::string name, std::string detail) {
  items_.push_back({std::move(name), Status::skipped, std::move(detail)});
}

void CheckList::expect(bool ok, std::string name, std::string detail) {
  items_.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(detail)});
}

void CheckList::append(const CheckList& other, const std::string& prefix) {
  for (const auto& c : other.items_) items_.push_back({prefix + c.name, c.status, c.detail});
}

std::size_t CheckList::failures() const {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [](const CheckResult& c) { return c.status == Status::fail; }));
}

}  // namespace homalg
