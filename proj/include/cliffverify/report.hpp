#ifndef CLIFFVERIFY_REPORT_HPP
#define CLIFFVERIFY_REPORT_HPP

/*
 * Check reports: every verification operation returns one of these instead
 * of a bare bool, so failures carry a witness (which relation, which index
 * pair, what value showed up) all the way to the CLI output.
 */

#include <string>
#include <utility>
#include <vector>

namespace cliffverify {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;  // witness on failure, context on success
};

class CheckReport {
 public:
  explicit CheckReport(std::string subject) : subject_(std::move(subject)) {}

  void add(std::string name, bool pass, std::string detail = "") {
    items_.push_back({std::move(name), pass, std::move(detail)});
  }

  const std::string& subject() const { return subject_; }
  const std::vector<CheckItem>& items() const { return items_; }

  bool all_pass() const {
    for (const auto& item : items_)
      if (!item.pass) return false;
    return true;
  }

  // Concatenates another report's items under a prefixed name.
  void absorb(const CheckReport& other) {
    for (const auto& item : other.items_)
      items_.push_back({other.subject_ + "/" + item.name, item.pass, item.detail});
  }

 private:
  std::string subject_;
  std::vector<CheckItem> items_;
};

}  // namespace cliffverify

#endif  // CLIFFVERIFY_REPORT_HPP
