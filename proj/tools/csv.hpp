#pragma once

#include <cstdio>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ras::cli {

/// Row-oriented CSV with `# key=value` provenance lines, LF endings, and
/// doubles at 9 significant digits.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void comment(std::string_view key, std::string_view value) {
    out_ << "# " << key << '=' << value << '\n';
  }

  void header(std::initializer_list<std::string_view> columns) {
    bool first = true;
    for (auto c : columns) {
      if (!first) out_ << ',';
      out_ << c;
      first = false;
    }
    out_ << '\n';
  }

  class Row {
   public:
    explicit Row(std::ostream& out) : out_(out) {}
    Row(const Row&) = delete;
    ~Row() { out_ << '\n'; }

    Row& operator<<(double v) { return cell(format(v)); }
    Row& operator<<(std::optional<double> v) { return cell(v ? format(*v) : std::string()); }
    Row& operator<<(std::size_t v) { return cell(std::to_string(v)); }
    Row& operator<<(std::string_view v) { return cell(std::string(v)); }
    Row& operator<<(const char* v) { return cell(std::string(v)); }

   private:
    Row& cell(const std::string& text) {
      if (!first_) out_ << ',';
      out_ << text;
      first_ = false;
      return *this;
    }
    std::ostream& out_;
    bool first_ = true;
  };

  Row row() { return Row(out_); }

  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
  }

 private:
  std::ostream& out_;
};

}  // namespace ras::cli
