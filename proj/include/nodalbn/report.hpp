#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nodalbn {

/// Plain-text report: `key: value` blocks separated by blank lines, and TSV tables
/// introduced by `#table <name>` followed by a header row.
class Report {
 public:
  struct Block {
    std::vector<std::pair<std::string, std::string>> entries;
    Block& add(std::string key, std::string value) {
      entries.emplace_back(std::move(key), std::move(value));
      return *this;
    }
  };

  struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
  };

  Block& block() {
    parts_.emplace_back(Block{});
    return std::get<Block>(parts_.back());
  }

  Table& table(std::string name, std::vector<std::string> header) {
    parts_.emplace_back(Table{std::move(name), std::move(header), {}});
    return std::get<Table>(parts_.back());
  }

  std::string render() const {
    std::string out;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      if (p > 0) out += "\n";
      if (const auto* b = std::get_if<Block>(&parts_[p])) {
        for (const auto& [key, value] : b->entries) out += key + ": " + value + "\n";
      } else {
        const auto& t = std::get<Table>(parts_[p]);
        out += "#table " + t.name + "\n";
        out += tsv_line(t.header);
        for (const auto& row : t.rows) out += tsv_line(row);
      }
    }
    return out;
  }

 private:
  static std::string tsv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) line += '\t';
      line += cells[i];
    }
    return line + "\n";
  }

  std::vector<std::variant<Block, Table>> parts_;
};

}  // namespace nodalbn
