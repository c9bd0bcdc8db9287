#pragma once

// Aggregated results of one CLI invocation, rendered as stable text (one
// line per check plus witness/note lines) or as JSON.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cliffgeom {

struct CheckReport {
  struct Item {
    std::string name;
    bool pass = true;
    std::vector<std::pair<std::string, std::int64_t>> counts;
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;
  };

  std::vector<Item> items;

  Item& add(std::string name) {
    items.emplace_back();
    items.back().name = std::move(name);
    return items.back();
  }

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  std::string render_text() const {
    std::string out;
    for (const auto& it : items) {
      out += it.name;
      out += it.pass ? ": pass" : ": FAIL";
      if (!it.counts.empty()) {
        out += " (";
        for (std::size_t i = 0; i < it.counts.size(); ++i) {
          if (i) out += ' ';
          out += it.counts[i].first + "=" + std::to_string(it.counts[i].second);
        }
        out += ")";
      }
      out += '\n';
      for (const auto& n : it.notes) out += "  " + n + "\n";
      for (const auto& w : it.witnesses) out += "  witness: " + w + "\n";
    }
    out += all_pass() ? "overall: pass\n" : "overall: FAIL\n";
    return out;
  }

  std::string render_json() const {
    nlohmann::ordered_json j;
    j["tool"] = "cliffgeom";
    j["status"] = all_pass() ? "pass" : "fail";
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& it : items) {
      nlohmann::ordered_json c;
      c["name"] = it.name;
      c["status"] = it.pass ? "pass" : "fail";
      nlohmann::ordered_json counts = nlohmann::ordered_json::object();
      for (const auto& [k, v] : it.counts) counts[k] = v;
      c["counts"] = std::move(counts);
      c["notes"] = it.notes;
      c["witnesses"] = it.witnesses;
      j["checks"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
  }
};

}  // namespace cliffgeom
