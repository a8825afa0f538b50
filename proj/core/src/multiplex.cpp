#include "multichrome/multiplex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "multichrome/error.hpp"

namespace multichrome {

std::size_t contagion_labeling::count_A() const noexcept {
  return static_cast<std::size_t>(std::count_if(is_A.begin(), is_A.end(), [](auto f) { return f != 0; }));
}

std::size_t contagion_labeling::count_B() const noexcept {
  return static_cast<std::size_t>(std::count_if(is_B.begin(), is_B.end(), [](auto f) { return f != 0; }));
}

void contagion_labeling::check_size(node_t n) const {
  if (is_A.size() != static_cast<std::size_t>(n) || is_B.size() != static_cast<std::size_t>(n))
    throw validation_error("labeling has " + std::to_string(is_A.size()) + " entries, graph has " +
                           std::to_string(n) + " nodes");
}

frontier_report frontier(const graph& g, const contagion_labeling& labels) {
  labels.check_size(g.node_count());
  const std::size_t a_count = labels.count_A();
  const std::size_t b_count = labels.count_B();
  if (a_count == 0 || b_count == 0)
    throw domain_error("frontier requires at least one A node and one B node");

  frontier_report r;
  std::size_t on_a = 0;
  std::size_t on_b = 0;
  for (node_t v = 0; v < g.node_count(); ++v) {
    bool touches_A = false;
    bool touches_B = false;
    auto scan = [&](node_t w) {
      touches_A = touches_A || labels.is_A[w];
      touches_B = touches_B || labels.is_B[w];
    };
    for (node_t w : g.neighbors(v)) scan(w);
    if (g.directed())
      for (node_t w : g.in_neighbors(v)) scan(w);

    const bool b_side = labels.is_B[v] && touches_A;
    const bool a_side = labels.is_A[v] && touches_B;
    if (b_side || a_side) {
      r.frontier_nodes.push_back(v);
      on_a += labels.is_A[v] ? 1 : 0;
      on_b += labels.is_B[v] ? 1 : 0;
    }
    if (labels.in_domain(v)) ++r.total_network_size;
  }
  r.frontier_size = r.frontier_nodes.size();
  r.overlap_with_A = static_cast<double>(on_a) / static_cast<double>(a_count);
  r.overlap_with_B = static_cast<double>(on_b) / static_cast<double>(b_count);
  return r;
}

std::vector<node_t> viable_candidates(const contagion_labeling& labels) {
  std::vector<node_t> out;
  for (node_t v = 0; v < labels.size(); ++v)
    if (labels.is_B[v] && !labels.is_A[v]) out.push_back(v);
  return out;
}

std::vector<std::uint8_t> domain_mask(const contagion_labeling& labels) {
  std::vector<std::uint8_t> mask(labels.is_A.size());
  for (std::size_t v = 0; v < mask.size(); ++v) mask[v] = labels.is_A[v] || labels.is_B[v];
  return mask;
}

namespace {

std::string with_thousands(std::size_t value) {
  std::string digits = std::to_string(value);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

std::size_t parse_thousands(std::string_view cell, std::size_t line) {
  std::string digits;
  for (char c : cell) {
    if (c == ',') continue;
    if (c < '0' || c > '9') throw parse_error("expected a count, got '" + std::string(cell) + "'", line);
    digits += c;
  }
  if (digits.empty()) throw parse_error("empty count", line);
  if (with_thousands(std::stoull(digits)) != cell)
    throw parse_error("count '" + std::string(cell) + "' is not in 1,234 form", line);
  return std::stoull(digits);
}

constexpr std::string_view table_header =
    "| Network | Frontier Size | Total Network Size |\n|---|---|---|\n";

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_frontier_table(const std::vector<frontier_table_row>& rows) {
  std::string out(table_header);
  for (const auto& r : rows)
    out += "| " + r.network + " | " + with_thousands(r.frontier_size) + " | " +
           with_thousands(r.total_network_size) + " |\n";
  return out;
}

std::vector<frontier_table_row> parse_frontier_table(const std::string& text) {
  if (text.rfind(table_header, 0) != 0) throw parse_error("missing frontier table header", 1);
  std::vector<frontier_table_row> rows;
  std::istringstream in(text.substr(table_header.size()));
  std::string line;
  std::size_t lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string_view> cells;
    std::string_view rest(line);
    if (rest.size() < 2 || rest.front() != '|' || rest.back() != '|')
      throw parse_error("table row must start and end with '|'", lineno);
    rest = rest.substr(1, rest.size() - 2);
    for (std::size_t bar; (bar = rest.find('|')) != std::string_view::npos; rest.remove_prefix(bar + 1))
      cells.push_back(trim(rest.substr(0, bar)));
    cells.push_back(trim(rest));
    if (cells.size() != 3) throw parse_error("table row must have 3 cells", lineno);
    rows.push_back({std::string(cells[0]), parse_thousands(cells[1], lineno),
                    parse_thousands(cells[2], lineno)});
  }
  if (format_frontier_table(rows) != text)
    throw parse_error("frontier table is not in canonical layout", 0);
  return rows;
}

}  // namespace multichrome
