#include "multichrome/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "multichrome/error.hpp"

namespace multichrome {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  for (std::size_t comma; (comma = line.find(',')) != std::string_view::npos; line.remove_prefix(comma + 1))
    cells.push_back(trim(line.substr(0, comma)));
  cells.push_back(trim(line));
  return cells;
}

std::uint64_t parse_id(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end)
    throw parse_error("expected a non-negative integer node id, got '" + std::string(token) + "'", line);
  return value;
}

bool parse_flag(std::string_view token, std::size_t line) {
  if (token == "1" || token == "true") return true;
  if (token == "0" || token == "false") return false;
  throw parse_error("expected 0 or 1, got '" + std::string(token) + "'", line);
}

double parse_real(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end)
    throw parse_error("expected a number, got '" + std::string(token) + "'", line);
  return value;
}

// Reads CSV rows after an optional header whose first cell is `first_header`.
template <class Row>
void for_each_csv_row(std::istream& in, std::string_view first_header, std::size_t columns, Row&& row) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = strip_comment(line);
    if (text.empty()) continue;
    const auto cells = split_csv(text);
    if (cells.front() == first_header) continue;
    if (cells.size() != columns)
      throw parse_error("expected " + std::to_string(columns) + " columns, got " +
                            std::to_string(cells.size()),
                        lineno);
    row(cells, lineno);
  }
}

}  // namespace

std::vector<raw_edge> parse_edge_list(std::istream& in) {
  std::vector<raw_edge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = strip_comment(line);
    if (text.empty()) continue;
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
      const std::size_t start = i;
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != ',') ++i;
      if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    if (tokens.size() != 2)
      throw parse_error("expected 'src dst', got '" + std::string(text) + "'", lineno);
    edges.push_back({parse_id(tokens[0], lineno), parse_id(tokens[1], lineno)});
  }
  return edges;
}

std::vector<label_row> parse_labels_csv(std::istream& in) {
  std::vector<label_row> rows;
  for_each_csv_row(in, "node", 3, [&](const auto& cells, std::size_t line) {
    rows.push_back({parse_id(cells[0], line), parse_flag(cells[1], line), parse_flag(cells[2], line)});
  });
  return rows;
}

std::vector<std::uint64_t> parse_node_list(std::istream& in) {
  std::vector<std::uint64_t> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = strip_comment(line);
    if (!text.empty()) ids.push_back(parse_id(text, lineno));
  }
  return ids;
}

node_t network_file::dense_id(std::uint64_t original) const {
  const auto it = std::lower_bound(original_ids.begin(), original_ids.end(), original);
  if (it == original_ids.end() || *it != original)
    throw validation_error("unknown node id " + std::to_string(original));
  return static_cast<node_t>(it - original_ids.begin());
}

network_file load_network(const std::filesystem::path& edges_path,
                          const std::optional<std::filesystem::path>& labels_path, bool directed) {
  auto edge_in = open_input(edges_path);
  const auto raw = parse_edge_list(edge_in);
  std::vector<label_row> label_rows;
  if (labels_path) {
    auto label_in = open_input(*labels_path);
    label_rows = parse_labels_csv(label_in);
  }

  network_file net;
  for (const auto& e : raw) {
    net.original_ids.push_back(e.src);
    net.original_ids.push_back(e.dst);
  }
  for (const auto& r : label_rows) net.original_ids.push_back(r.node);
  std::sort(net.original_ids.begin(), net.original_ids.end());
  net.original_ids.erase(std::unique(net.original_ids.begin(), net.original_ids.end()),
                         net.original_ids.end());
  if (net.original_ids.size() > static_cast<std::size_t>(INT32_MAX))
    throw validation_error("too many nodes");

  std::vector<edge> dense;
  dense.reserve(raw.size());
  for (const auto& e : raw) dense.push_back({net.dense_id(e.src), net.dense_id(e.dst)});
  const auto n = static_cast<node_t>(net.original_ids.size());
  net.g = graph::from_edges(dense, directed, n);
  net.labels = contagion_labeling(n);
  for (const auto& r : label_rows) {
    const node_t v = net.dense_id(r.node);
    net.labels.is_A[v] = r.is_A ? 1 : 0;
    net.labels.is_B[v] = r.is_B ? 1 : 0;
  }
  return net;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw file_error("cannot open '" + path.string() + "'");
  return in;
}

std::string read_text_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw file_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw file_error("failed writing '" + path.string() + "'");
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_edge_list(std::ostream& out, const graph& g, std::span<const std::uint64_t> ids) {
  auto id = [&](node_t v) { return ids.empty() ? static_cast<std::uint64_t>(v) : ids[v]; };
  for (const auto& e : g.edges()) out << id(e.src) << ' ' << id(e.dst) << '\n';
}

void write_labels_csv(std::ostream& out, const contagion_labeling& labels,
                      std::span<const std::uint64_t> ids) {
  out << "node,is_A,is_B\n";
  for (node_t v = 0; v < labels.size(); ++v)
    out << (ids.empty() ? static_cast<std::uint64_t>(v) : ids[v]) << ',' << int(labels.is_A[v] != 0)
        << ',' << int(labels.is_B[v] != 0) << '\n';
}

void write_id_map(std::ostream& out, std::span<const std::uint64_t> ids) {
  out << "original_id,dense_id\n";
  for (std::size_t v = 0; v < ids.size(); ++v) out << ids[v] << ',' << v << '\n';
}

void write_trace_csv(std::ostream& out, const sim_trace& trace) {
  out << "t,infected_count\n";
  for (std::size_t t = 0; t < trace.infected_count.size(); ++t)
    out << t << ',' << trace.infected_count[t] << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<sweep_record>& records) {
  out << "spec_id,overlap_with_A,overlap_with_B,component_count,density,mean_yield,yield_stddev\n";
  for (const auto& r : records)
    out << r.spec_id << ',' << format_double(r.overlap_with_A) << ',' << format_double(r.overlap_with_B)
        << ',' << r.component_count << ',' << format_double(r.density) << ','
        << format_double(r.mean_yield) << ',' << format_double(r.yield_stddev) << '\n';
}

std::vector<sweep_record> parse_sweep_csv(std::istream& in) {
  std::vector<sweep_record> records;
  for_each_csv_row(in, "spec_id", 7, [&](const auto& cells, std::size_t line) {
    sweep_record r;
    r.spec_id = std::string(cells[0]);
    r.overlap_with_A = parse_real(cells[1], line);
    r.overlap_with_B = parse_real(cells[2], line);
    r.component_count = static_cast<node_t>(parse_id(cells[3], line));
    r.density = parse_real(cells[4], line);
    r.mean_yield = parse_real(cells[5], line);
    r.yield_stddev = parse_real(cells[6], line);
    records.push_back(std::move(r));
  });
  return records;
}

void write_scores_csv(std::ostream& out, std::span<const user_profile> profiles) {
  out << "user_id,ideology,entropy,is_bot,group\n";
  for (const auto& p : profiles) {
    out << p.user_id << ',' << format_double(ideology_score(p.shares)) << ',';
    try {
      out << format_double(source_entropy(p.domain_counts));
    } catch (const domain_error&) {
    }
    out << ',' << int(is_bot(p.botscore)) << ',' << to_string(p.group) << '\n';
  }
}

void write_transitions_csv(std::ostream& out, const topic_transitions& tm, bool probabilities) {
  out << "from";
  for (const auto& label : tm.labels) out << ',' << label;
  out << '\n';
  for (std::size_t a = 0; a < tm.labels.size(); ++a) {
    out << tm.labels[a];
    for (std::size_t b = 0; b < tm.labels.size(); ++b) {
      out << ',';
      if (probabilities)
        out << format_double(tm.probabilities[a][b]);
      else
        out << tm.counts[a][b];
    }
    out << '\n';
  }
}

std::map<std::string, int> parse_slant_csv(std::istream& in) {
  std::map<std::string, int> slants;
  for_each_csv_row(in, "domain", 2, [&](const auto& cells, std::size_t line) {
    try {
      slants[std::string(cells[0])] = parse_slant(cells[1]);
    } catch (const validation_error& e) {
      throw parse_error(e.what(), line);
    }
  });
  return slants;
}

std::vector<std::pair<std::uint64_t, user_group>> parse_groups_csv(std::istream& in) {
  std::vector<std::pair<std::uint64_t, user_group>> rows;
  for_each_csv_row(in, "node", 2, [&](const auto& cells, std::size_t line) {
    try {
      rows.emplace_back(parse_id(cells[0], line), parse_user_group(cells[1]));
    } catch (const validation_error& e) {
      throw parse_error(e.what(), line);
    }
  });
  return rows;
}

}  // namespace multichrome
