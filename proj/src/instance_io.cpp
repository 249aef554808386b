#include <algorithm>
#include <charconv>
#include <set>

#include "lkc/instance.hpp"

namespace lkc {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::int64_t to_int(std::string_view field, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw InputError("expected an integer, got '" + std::string(field) + "'", line);
  }
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  std::vector<std::optional<ColorList>> lists;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;

    const std::string_view tag = fields[0];
    if (!have_header) {
      if (tag != "p" || fields.size() != 5 || fields[1] != "lkc") {
        throw InputError("expected header 'p lkc <n> <m> <k>'", line_no);
      }
      n = to_int(fields[2], line_no);
      m = to_int(fields[3], line_no);
      k = to_int(fields[4], line_no);
      if (n < 0 || m < 0 || k < 1 || n > (1 << 30)) {
        throw InputError("header requires n >= 0, m >= 0, k >= 1", line_no);
      }
      lists.resize(static_cast<std::size_t>(n));
      have_header = true;
    } else if (tag == "p") {
      throw InputError("duplicate header", line_no);
    } else if (tag == "e") {
      if (fields.size() != 3) throw InputError("edge line needs exactly two vertices", line_no);
      std::int64_t u = to_int(fields[1], line_no);
      std::int64_t v = to_int(fields[2], line_no);
      if (u < 1 || v < 1 || u > n || v > n) throw InputError("vertex out of range", line_no);
      if (u == v) throw InputError("self-loop", line_no);
      if (u > v) std::swap(u, v);
      Edge e{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)};
      if (!seen_edges.insert(e).second) throw InputError("duplicate edge", line_no);
      edges.push_back(e);
    } else if (tag == "l") {
      if (fields.size() < 2) throw InputError("list line needs a vertex", line_no);
      std::int64_t v = to_int(fields[1], line_no);
      if (v < 1 || v > n) throw InputError("vertex out of range", line_no);
      auto& slot = lists[static_cast<std::size_t>(v - 1)];
      if (slot) throw InputError("second list for vertex " + std::to_string(v), line_no);
      ColorList colors;
      for (std::size_t i = 2; i < fields.size(); ++i) {
        std::int64_t c = to_int(fields[i], line_no);
        if (c < 1 || c > k) throw InputError("color out of range", line_no);
        colors.push_back(static_cast<Color>(c));
      }
      std::sort(colors.begin(), colors.end());
      if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) {
        throw InputError("repeated color", line_no);
      }
      slot = std::move(colors);
    } else {
      throw InputError("unknown record '" + std::string(tag) + "'", line_no);
    }
  }
  if (!have_header) throw InputError("missing header", line_no);
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw InputError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()),
                     line_no);
  }

  ColorList full(static_cast<std::size_t>(k));
  for (Color c = 1; c <= k; ++c) full[static_cast<std::size_t>(c - 1)] = c;
  std::vector<ColorList> resolved;
  resolved.reserve(lists.size());
  for (auto& l : lists) resolved.push_back(l ? std::move(*l) : full);

  return Instance(Graph(static_cast<Vertex>(n), edges), static_cast<Color>(k), std::move(resolved));
}

std::string write_instance(const Instance& inst) {
  std::string out;
  out += "p lkc " + std::to_string(inst.order()) + " " + std::to_string(inst.graph().size()) +
         " " + std::to_string(inst.k()) + "\n";
  for (auto [u, v] : inst.graph().edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  for (Vertex v = 0; v < inst.order(); ++v) {
    out += "l " + std::to_string(v + 1);
    for (Color c : inst.list(v)) out += " " + std::to_string(c);
    out += "\n";
  }
  return out;
}

}  // namespace lkc
