#include "cbgen/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cbgen/errors.hpp"

namespace cbgen {

namespace {

[[noreturn]] void fail_line(const std::string& what, std::uint64_t line, const std::string& why) {
  std::ostringstream msg;
  msg << what << ": line " << line << ": " << why;
  throw ParseError(msg.str());
}

std::uint64_t parse_u64(const std::string& what, std::uint64_t line, std::string_view token) {
  std::uint64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    fail_line(what, line, "expected an unsigned integer, got '" + std::string(token) + "'");
  return value;
}

// Splits on single tabs; leading/trailing spaces around tokens are accepted.
std::vector<std::string_view> split_fields(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = text.find('\t', start);
    std::string_view field =
        tab == std::string_view::npos ? text.substr(start) : text.substr(start, tab - start);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\r')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\r')) field.remove_suffix(1);
    fields.push_back(field);
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

}  // namespace

std::uint64_t write_edge_list(const EdgeList& edges, std::ostream& out) {
  std::vector<Edge> sorted = edges.edges;
  std::sort(sorted.begin(), sorted.end(),
            [](Edge lhs, Edge rhs) { return edge_key(lhs) < edge_key(rhs); });
  for (Edge e : sorted) {
    out << (e.a + 1) << '\t' << (e.b + 1) << '\n';
  }
  return sorted.size();
}

void write_sequence(const std::vector<std::uint32_t>& values, std::ostream& out) {
  for (std::uint32_t v : values) out << v << '\n';
}

void write_partition(const Assignment& assignment, std::ostream& out) {
  for (std::size_t v = 0; v < assignment.community_of.size(); ++v) {
    out << (v + 1) << '\t' << (assignment.community_of[v] + 1) << '\n';
  }
}

std::vector<std::uint32_t> read_sequence(std::istream& in, const std::string& what) {
  std::vector<std::uint32_t> values;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.size() == 1 && fields[0].empty()) fail_line(what, line_no, "empty line");
    if (fields.size() != 1) fail_line(what, line_no, "expected one value per line");
    const std::uint64_t v = parse_u64(what, line_no, fields[0]);
    if (v > 0xFFFFFFFFULL) fail_line(what, line_no, "value out of range");
    values.push_back(static_cast<std::uint32_t>(v));
  }
  if (values.empty()) throw ParseError(what + ": file is empty");
  return values;
}

EdgeList read_edge_list(std::istream& in, const std::string& what) {
  EdgeList out;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.size() == 1 && fields[0].empty()) fail_line(what, line_no, "empty line");
    if (fields.size() != 2) fail_line(what, line_no, "expected 'u<TAB>v'");
    const std::uint64_t u = parse_u64(what, line_no, fields[0]);
    const std::uint64_t v = parse_u64(what, line_no, fields[1]);
    if (u == 0 || v == 0) fail_line(what, line_no, "vertex ids are 1-based");
    if (u == v) fail_line(what, line_no, "loops are not valid edges");
    if (u > 0xFFFFFFFEULL || v > 0xFFFFFFFEULL) fail_line(what, line_no, "vertex id out of range");
    out.append(make_edge(static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1)), 0);
  }
  if (out.size() == 0) throw ParseError(what + ": file is empty");
  return out;
}

Assignment read_partition(std::istream& in, const std::string& what) {
  Assignment out;
  std::string line;
  std::uint64_t line_no = 0;
  std::uint32_t max_community = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.size() == 1 && fields[0].empty()) fail_line(what, line_no, "empty line");
    if (fields.size() != 2) fail_line(what, line_no, "expected 'vertex<TAB>community'");
    const std::uint64_t v = parse_u64(what, line_no, fields[0]);
    const std::uint64_t c = parse_u64(what, line_no, fields[1]);
    if (v != line_no)
      fail_line(what, line_no,
                "vertex ids must be 1..n in order, got " + std::to_string(v));
    if (c == 0) fail_line(what, line_no, "community ids are 1-based");
    if (c > 0xFFFFFFFFULL) fail_line(what, line_no, "community id out of range");
    const auto community = static_cast<std::uint32_t>(c - 1);
    out.community_of.push_back(community);
    max_community = std::max(max_community, community);
  }
  if (out.community_of.empty()) throw ParseError(what + ": file is empty");
  out.members.resize(static_cast<std::size_t>(max_community) + 1);
  out.volumes.assign(out.members.size(), 0);
  for (std::size_t v = 0; v < out.community_of.size(); ++v) {
    out.members[out.community_of[v]].push_back(static_cast<std::uint32_t>(v));
    out.volumes[out.community_of[v]] += 1;
  }
  return out;
}

void GeneratorConfig::validate() const {
  std::vector<std::string> problems;
  auto complain = [&problems](const std::string& p) { problems.push_back(p); };

  if (n == 0) complain("n must be at least 1");
  if (n > 0xFFFFFFFEULL) complain("n exceeds the supported vertex range");

  if (xi.has_value() == mu.has_value())
    complain("exactly one of xi and mu must be set");
  if (xi && (*xi < 0.0 || *xi > 1.0)) complain("xi must lie in [0, 1]");
  if (mu && (*mu < 0.0 || *mu > 1.0)) complain("mu must lie in [0, 1]");
  if (variant == Variant::local && !mu)
    complain("variant=local requires mu (xi has no local form)");

  if (!model) complain("model must be cl or cm");

  if (in_degrees.empty()) {
    if (!gamma) complain("gamma is required unless in-degrees supplies the sequence");
    if (gamma && *gamma <= 1.0) complain("gamma must exceed 1");
    if (!max_degree) complain("max-degree is required unless in-degrees supplies the sequence");
    if (max_degree && *max_degree == 0) complain("max-degree must be at least 1");
    if (min_degree.has_value() == avg_degree.has_value())
      complain("exactly one of min-degree and avg-degree must be set");
    if (min_degree && *min_degree == 0) complain("min-degree must be at least 1");
    if (min_degree && max_degree && *min_degree > *max_degree)
      complain("min-degree must not exceed max-degree");
    if (avg_degree && max_degree && (*avg_degree < 1.0 ||
                                     *avg_degree > static_cast<double>(*max_degree)))
      complain("avg-degree must lie in [1, max-degree]");
  } else if (gamma || min_degree || avg_degree || max_degree) {
    complain("in-degrees replaces the degree law; drop gamma/min-degree/avg-degree/max-degree");
  }

  if (in_sizes.empty()) {
    if (!beta) complain("beta is required unless in-sizes supplies the sequence");
    if (beta && *beta <= 1.0) complain("beta must exceed 1");
    if (!min_community) complain("min-community is required unless in-sizes supplies the sequence");
    if (!max_community) complain("max-community is required unless in-sizes supplies the sequence");
    if (min_community && *min_community == 0) complain("min-community must be at least 1");
    if (min_community && max_community && *min_community > *max_community)
      complain("min-community must not exceed max-community");
    if (max_community && n > 0 && *max_community > n)
      complain("max-community must not exceed n");
  } else if (beta || min_community || max_community) {
    complain("in-sizes replaces the size law; drop beta/min-community/max-community");
  }

  if (max_iters == 0) complain("max-iters must be at least 1");
  if (threads == 0) complain("threads must be at least 1");
  if (!skip_write) {
    if (out_edges.empty()) complain("out-edges is required (or pass --skip-write)");
    if (out_communities.empty()) complain("out-communities is required (or pass --skip-write)");
  }

  if (!problems.empty()) {
    std::ostringstream msg;
    for (std::size_t i = 0; i < problems.size(); ++i) {
      if (i > 0) msg << "; ";
      msg << problems[i];
    }
    throw ConfigError(msg.str());
  }
}

}  // namespace cbgen
