#include "alpharad/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace alpharad {
namespace {

constexpr int kBias = 63;

void check_printable(std::string_view text, std::size_t i) {
  auto c = static_cast<unsigned char>(text[i]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", i);
}

std::string_view strip_line_end(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = strip_line_end(text);
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) check_printable(text, i);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::uint64_t>(text[0] - kBias);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw ParseError("graph6: truncated 4-byte header", text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(text[i] - kBias);
    if (n < 63) throw ParseError("graph6: non-minimal 4-byte header", 0);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated 8-byte header", text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(text[i] - kBias);
    if (n < 258048) throw ParseError("graph6: non-minimal 8-byte header", 0);
    pos = 8;
  }
  if (n > (std::uint64_t{1} << 20)) throw ParseError("graph6: order too large", 0);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  const std::uint64_t have = text.size() - pos;
  if (have != need) {
    throw ParseError("graph6: payload has " + std::to_string(have) + " bytes, expected " +
                         std::to_string(need),
                     have < need ? text.size() : pos + need);
  }

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + k / 6;
      const int value = text[byte] - kBias;
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int value = text.back() - kBias;
    if ((value & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits", text.size() - 1);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = strip_line_end(line);
    if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
    if (view.empty()) continue;
    try {
      out.push_back(parse_graph6(view));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (line " + std::to_string(line_no) + ")", e.offset());
    }
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_stream(in);
}

namespace {

bool next_number(std::string_view& rest, std::size_t& value) {
  while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
  if (rest.empty()) return false;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc{}) return false;
  rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  return true;
}

bool only_space(std::string_view rest) {
  return rest.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Graph g;
  bool have_header = false;
  std::size_t expected = 0;
  std::size_t seen = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (only_space(line)) continue;

    std::size_t a = 0;
    std::size_t b = 0;
    if (!next_number(line, a) || !next_number(line, b) || !only_space(line)) {
      throw ParseError(have_header ? "edge list: expected \"u v\"" : "edge list: expected \"n m\"", line_no);
    }
    if (!have_header) {
      g = Graph(a);
      expected = b;
      have_header = true;
      continue;
    }
    if (a >= g.order() || b >= g.order()) throw ParseError("edge list: endpoint out of range", line_no);
    if (a == b) throw ParseError("edge list: self-loop", line_no);
    if (g.has_edge(a, b)) throw ParseError("edge list: repeated edge", line_no);
    if (seen == expected) throw ParseError("edge list: more edges than declared", line_no);
    g.add_edge(a, b);
    ++seen;
  }
  if (!have_header) throw ParseError("edge list: missing \"n m\" header", line_no);
  if (seen != expected) {
    throw ParseError("edge list: declared " + std::to_string(expected) + " edges, found " + std::to_string(seen),
                     line_no);
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace alpharad
