#include "symbreak/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace symbreak {

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line = 1;

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') ++line;
    ++pos;
  }
  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n')) advance();
  }
  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError(msg, line, static_cast<long>(pos));
  }
  long parse_int() {
    skip_space();
    if (at_end()) error("unexpected end of input, expected integer");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected integer");
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 100'000'000L) error("integer too large");
      advance();
    }
    return value;
  }
};

Graph parse_edgelist(std::string_view text) {
  Cursor cur{text};
  long n = cur.parse_int();
  long m = cur.parse_int();
  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    long u = cur.parse_int();
    long v = cur.parse_int();
    if (u < 0 || u >= n || v < 0 || v >= n) cur.error("vertex index out of range");
    if (u == v) cur.error("loop edge rejected");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  cur.skip_space();
  if (!cur.at_end()) cur.error("trailing input after edge list");
  return g;
}

std::string serialize_edgelist(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

constexpr int kG6Low = 63;   // printable offset
constexpr int kG6High = 126;

Graph parse_graph6(std::string_view text) {
  Cursor cur{text};
  cur.skip_space();
  std::string_view header = ">>graph6<<";
  if (text.substr(cur.pos, header.size()) == header) cur.pos += header.size();
  if (cur.at_end()) cur.error("empty graph6 input");

  auto next_byte = [&]() -> int {
    if (cur.at_end()) cur.error("truncated graph6 input");
    int c = static_cast<unsigned char>(cur.peek());
    if (c < kG6Low || c > kG6High) cur.error("invalid graph6 byte");
    cur.advance();
    return c - kG6Low;
  };

  long n;
  int first = next_byte();
  if (first < 63) {
    n = first;
  } else {
    int a = next_byte();
    if (a == 63) cur.error("graph6 orders above 2^18 not supported");
    int b = next_byte();
    int c = next_byte();
    n = (static_cast<long>(a) << 12) | (b << 6) | c;
  }
  if (n > 4096) cur.error("graph6 order too large for this tool");

  Graph g(static_cast<int>(n));
  int bits = 0, have = 0;
  for (long v = 1; v < n; ++v) {
    for (long u = 0; u < v; ++u) {
      if (have == 0) {
        bits = next_byte();
        have = 6;
      }
      --have;
      if ((bits >> have) & 1) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  }
  cur.skip_space();
  if (!cur.at_end()) cur.error("trailing input after graph6 data");
  return g;
}

std::string serialize_graph6(const Graph& g) {
  std::string out;
  long n = g.vertex_count();
  if (n < 63) {
    out.push_back(static_cast<char>(n + kG6Low));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Low));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Low));
    out.push_back(static_cast<char>((n & 63) + kG6Low));
  }
  int bits = 0, have = 0;
  for (long v = 1; v < n; ++v) {
    for (long u = 0; u < v; ++u) {
      bits = (bits << 1) | (g.has_edge(static_cast<int>(u), static_cast<int>(v)) ? 1 : 0);
      if (++have == 6) {
        out.push_back(static_cast<char>(bits + kG6Low));
        bits = 0;
        have = 0;
      }
    }
  }
  if (have > 0) out.push_back(static_cast<char>((bits << (6 - have)) + kG6Low));
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::edgelist ? parse_edgelist(text) : parse_graph6(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::edgelist ? serialize_edgelist(g) : serialize_graph6(g);
}

GraphFormat sniff_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return std::isdigit(static_cast<unsigned char>(c)) ? GraphFormat::edgelist : GraphFormat::graph6;
  }
  return GraphFormat::edgelist;
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format);
}

Graph read_graph_file_auto(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  return parse_graph(text, sniff_format(text));
}

}  // namespace symbreak
