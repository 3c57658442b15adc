#include "ivc/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <iterator>
#include <sstream>

#include "ivc/errors.hpp"

namespace ivc {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::istringstream ss(text);
    std::vector<std::string> tokens{std::istream_iterator<std::string>(ss), {}};
    if (tokens.empty() || tokens[0][0] == '#' || tokens[0] == "c") continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

long long to_integer(const std::string& token, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) throw ParseError(line, "expected an integer, got '" + token + "'");
  return value;
}

int to_count(const std::string& token, int line, const char* what) {
  long long v = to_integer(token, line);
  if (v < 0 || v > 100'000'000) throw ParseError(line, std::string(what) + " out of range: " + token);
  return static_cast<int>(v);
}

void expect_tokens(const Line& l, std::size_t count, const char* shape) {
  if (l.tokens.size() != count)
    throw ParseError(l.number, std::string("expected '") + shape + "', got " +
                                   std::to_string(l.tokens.size()) + " fields");
}

bool is_word(const std::string& token) {
  return !token.empty() && std::isalpha(static_cast<unsigned char>(token[0]));
}

Coord coord_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Coord(j.get<std::int64_t>());
  if (j.is_string()) return parse_coord(j.get<std::string>());
  throw ValidationError("coordinate must be an integer or a \"p/q\" string");
}

nlohmann::json coord_to_json(const Coord& c) {
  if (c.denominator() == 1) return c.numerator();
  return format_coord(c);
}

}  // namespace

std::string write_model_text(const IntervalModel& model) {
  std::ostringstream out;
  out << model.size() << '\n';
  for (const auto& iv : model.intervals())
    out << iv.id << ' ' << format_coord(iv.left) << ' ' << format_coord(iv.right) << '\n';
  return out.str();
}

IntervalModel read_model_text(std::istream& in, bool repair) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(1, "empty model file");
  expect_tokens(lines[0], 1, "n");
  int n = to_count(lines[0].tokens[0], lines[0].number, "interval count");
  if (static_cast<int>(lines.size()) - 1 != n)
    throw ParseError(lines.back().number, "header announces " + std::to_string(n) + " intervals, found " +
                                              std::to_string(lines.size() - 1));
  std::vector<Interval> intervals;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    expect_tokens(l, 3, "id left right");
    Interval iv;
    iv.id = to_count(l.tokens[0], l.number, "interval id");
    try {
      iv.left = parse_coord(l.tokens[1]);
      iv.right = parse_coord(l.tokens[2]);
    } catch (const ValidationError& e) {
      throw ParseError(l.number, e.what());
    }
    intervals.push_back(iv);
  }
  return make_model(std::move(intervals), repair);
}

nlohmann::json model_to_json(const IntervalModel& model) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& iv : model.intervals())
    arr.push_back({{"id", iv.id}, {"l", coord_to_json(iv.left)}, {"r", coord_to_json(iv.right)}});
  return {{"n", model.size()}, {"intervals", arr}};
}

IntervalModel model_from_json(const nlohmann::json& j, bool repair) {
  if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_array())
    throw ValidationError("model JSON needs an \"intervals\" array");
  std::vector<Interval> intervals;
  for (const auto& e : j["intervals"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("l") || !e.contains("r"))
      throw ValidationError("each interval needs id, l and r");
    intervals.push_back({e["id"].get<VertexId>(), coord_from_json(e["l"]), coord_from_json(e["r"])});
  }
  if (j.contains("n") && j["n"].get<std::size_t>() != intervals.size())
    throw ValidationError("\"n\" disagrees with the number of intervals");
  return make_model(std::move(intervals), repair);
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

IntervalModel read_model(std::istream& in, bool repair) {
  std::string text = read_all(in);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(
                                                                               std::min(e.byte, text.size())),
                                                 '\n'));
      throw ParseError(line, "invalid JSON");
    }
    try {
      return model_from_json(j, repair);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("model JSON: ") + e.what());
    }
  }
  std::istringstream ss(text);
  return read_model_text(ss, repair);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph read_edge_list(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'p edge n m' header");
  const auto& head = lines[0];
  if (head.tokens[0] != "p") throw ParseError(head.number, "missing 'p edge n m' header");
  expect_tokens(head, 4, "p edge n m");
  int n = to_count(head.tokens[2], head.number, "vertex count");
  int m = to_count(head.tokens[3], head.number, "edge count");
  Graph g(n);
  int seen = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens[0] != "e") throw ParseError(l.number, "expected 'e u v'");
    expect_tokens(l, 3, "e u v");
    long long u = to_integer(l.tokens[1], l.number), v = to_integer(l.tokens[2], l.number);
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError(l.number, "endpoint out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(l.number, "self-loop on vertex " + std::to_string(u));
    g.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    ++seen;
  }
  if (seen != m)
    throw ParseError(head.number, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(seen));
  return g;
}

std::string write_3dm(const ThreeDMInstance& instance) {
  std::ostringstream out;
  out << instance.n << ' ' << instance.triples.size() << '\n';
  for (const auto& t : instance.triples) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
  return out.str();
}

ThreeDMInstance read_3dm(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  expect_tokens(lines[0], 2, "n m");
  ThreeDMInstance inst;
  inst.n = to_count(lines[0].tokens[0], lines[0].number, "n");
  int m = to_count(lines[0].tokens[1], lines[0].number, "m");
  if (static_cast<int>(lines.size()) - 1 != m)
    throw ParseError(lines.back().number, "header announces " + std::to_string(m) + " triples, found " +
                                              std::to_string(lines.size() - 1));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    expect_tokens(l, 3, "a b c");
    Triple t{to_count(l.tokens[0], l.number, "a"), to_count(l.tokens[1], l.number, "b"),
             to_count(l.tokens[2], l.number, "c")};
    if (t.a >= inst.n || t.b >= inst.n || t.c >= inst.n)
      throw ParseError(l.number, "element index out of range 0.." + std::to_string(inst.n - 1));
    inst.triples.push_back(t);
  }
  try {
    inst.validate();
  } catch (const ValidationError& e) {
    throw ParseError(lines[0].number, e.what());
  }
  return inst;
}

VertexSet read_vertex_set(std::istream& in, int universe_size) {
  VertexSet s(universe_size);
  for (const auto& l : content_lines(in)) {
    std::size_t from = 0;
    if (is_word(l.tokens[0])) {
      if (l.tokens[0] != "witness" && l.tokens[0] != "set") continue;
      from = 1;
    }
    for (std::size_t i = from; i < l.tokens.size(); ++i) {
      long long v = to_integer(l.tokens[i], l.number);
      if (v < 0 || v >= universe_size)
        throw ParseError(l.number, "vertex " + l.tokens[i] + " outside 0.." + std::to_string(universe_size - 1));
      s.insert(static_cast<VertexId>(v));
    }
  }
  return s;
}

std::vector<int> read_index_list(std::istream& in) {
  std::vector<int> out;
  for (const auto& l : content_lines(in)) {
    std::size_t from = is_word(l.tokens[0]) ? 1 : 0;
    for (std::size_t i = from; i < l.tokens.size(); ++i) out.push_back(to_count(l.tokens[i], l.number, "index"));
  }
  return out;
}

}  // namespace ivc
