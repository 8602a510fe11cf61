#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "pvc/errors.hpp"
#include "pvc/instance.hpp"

namespace pvc {
namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

// Splits one physical line into whitespace-separated tokens, dropping any
// '#' comment.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != '#' && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r' && line[j] != '\f' && line[j] != '\v') {
      ++j;
    }
    tokens.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return tokens;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Advances to the next line that has tokens. Returns false at end of input.
  bool next(std::vector<Token>& tokens) {
    while (pos_ <= text_.size()) {
      if (pos_ == text_.size()) {
        pos_ = text_.size() + 1;
        return false;
      }
      const std::size_t end = text_.find('\n', pos_);
      const std::size_t stop = end == std::string_view::npos ? text_.size() : end;
      std::string_view line = text_.substr(pos_, stop - pos_);
      pos_ = end == std::string_view::npos ? text_.size() : end + 1;
      ++line_no_;
      tokens = tokenize(line);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

std::int64_t parse_int(const Token& tok, int line, std::int64_t lo, std::int64_t hi,
                       const char* what) {
  std::int64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, tok.column, std::string(what) + " out of range");
  }
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, tok.column,
                     "expected integer " + std::string(what) + ", got '" +
                         std::string(tok.text) + "'");
  }
  if (value < lo || value > hi) {
    throw ParseError(line, tok.column,
                     std::string(what) + " " + std::to_string(value) + " outside [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return value;
}

void expect_count(const std::vector<Token>& toks, std::size_t count, int line,
                  const char* record) {
  if (toks.size() != count) {
    const int col = toks.size() > count ? toks[count].column : 0;
    throw ParseError(line, col,
                     std::string("'") + record + "' record takes " +
                         std::to_string(count - 1) + " fields, got " +
                         std::to_string(toks.size() - 1));
  }
}

constexpr std::int64_t kMaxCount = std::numeric_limits<int>::max();
constexpr std::int64_t kMaxValue = std::int64_t{1} << 52;

}  // namespace

Instance parse_instance(std::string_view text, ValidationOptions options) {
  LineReader reader(text);
  std::vector<Token> toks;

  if (!reader.next(toks)) throw ParseError(reader.line(), 0, "missing 'p pvc' header");
  if (toks[0].text != "p" || toks.size() < 2 || toks[1].text != "pvc") {
    throw ParseError(reader.line(), toks[0].column, "first record must be 'p pvc <n> <m> <r>'");
  }
  expect_count(toks, 5, reader.line(), "p");
  const int n = static_cast<int>(parse_int(toks[2], reader.line(), 0, kMaxCount, "vertex count"));
  const int m = static_cast<int>(parse_int(toks[3], reader.line(), 0, kMaxCount, "edge count"));
  const int r = static_cast<int>(parse_int(toks[4], reader.line(), 0, kMaxCount, "group count"));

  std::vector<Cost> costs(n, 0);
  std::vector<bool> seen_v(n, false);
  std::vector<Edge> edges(m);
  std::vector<bool> seen_e(m, false);
  std::vector<Group> groups(r);
  std::vector<bool> seen_k(r, false);
  std::vector<int> k_line(r, 0);
  std::vector<std::vector<bool>> member(r);

  while (reader.next(toks)) {
    const int line = reader.line();
    const std::string_view kind = toks[0].text;
    if (kind == "v") {
      expect_count(toks, 3, line, "v");
      const auto id = parse_int(toks[1], line, 0, n - 1, "vertex id");
      if (seen_v[id]) throw ParseError(line, toks[1].column, "duplicate vertex " + std::to_string(id));
      seen_v[id] = true;
      costs[id] = parse_int(toks[2], line, 0, kMaxValue, "cost");
    } else if (kind == "e") {
      expect_count(toks, 5, line, "e");
      const auto id = parse_int(toks[1], line, 0, m - 1, "edge id");
      if (seen_e[id]) throw ParseError(line, toks[1].column, "duplicate edge " + std::to_string(id));
      seen_e[id] = true;
      Edge& edge = edges[id];
      edge.u = static_cast<VertexId>(parse_int(toks[2], line, 0, n - 1, "endpoint"));
      edge.v = static_cast<VertexId>(parse_int(toks[3], line, 0, n - 1, "endpoint"));
      if (edge.u == edge.v) {
        throw InvariantError("line " + std::to_string(line) + ": edge " + std::to_string(id) +
                             ": self-loop");
      }
      edge.weight = parse_int(toks[4], line, 1, kMaxValue, "weight");
    } else if (kind == "g") {
      if (toks.size() < 2) throw ParseError(line, 0, "'g' record needs a group id");
      const auto gid = parse_int(toks[1], line, 0, r - 1, "group id");
      if (member[gid].empty()) member[gid].assign(m, false);
      for (std::size_t t = 2; t < toks.size(); ++t) {
        const auto eid = parse_int(toks[t], line, 0, m - 1, "edge id");
        if (member[gid][eid]) {
          throw ParseError(line, toks[t].column,
                           "edge " + std::to_string(eid) + " declared twice in group " +
                               std::to_string(gid));
        }
        member[gid][eid] = true;
        groups[gid].edges.push_back(static_cast<EdgeId>(eid));
      }
    } else if (kind == "k") {
      expect_count(toks, 3, line, "k");
      const auto gid = parse_int(toks[1], line, 0, r - 1, "group id");
      if (seen_k[gid]) throw ParseError(line, toks[1].column, "duplicate target for group " + std::to_string(gid));
      seen_k[gid] = true;
      k_line[gid] = line;
      groups[gid].target = parse_int(toks[2], line, 0, kMaxValue, "target");
    } else if (kind == "p") {
      throw ParseError(line, toks[0].column, "duplicate header");
    } else {
      throw ParseError(line, toks[0].column, "unknown record type '" + std::string(kind) + "'");
    }
  }

  const int last = reader.line();
  for (int v = 0; v < n; ++v) {
    if (!seen_v[v]) throw ParseError(last, 0, "missing record for vertex " + std::to_string(v));
  }
  for (int e = 0; e < m; ++e) {
    if (!seen_e[e]) throw ParseError(last, 0, "missing record for edge " + std::to_string(e));
  }
  for (int i = 0; i < r; ++i) {
    if (!seen_k[i]) throw ParseError(last, 0, "missing target for group " + std::to_string(i));
    if (groups[i].edges.empty()) {
      throw InvariantError("group " + std::to_string(i) + ": empty");
    }
    Weight total = 0;
    for (EdgeId e : groups[i].edges) total += edges[e].weight;
    if (groups[i].target > total) {
      throw InvariantError("line " + std::to_string(k_line[i]) + ": group " + std::to_string(i) +
                           ": target " + std::to_string(groups[i].target) +
                           " exceeds total group weight " + std::to_string(total));
    }
  }

  return Instance(std::move(costs), std::move(edges), std::move(groups), options);
}

Instance read_instance_file(const std::string& path, ValidationOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), options);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p pvc " << inst.num_vertices() << ' ' << inst.num_edges() << ' '
      << inst.num_groups() << '\n';
  for (int v = 0; v < inst.num_vertices(); ++v) {
    out << "v " << v << ' ' << inst.cost(v) << '\n';
  }
  for (int e = 0; e < inst.num_edges(); ++e) {
    const Edge& edge = inst.edge(e);
    out << "e " << e << ' ' << edge.u << ' ' << edge.v << ' ' << edge.weight << '\n';
  }
  for (int i = 0; i < inst.num_groups(); ++i) {
    out << "g " << i;
    for (EdgeId e : inst.group(i).edges) out << ' ' << e;
    out << '\n';
  }
  for (int i = 0; i < inst.num_groups(); ++i) {
    out << "k " << i << ' ' << inst.group(i).target << '\n';
  }
  return out.str();
}

SetCoverInstance parse_set_cover(std::string_view text) {
  LineReader reader(text);
  std::vector<Token> toks;
  if (!reader.next(toks)) throw ParseError(reader.line(), 0, "missing 'p sc' header");
  if (toks[0].text != "p" || toks.size() < 2 || toks[1].text != "sc") {
    throw ParseError(reader.line(), toks[0].column, "first record must be 'p sc <r> <m>'");
  }
  expect_count(toks, 4, reader.line(), "p");
  SetCoverInstance sc;
  sc.universe_size = static_cast<int>(parse_int(toks[2], reader.line(), 0, kMaxCount, "universe size"));
  const int m = static_cast<int>(parse_int(toks[3], reader.line(), 0, kMaxCount, "set count"));
  sc.sets.assign(m, {});
  sc.costs.assign(m, 0);
  std::vector<bool> seen(m, false);

  while (reader.next(toks)) {
    const int line = reader.line();
    if (toks[0].text != "s") {
      throw ParseError(line, toks[0].column, "unknown record type '" + std::string(toks[0].text) + "'");
    }
    if (toks.size() < 3) throw ParseError(line, 0, "'s' record needs <sid> <cost>");
    const auto sid = parse_int(toks[1], line, 0, m - 1, "set id");
    if (seen[sid]) throw ParseError(line, toks[1].column, "duplicate set " + std::to_string(sid));
    seen[sid] = true;
    sc.costs[sid] = parse_int(toks[2], line, 0, kMaxValue, "cost");
    auto& elems = sc.sets[sid];
    for (std::size_t t = 3; t < toks.size(); ++t) {
      const int u = static_cast<int>(parse_int(toks[t], line, 0, sc.universe_size - 1, "element"));
      if (std::find(elems.begin(), elems.end(), u) != elems.end()) {
        throw ParseError(line, toks[t].column, "element " + std::to_string(u) + " repeated");
      }
      elems.push_back(u);
    }
    std::sort(elems.begin(), elems.end());
  }
  for (int s = 0; s < m; ++s) {
    if (!seen[s]) throw ParseError(reader.line(), 0, "missing record for set " + std::to_string(s));
  }
  validate(sc);
  return sc;
}

std::string serialize_set_cover(const SetCoverInstance& sc) {
  std::ostringstream out;
  out << "p sc " << sc.universe_size << ' ' << sc.sets.size() << '\n';
  for (std::size_t s = 0; s < sc.sets.size(); ++s) {
    out << "s " << s << ' ' << sc.costs[s];
    for (int u : sc.sets[s]) out << ' ' << u;
    out << '\n';
  }
  return out.str();
}

}  // namespace pvc
