#include "skewbrace/io.hpp"

#include <cctype>
#include <sstream>

namespace skewbrace {

namespace {

struct Line {
  int number;  // 1-based position in the original text
  std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream probe(raw);
    std::string word;
    if (probe >> word) lines.push_back({number, raw});
  }
  return lines;
}

std::vector<Element> parse_row(const Line& line, const std::string& prefix,
                               int count) {
  std::istringstream in(line.text);
  if (!prefix.empty()) {
    std::string head;
    in >> head;
    if (head != prefix)
      throw ParseError(line.number, "expected '" + prefix + "'");
  }
  std::vector<Element> row;
  Element v;
  while (in >> v) row.push_back(v);
  if (!in.eof()) throw ParseError(line.number, "bad index");
  if (static_cast<int>(row.size()) != count)
    throw ParseError(line.number, "expected " + std::to_string(count) +
                                      " indices");
  return row;
}

class LineReader {
 public:
  explicit LineReader(const std::string& text)
      : lines_(significant_lines(text)) {}

  const Line& next(const std::string& what) {
    if (pos_ >= lines_.size())
      throw ParseError(lines_.empty() ? 1 : lines_.back().number,
                       "unexpected end of input, wanted " + what);
    return lines_[pos_++];
  }

  void expect_end() const {
    if (pos_ < lines_.size())
      throw ParseError(lines_[pos_].number, "trailing content");
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::vector<std::vector<Element>> parse_table(LineReader& reader, int n) {
  std::vector<std::vector<Element>> table;
  table.reserve(n);
  for (int i = 0; i < n; ++i)
    table.push_back(parse_row(reader.next("a table row"), "", n));
  return table;
}

int parse_header(const Line& line, const std::string& keyword,
                 std::vector<int>& params, int count) {
  std::istringstream in(line.text);
  std::string head;
  in >> head;
  if (head != keyword)
    throw ParseError(line.number, "expected '" + keyword + "' header");
  params.assign(count, 0);
  for (int& p : params) {
    if (!(in >> p) || p < 1)
      throw ParseError(line.number, "bad size in '" + keyword + "' header");
  }
  std::string rest;
  if (in >> rest) throw ParseError(line.number, "trailing content in header");
  return params[0];
}

void expect_keyword(const Line& line, const std::string& keyword) {
  std::istringstream in(line.text);
  std::string head, rest;
  in >> head;
  if (head != keyword || (in >> rest))
    throw ParseError(line.number, "expected '" + keyword + "'");
}

}  // namespace

Digroup parse_dgt(const std::string& text) {
  LineReader reader(text);
  std::vector<int> params;
  int n = parse_header(reader.next("the 'digroup' header"), "digroup", params,
                       1);
  expect_keyword(reader.next("'star'"), "star");
  auto star = parse_table(reader, n);
  expect_keyword(reader.next("'circ'"), "circ");
  auto circ = parse_table(reader, n);
  reader.expect_end();
  return make_digroup(make_group(std::move(star)), make_group(std::move(circ)));
}

std::string emit_dgt(const Digroup& d) {
  std::ostringstream out;
  out << "digroup " << d.order() << "\n";
  for (const char* name : {"star", "circ"}) {
    out << name << "\n";
    const auto& table = name[0] == 's' ? d.star.table : d.circ.table;
    for (const auto& row : table) {
      for (std::size_t j = 0; j < row.size(); ++j)
        out << (j ? " " : "") << row[j];
      out << "\n";
    }
  }
  return out.str();
}

DigroupAction parse_action(const std::string& text, const Digroup& y,
                           const Digroup& k) {
  LineReader reader(text);
  std::vector<int> params;
  parse_header(reader.next("the 'action' header"), "action", params, 2);
  if (params[0] != y.order() || params[1] != k.order())
    throw Error(errc::size_mismatch,
                "action header sizes do not match the Y and K digroups");

  DigroupAction act{y, k, {}, {}, {}};
  for (int yy = 0; yy < y.order(); ++yy) {
    for (auto* family : {&act.phi_star, &act.phi_circ, &act.lambda}) {
      const char* prefix = family == &act.phi_star   ? "phi_star:"
                           : family == &act.phi_circ ? "phi_circ:"
                                                     : "lambda:";
      const Line& line = reader.next(prefix);
      std::vector<Element> images = parse_row(line, prefix, k.order());
      for (Element e : images)
        if (e < 0 || e >= k.order())
          throw ParseError(line.number, "index outside K");
      family->push_back(ElementMap{k.order(), k.order(), std::move(images)});
    }
  }
  reader.expect_end();
  return act;
}

std::string emit_action(const DigroupAction& act) {
  std::ostringstream out;
  out << "action " << act.Y.order() << " " << act.K.order() << "\n";
  for (int y = 0; y < act.Y.order(); ++y) {
    const std::pair<const char*, const ElementMap*> rows[] = {
        {"phi_star:", &act.phi_star[y]},
        {"phi_circ:", &act.phi_circ[y]},
        {"lambda:", &act.lambda[y]}};
    for (const auto& [name, map] : rows) {
      out << name;
      for (Element e : map->images) out << " " << e;
      out << "\n";
    }
  }
  return out.str();
}

std::string emit_solution(const SetSolution& r) {
  std::ostringstream out;
  out << "ybe " << r.n << "\n";
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      out << x << " " << y << " " << r.first[x][y] << " " << r.second[x][y]
          << "\n";
  return out.str();
}

SetSolution parse_solution(const std::string& text) {
  LineReader reader(text);
  std::vector<int> params;
  int n = parse_header(reader.next("the 'ybe' header"), "ybe", params, 1);
  std::vector<std::vector<Element>> first(n, std::vector<Element>(n, -1));
  std::vector<std::vector<Element>> second(n, std::vector<Element>(n, -1));
  for (int i = 0; i < n * n; ++i) {
    const Line& line = reader.next("a solution row");
    std::vector<Element> row = parse_row(line, "", 4);
    Element x = row[0], y = row[1], fx = row[2], fy = row[3];
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw ParseError(line.number, "pair outside the carrier");
    if (first[x][y] != -1) throw ParseError(line.number, "duplicate pair");
    first[x][y] = fx;
    second[x][y] = fy;
  }
  reader.expect_end();
  return make_solution(n, std::move(first), std::move(second));
}

std::vector<Element> parse_index_list(const std::string& text) {
  std::vector<Element> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      while (used < item.size() && std::isspace(item[used])) ++used;
      if (used != item.size()) throw std::invalid_argument("junk");
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(errc::parse_error, "bad element list '" + text + "'");
    }
  }
  if (out.empty() && !text.empty())
    throw Error(errc::parse_error, "bad element list '" + text + "'");
  return out;
}

}  // namespace skewbrace
