#include "pentagon/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace pentagon::io {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
  std::string raw;
};

[[noreturn]] void parse_fail(int line, const std::string& message) {
  fail(errc::parse, "line " + std::to_string(line) + ": " + message);
}

// Significant lines only: blanks and '#' comments are dropped, commas count
// as separators.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string cooked = raw;
    for (char& c : cooked)
      if (c == ',' || c == '\t') c = ' ';
    std::istringstream split(cooked);
    Line line{number, {}, raw};
    std::string token;
    while (split >> token) line.tokens.push_back(token);
    if (line.tokens.empty() || line.tokens[0][0] == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

struct Cursor {
  const std::vector<Line>& lines;
  std::size_t at = 0;

  bool done() const { return at >= lines.size(); }
  const Line& peek() const { return lines[at]; }
  const Line& next() {
    if (done()) {
      int n = lines.empty() ? 1 : lines.back().number;
      parse_fail(n, "unexpected end of file");
    }
    return lines[at++];
  }
  void expect_done() const {
    if (!done()) parse_fail(peek().number, "unexpected content '" + peek().raw + "'");
  }
};

int parse_int(const Line& line, const std::string& token) {
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument{token};
    return v;
  } catch (const std::exception&) {
    parse_fail(line.number, "expected an integer, got '" + token + "'");
  }
}

std::string read_name(Cursor& cur) {
  if (cur.done() || cur.peek().tokens[0] != "name") return "";
  const Line& line = cur.next();
  if (line.tokens.size() != 2)
    parse_fail(line.number, "name takes exactly one word");
  return line.tokens[1];
}

int read_size(Cursor& cur) {
  const Line& line = cur.next();
  if (line.tokens[0] != "n")
    parse_fail(line.number, "expected 'n', got '" + line.tokens[0] + "'");
  if (line.tokens.size() != 2) parse_fail(line.number, "expected 'n <int>'");
  int n = parse_int(line, line.tokens[1]);
  if (n <= 0) parse_fail(line.number, "carrier size must be positive");
  return n;
}

void read_keyword(Cursor& cur, const char* keyword) {
  const Line& line = cur.next();
  if (line.tokens.size() != 1 || line.tokens[0] != keyword)
    parse_fail(line.number,
               std::string{"expected '"} + keyword + "', got '" + line.raw + "'");
}

std::vector<std::vector<element_t>> read_rows(Cursor& cur, int n) {
  std::vector<std::vector<element_t>> rows;
  for (int r = 0; r < n; ++r) {
    const Line& line = cur.next();
    if (static_cast<int>(line.tokens.size()) != n) {
      std::ostringstream msg;
      msg << "row " << r << " has " << line.tokens.size() << " entries, expected " << n;
      parse_fail(line.number, msg.str());
    }
    std::vector<element_t> row;
    for (int c = 0; c < n; ++c) {
      element_t v = parse_int(line, line.tokens[c]);
      if (v < 0 || v >= n) {
        std::ostringstream msg;
        msg << "entry " << v << " at (" << r << "," << c << ") outside [0," << n << ")";
        parse_fail(line.number, msg.str());
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_rows(std::ostream& out, int n, const std::vector<element_t>& table) {
  for (element_t r = 0; r < n; ++r) {
    for (element_t c = 0; c < n; ++c)
      out << table[static_cast<std::size_t>(r) * n + c] << (c + 1 < n ? " " : "");
    out << "\n";
  }
}

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io, "cannot open file: " + path);
  return in;
}

}  // namespace

Magma read_magma(std::istream& in) {
  auto lines = tokenize(in);
  Cursor cur{lines};
  std::string name = read_name(cur);
  int n = read_size(cur);
  read_keyword(cur, "table");
  auto rows = read_rows(cur, n);
  cur.expect_done();
  return validate_magma(n, rows, std::move(name));
}

Magma read_magma_file(const std::string& path) {
  std::ifstream in = open_or_fail(path);
  return read_magma(in);
}

void write_magma(std::ostream& out, const Magma& m) {
  if (!m.name.empty()) out << "name " << m.name << "\n";
  out << "n " << m.n << "\n" << "table\n";
  write_rows(out, m.n, m.table);
}

std::string to_string(const Magma& m) {
  std::ostringstream out;
  write_magma(out, m);
  return out.str();
}

void write_group(std::ostream& out, const Group& g) {
  write_magma(out, normalize_identity(g).magma);
}

PairMap read_pairmap(std::istream& in) {
  auto lines = tokenize(in);
  Cursor cur{lines};
  std::string name = read_name(cur);
  int n = read_size(cur);
  read_keyword(cur, "dot");
  auto dot_rows = read_rows(cur, n);
  read_keyword(cur, "star");
  auto star_rows = read_rows(cur, n);
  cur.expect_done();
  return make_pairmap(n, dot_rows, star_rows, std::move(name));
}

PairMap read_pairmap_file(const std::string& path) {
  std::ifstream in = open_or_fail(path);
  return read_pairmap(in);
}

void write_pairmap(std::ostream& out, const PairMap& s) {
  if (!s.name.empty()) out << "name " << s.name << "\n";
  out << "n " << s.n << "\n" << "dot\n";
  write_rows(out, s.n, s.dot_table);
  out << "star\n";
  write_rows(out, s.n, s.star_table);
}

std::string to_string(const PairMap& s) {
  std::ostringstream out;
  write_pairmap(out, s);
  return out.str();
}

namespace {

void write_profile_fields(std::ostream& out, const SolutionProfile& p) {
  out << "solution=" << (p.is_solution ? 1 : 0)
      << " reversed=" << (p.is_reversed ? 1 : 0)
      << " invertible=" << (p.is_invertible ? 1 : 0)
      << " commutative=" << (p.is_commutative ? 1 : 0)
      << " cocommutative=" << (p.is_cocommutative ? 1 : 0);
}

}  // namespace

void write_report(std::ostream& out, const EnumerationReport& report, Format format) {
  if (format == Format::structured) {
    out << "carrier " << report.carrier << "\n"
        << "method " << report.method << "\n"
        << "count " << report.count() << "\n";
    for (int i = 0; i < report.count(); ++i) {
      const PairMap& s = report.solutions[i];
      out << "solution " << i << "\n";
      if (!s.name.empty()) out << "name " << s.name << "\n";
      out << "dot\n";
      write_rows(out, s.n, s.dot_table);
      out << "star\n";
      write_rows(out, s.n, s.star_table);
      out << "profile ";
      write_profile_fields(out, report.profiles[i]);
      out << "\n";
    }
    if (report.classes) {
      out << "classes " << report.classes->count() << "\n" << "class_of";
      for (int c : report.classes->class_of) out << " " << c;
      out << "\n" << "representatives";
      for (int r : report.classes->representatives) out << " " << r;
      out << "\n";
    }
    return;
  }

  out << "carrier: " << report.carrier << "\n"
      << "method: " << report.method << "\n"
      << "solutions: " << report.count() << "\n";
  for (int i = 0; i < report.count(); ++i) {
    out << "[" << i << "] ";
    write_profile_fields(out, report.profiles[i]);
    if (!report.solutions[i].name.empty())
      out << " name=" << report.solutions[i].name;
    out << "\n";
  }
  if (report.classes) {
    out << "classes: " << report.classes->count() << "\n";
    for (int c = 0; c < report.classes->count(); ++c) {
      out << "class " << c << ":";
      for (int i = 0; i < static_cast<int>(report.classes->class_of.size()); ++i)
        if (report.classes->class_of[i] == c) out << " " << i;
      out << "\n";
    }
  }
}

}  // namespace pentagon::io
