#include "nilloops/loop_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "nilloops/error.hpp"

namespace nilloops {
namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool is_skippable(std::string_view line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int parse_int(const Token& token, int line_no) {
  int value = 0;
  const auto* first = token.text.data();
  const auto* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line_no, token.column, "expected an integer, got '" +
                                                std::string(token.text) + "'");
  }
  return value;
}

}  // namespace

void write_loop(std::ostream& out, const Loop& loop) {
  const int n = loop.order();
  out << "loop " << n << '\n';
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << loop.mul(x, y) + 1;
    }
    out << '\n';
  }
}

void write_loops(std::ostream& out, const std::vector<Loop>& loops) {
  for (std::size_t i = 0; i < loops.size(); ++i) {
    if (i) out << '\n';
    write_loop(out, loops[i]);
  }
}

std::string format_loop(const Loop& loop) {
  std::ostringstream out;
  write_loop(out, loop);
  return out.str();
}

std::vector<Loop> parse_loops(std::istream& in) {
  std::vector<Loop> loops;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto header = tokenize(line);
    if (header.size() != 2 || header[0].text != "loop") {
      throw ParseError(line_no, header.front().column, "expected 'loop <n>'");
    }
    const int header_line = line_no;
    const int n = parse_int(header[1], line_no);
    if (n < 1 || n > kMaxLoopOrder) {
      throw ParseError(line_no, header[1].column, "order out of range");
    }
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
      if (!std::getline(in, line)) {
        throw ParseError(line_no + 1, 1, "unexpected end of input, expected row " +
                                             std::to_string(r + 1));
      }
      ++line_no;
      if (is_blank(line)) {
        throw ParseError(line_no, 1, "expected row " + std::to_string(r + 1));
      }
      const auto tokens = tokenize(line);
      if (static_cast<int>(tokens.size()) != n) {
        const int column = static_cast<int>(tokens.size()) > n
                               ? tokens[n].column
                               : static_cast<int>(line.size()) + 1;
        throw ParseError(line_no, column, "expected " + std::to_string(n) + " entries");
      }
      for (const Token& token : tokens) {
        const int value = parse_int(token, line_no);
        if (value < 1 || value > n) {
          throw ParseError(line_no, token.column, "entry out of range 1.." + std::to_string(n));
        }
        table.push_back(value - 1);
      }
    }
    try {
      loops.push_back(Loop::validate(n, table));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(header_line, 1, e.what());
    }
  }
  return loops;
}

std::vector<Loop> parse_loops(const std::string& text) {
  std::istringstream in(text);
  return parse_loops(in);
}

std::vector<Loop> read_loops_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot open " + path.string());
  return parse_loops(in);
}

void write_loops_file(const std::filesystem::path& path, const std::vector<Loop>& loops,
                      const std::string& comment) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(Errc::kIo, "cannot write " + tmp);
    if (!comment.empty()) out << "# " << comment << "\n";
    write_loops(out, loops);
    if (!out) throw Error(Errc::kIo, "write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nilloops
