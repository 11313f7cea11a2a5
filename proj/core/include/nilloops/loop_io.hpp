#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "nilloops/loop.hpp"

namespace nilloops {

// Text format: a header line `loop <n>` followed by n rows of n whitespace
// separated 1-based entries. Loops are separated by blank lines. Lines whose
// first non-blank character is '#' are comments.

void write_loop(std::ostream& out, const Loop& loop);
void write_loops(std::ostream& out, const std::vector<Loop>& loops);
std::string format_loop(const Loop& loop);

// Throws ParseError with the offending line and column.
std::vector<Loop> parse_loops(std::istream& in);
std::vector<Loop> parse_loops(const std::string& text);

// Throws Error(kIo) when the file cannot be opened.
std::vector<Loop> read_loops_file(const std::filesystem::path& path);
void write_loops_file(const std::filesystem::path& path, const std::vector<Loop>& loops,
                      const std::string& comment = {});

}  // namespace nilloops
