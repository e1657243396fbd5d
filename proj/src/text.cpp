#include "linkinv/text.hpp"

#include <charconv>
#include <string>

#include "linkinv/error.hpp"

namespace linkinv {

std::string_view trim(std::string_view text) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!text.empty() && blank(text.front())) {
    text.remove_prefix(1);
  }
  while (!text.empty() && blank(text.back())) {
    text.remove_suffix(1);
  }
  return text;
}

Int parse_integer(std::string_view text, std::string_view what) {
  const std::string_view token = trim(text);
  Int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw UsageError("malformed integer for " + std::string(what) + ": '" + std::string(token) +
                     "'");
  }
  return value;
}

std::vector<Int> parse_integer_list(std::string_view text, std::string_view what) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_integer(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

std::pair<Int, Int> parse_range(std::string_view text, std::string_view what) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const Int single = parse_integer(text, what);
    return {single, single};
  }
  const Int lo = parse_integer(text.substr(0, dots), what);
  const Int hi = parse_integer(text.substr(dots + 2), what);
  if (lo > hi) {
    throw UsageError("empty range for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return {lo, hi};
}

} // namespace linkinv
