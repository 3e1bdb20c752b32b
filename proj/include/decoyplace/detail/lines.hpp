#pragma once

#include <istream>
#include <string>

namespace decoyplace::detail {

template <typename Fn>
void for_each_data_line(std::istream& in, ParseStats& stats, Fn&& fn) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    ++stats.considered;
    fn(line_no, line);
  }
}

}  // namespace decoyplace::detail
