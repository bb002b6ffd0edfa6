#pragma once

#include <istream>
#include <string>

#include "framed/errors.hpp"

namespace framed::detail {

// Next line that is neither blank nor a '#' comment.
inline std::string next_data_line(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') return line;
  }
  throw FormatError(std::string("unexpected end of input while reading ") + what);
}

}  // namespace framed::detail
