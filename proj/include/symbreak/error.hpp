#pragma once

#include <stdexcept>
#include <string>

namespace symbreak {

enum class errc {
  index_out_of_range,
  loop_rejected,
  size_cap_exceeded,
  enumeration_cap_exceeded,
  group_not_enumerated,
  budget_exceeded,
  no_edges,
  label_range_mismatch,
  invalid_power,
  not_bipartite,
  not_boolean_square_edge,
  domain_error,
  precondition_violated,
  parse_error,
  unknown_suite,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, long byte_offset)
      : Error(errc::parse_error,
              msg + " (line " + std::to_string(line) + ", byte " + std::to_string(byte_offset) + ")"),
        line_(line),
        byte_offset_(byte_offset) {}
  int line() const noexcept { return line_; }
  long byte_offset() const noexcept { return byte_offset_; }

 private:
  int line_;
  long byte_offset_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

const char* errc_name(errc code);

}  // namespace symbreak
