#pragma once

#include <stdexcept>
#include <string>

namespace cimsim {

enum class Errc {
  out_of_range,
  wrong_length,
  shape_mismatch,
  headroom_exceeded,
  not_precharged,
  readout_before_mac,
  unrealizable_target,
  insufficient_coverage,
  too_many_columns,
  no_work,
  parse_error,
  validation_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

}  // namespace cimsim
