#include "cimsim/errors.hpp"

namespace cimsim {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::out_of_range: return "OutOfRange";
    case Errc::wrong_length: return "WrongLength";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::headroom_exceeded: return "HeadroomExceeded";
    case Errc::not_precharged: return "NotPrecharged";
    case Errc::readout_before_mac: return "ReadoutBeforeMac";
    case Errc::unrealizable_target: return "UnrealizableTarget";
    case Errc::insufficient_coverage: return "InsufficientCoverage";
    case Errc::too_many_columns: return "TooManyColumns";
    case Errc::no_work: return "NoWork";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
  }
  return "Unknown";
}

void fail(Errc code, const std::string& msg) {
  throw Error(code, std::string(errc_name(code)) + ": " + msg);
}

}  // namespace cimsim
