#include "cimsim/encoding.hpp"

#include <cstdlib>
#include <string>

#include "cimsim/errors.hpp"

namespace cimsim {

WeightCode encode_weight(int v) {
  if (v < -kWeightMagMax || v > kWeightMagMax)
    fail(Errc::out_of_range,
         "weight " + std::to_string(v) + " outside [-7,7]");
  if (v == 0) return {+1, 0};
  return {static_cast<std::int8_t>(v < 0 ? -1 : +1),
          static_cast<std::uint8_t>(std::abs(v))};
}

int decode_weight(WeightCode w) { return drive_value(w); }

FoldedAct fold_activation(int raw) {
  if (raw < 0 || raw > kActMax)
    fail(Errc::out_of_range,
         "activation " + std::to_string(raw) + " outside [0,15]");
  int v = raw - kFoldOffset;
  if (v == 0) return {+1, 0};
  return {static_cast<std::int8_t>(v < 0 ? -1 : +1),
          static_cast<std::uint8_t>(std::abs(v))};
}

SignMag raw_drive(int raw) {
  if (raw < 0 || raw > kActMax)
    fail(Errc::out_of_range,
         "activation " + std::to_string(raw) + " outside [0,15]");
  return {+1, static_cast<std::uint8_t>(raw)};
}

long long folding_compensation(std::span<const WeightCode> weights) {
  if (weights.size() != static_cast<std::size_t>(kRows))
    fail(Errc::wrong_length, "expected 64 weights, got " +
                                 std::to_string(weights.size()));
  long long sum = 0;
  for (const auto& w : weights) sum += decode_weight(w);
  return static_cast<long long>(kFoldOffset) * sum;
}

long long dynamic_range(bool folded, int rows) {
  if (rows < 1) fail(Errc::out_of_range, "rows must be >= 1");
  long long act_max = folded ? kFoldOffset : kActMax;
  return static_cast<long long>(rows) * act_max * kWeightMagMax;
}

}  // namespace cimsim
