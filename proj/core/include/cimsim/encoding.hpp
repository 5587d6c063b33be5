#pragma once

#include <cstdint>
#include <span>

namespace cimsim {

inline constexpr int kRows = 64;        // accumulation depth of one engine
inline constexpr int kWeightMagMax = 7; // 3-bit stored magnitude
inline constexpr int kWeightBits = 3;   // magnitude bit-planes per weight
inline constexpr int kActMax = 15;      // 4-bit unsigned activation
inline constexpr int kFoldOffset = 8;   // subtracted from every activation

// Sign-magnitude pair. Weights carry magnitude <= 7; folded activations
// carry magnitude <= 8; the unfolded drive path reuses the same layout
// with magnitude up to 15.
struct SignMag {
  std::int8_t sign;       // +1 or -1
  std::uint8_t magnitude;

  friend bool operator==(const SignMag&, const SignMag&) = default;
};

using WeightCode = SignMag;
using FoldedAct = SignMag;

// Packs v in [-7,7] as sign + 3-bit magnitude. Negative zero normalizes
// to sign = +1.
WeightCode encode_weight(int v);
int decode_weight(WeightCode w);

// Folded activation: sign * magnitude == raw - 8, magnitude in [0,8].
FoldedAct fold_activation(int raw);

// Unfolded drive: sign +1, magnitude == raw.
SignMag raw_drive(int raw);

inline int drive_value(SignMag s) {
  return s.sign * static_cast<int>(s.magnitude);
}

// Digital correction restoring sum(a*w) from the folded array result:
// the array computes sum((a-8)*w), so the periphery adds back 8*sum(w).
// Requires exactly 64 weights.
long long folding_compensation(std::span<const WeightCode> weights);

// Max |sum a'*w| over admissible inputs: rows*15*7 unfolded, rows*8*7 folded.
long long dynamic_range(bool folded, int rows);

}  // namespace cimsim
