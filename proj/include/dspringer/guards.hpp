#pragma once

#include <atomic>

namespace dspringer {

/// Size limits protecting the enumerators from runaway inputs.  Values are
/// process-wide; the CLI overrides them from the environment
/// (DSPRINGER_MAX_ENUM_N, DSPRINGER_MAX_HL_SIZE, DSPRINGER_MAX_SKEW_SIZE,
/// DSPRINGER_MAX_MACDONALD_N).
struct Guards {
  /// Largest n for which partitions/compositions of n are enumerated.
  std::atomic<int> max_enum_n{30};
  /// Largest |mu| for a full Hall-Littlewood expansion.  |SSYT(mu)| grows
  /// roughly like the number of involutions restricted to l(mu) letters, so
  /// beyond ~24 boxes with many distinct letters runs take minutes.
  std::atomic<int> max_hl_size{24};
  /// Largest |mu| for skewed Hall-Littlewood expansions s_rho^perp H(mu),
  /// which only visit shapes containing rho.
  std::atomic<int> max_skew_size{48};
  /// Largest n for the Macdonald table; 8 is allowed but slow.
  std::atomic<int> max_macdonald_n{7};
};

Guards& guards();

/// Applies DSPRINGER_* environment overrides; unknown or malformed values
/// are ignored.
void load_guards_from_env();

}  // namespace dspringer
