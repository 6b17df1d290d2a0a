#pragma once

#include <cstdint>
#include <string>

#include "sloane/natural.hpp"
#include "sloane/numbase.hpp"

namespace sloane {

enum class MapKind { Shifted, ErdosStar };

/// One digit-product map: the t-shifted map (product of d + t over all
/// base-b digits) or the Erdős variant (product of the nonzero digits).
class MapSpec {
 public:
  static constexpr std::uint32_t kMaxShift = 1u << 30;

  static MapSpec shifted(std::uint64_t t, Base b);
  static MapSpec erdos_star(Base b);

  MapKind kind() const noexcept { return kind_; }
  std::uint32_t shift() const noexcept { return t_; }
  Base base() const noexcept { return b_; }

  /// Shifted maps with t >= b grow at every step, so no orbit ever closes.
  bool diverging_regime() const noexcept { return kind_ == MapKind::Shifted && t_ >= b_.value(); }

  /// "shifted(t=1,b=3)" or "erdos(b=10)".
  std::string to_string() const;

  friend bool operator==(const MapSpec&, const MapSpec&) = default;

 private:
  MapSpec(MapKind kind, std::uint32_t t, Base b) : kind_(kind), t_(t), b_(b) {}

  MapKind kind_;
  std::uint32_t t_;
  Base b_;
};

/// S(n). For n = 0 the expansion is the single digit 0, so the shifted map
/// gives t and the Erdős map gives the empty product 1.
Natural step(const MapSpec& m, const Natural& n);

/// S(n) from the digit histogram of n alone. Throws InvalidInput when the
/// histogram was taken in a different base.
Natural step_from_stats(const MapSpec& m, const DigitStats& stats);

/// S(n) written as cofactor * b^zeros. For a shifted map with 1 <= t <= b,
/// every digit b - t contributes a factor of exactly b, i.e. one trailing
/// zero of the image, so the image's digits are those of the cofactor
/// followed by `zeros` zeros. zeros is 0 whenever no digit maps to b.
struct FactoredImage {
  Natural cofactor;
  std::uint64_t zeros = 0;
};
FactoredImage step_factored(const MapSpec& m, const DigitStats& stats);

}  // namespace sloane
