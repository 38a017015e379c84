#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace univoque {

/// Index of a digit inside its alphabet. Index order equals value order.
using Symbol = std::uint8_t;

/// A finite digit set a_1 < ... < a_J (J >= 2). Every digit carries a
/// one-character glyph used by the textual sequence notation.
class Alphabet {
 public:
  /// Throws DomainError unless `digits` is strictly increasing, has at least
  /// two entries, and `glyphs` has one distinct character per digit.
  Alphabet(std::vector<double> digits, std::string glyphs);

  /// {0, 1, m} with glyphs '0', '1', 'm'. Requires m >= 2.
  static Alphabet ternary(double m);

  /// Glyphs are derived from the digit values, which must be integers 0..9.
  static Alphabet from_digits(std::vector<double> digits);

  std::size_t size() const noexcept { return digits_.size(); }
  double digit(Symbol s) const { return digits_.at(s); }
  char glyph(Symbol s) const { return glyphs_.at(s); }
  const std::vector<double>& digits() const noexcept { return digits_; }
  const std::string& glyphs() const noexcept { return glyphs_; }
  std::optional<Symbol> symbol_of(char glyph) const;

  double min() const noexcept { return digits_.front(); }
  double max() const noexcept { return digits_.back(); }
  double min_gap() const noexcept;
  double max_gap() const noexcept;

  /// 1 + (a_J - a_1) / max gap. For q at or below this value the gap
  /// conditions characterize uniqueness exactly.
  double iff_threshold() const noexcept;

  /// 1 + (a_J - a_1) / min gap. Above this every sequence is unique.
  double saturation_threshold() const noexcept;

  /// True for the {0, 1, m} specialization built by ternary().
  bool is_ternary() const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<double> digits_;
  std::string glyphs_;
};

/// Symbols of the ternary alphabet {0, 1, m}.
namespace ternary {
inline constexpr Symbol kZero = 0;
inline constexpr Symbol kOne = 1;
inline constexpr Symbol kM = 2;
}  // namespace ternary

}  // namespace univoque
