#include "univoque/alphabet.hpp"

#include <algorithm>
#include <cmath>

#include "univoque/error.hpp"

namespace univoque {

Alphabet::Alphabet(std::vector<double> digits, std::string glyphs)
    : digits_(std::move(digits)), glyphs_(std::move(glyphs)) {
  if (digits_.size() < 2) {
    throw DomainError("alphabet needs at least two digits");
  }
  if (glyphs_.size() != digits_.size()) {
    throw DomainError("alphabet needs exactly one glyph per digit");
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (!std::isfinite(digits_[i])) {
      throw DomainError("alphabet digits must be finite");
    }
    if (i > 0 && !(digits_[i - 1] < digits_[i])) {
      throw DomainError("alphabet digits must be strictly increasing");
    }
  }
  std::string sorted = glyphs_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("alphabet glyphs must be distinct");
  }
  for (char c : glyphs_) {
    if (c == '(' || c == ')' || c == '^' || c == ' ' || c == ',') {
      throw DomainError(std::string("reserved character used as glyph: ") + c);
    }
  }
}

Alphabet Alphabet::ternary(double m) {
  if (!(m >= 2.0) || !std::isfinite(m)) {
    throw DomainError("ternary alphabet {0,1,m} requires m >= 2");
  }
  return Alphabet({0.0, 1.0, m}, "01m");
}

Alphabet Alphabet::from_digits(std::vector<double> digits) {
  std::string glyphs;
  for (double d : digits) {
    if (d < 0.0 || d > 9.0 || d != std::floor(d)) {
      throw DomainError("cannot derive a glyph for digit value " +
                        std::to_string(d));
    }
    glyphs.push_back(static_cast<char>('0' + static_cast<int>(d)));
  }
  return Alphabet(std::move(digits), std::move(glyphs));
}

std::optional<Symbol> Alphabet::symbol_of(char glyph) const {
  auto pos = glyphs_.find(glyph);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Symbol>(pos);
}

double Alphabet::min_gap() const noexcept {
  double gap = digits_[1] - digits_[0];
  for (std::size_t i = 2; i < digits_.size(); ++i) {
    gap = std::min(gap, digits_[i] - digits_[i - 1]);
  }
  return gap;
}

double Alphabet::max_gap() const noexcept {
  double gap = digits_[1] - digits_[0];
  for (std::size_t i = 2; i < digits_.size(); ++i) {
    gap = std::max(gap, digits_[i] - digits_[i - 1]);
  }
  return gap;
}

double Alphabet::iff_threshold() const noexcept {
  return 1.0 + (max() - min()) / max_gap();
}

double Alphabet::saturation_threshold() const noexcept {
  return 1.0 + (max() - min()) / min_gap();
}

bool Alphabet::is_ternary() const noexcept {
  return digits_.size() == 3 && glyphs_ == "01m" && digits_[0] == 0.0 &&
         digits_[1] == 1.0 && digits_[2] >= 2.0;
}

}  // namespace univoque
