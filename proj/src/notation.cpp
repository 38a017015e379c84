#include "univoque/notation.hpp"

#include <cctype>

#include "univoque/error.hpp"

namespace univoque {

namespace {

// Upper bound on the expanded length of any parsed word.
constexpr std::size_t kMaxExpandedLength = std::size_t{1} << 20;

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Parsed parse() {
    Word prefix;
    while (!at_end()) {
      const std::size_t item_start = pos_;
      Word item = parse_item(/*depth=*/0);
      bool infinite = false;
      item = parse_postfix(std::move(item), /*depth=*/0, &infinite);
      if (infinite) {
        if (!at_end()) {
          throw ParseError("'^w' must mark the final item", pos_);
        }
        if (item.empty()) throw ParseError("empty period", item_start);
        return EPSeq(alphabet_, std::move(prefix), std::move(item));
      }
      prefix += item;
      check_length(prefix.size());
    }
    return prefix;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void check_length(std::size_t n) const {
    if (n > kMaxExpandedLength) throw ParseError("expanded word too long", pos_);
  }

  Word parse_item(int depth) {
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    if (c == '(') {
      const std::size_t open = pos_++;
      Word group;
      while (!at_end() && peek() != ')') {
        Word inner = parse_item(depth + 1);
        group += parse_postfix(std::move(inner), depth + 1, nullptr);
        check_length(group.size());
      }
      if (at_end()) throw ParseError("unbalanced '('", open);
      ++pos_;  // ')'
      if (group.empty()) {
        // "()^w" deserves the more specific message
        if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == 'w') {
          throw ParseError("empty period", open);
        }
        throw ParseError("empty group", open);
      }
      return group;
    }
    if (c == ')' || c == '^') {
      throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }
    auto symbol = alphabet_.symbol_of(c);
    if (!symbol) {
      throw ParseError(std::string("unknown digit '") + c + "'", pos_);
    }
    ++pos_;
    return Word{*symbol};
  }

  // Applies any number of '^count' suffixes; '^w' is accepted only at
  // depth 0 and reported through `infinite`.
  Word parse_postfix(Word item, int depth, bool* infinite) {
    while (!at_end() && peek() == '^') {
      const std::size_t caret = pos_++;
      if (at_end()) throw ParseError("missing exponent after '^'", caret);
      if (peek() == 'w') {
        if (depth > 0 || infinite == nullptr) {
          throw ParseError("'^w' must mark the final item", caret);
        }
        ++pos_;
        *infinite = true;
        return item;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("exponent must be a positive integer or 'w'", pos_);
      }
      std::size_t count = 0;
      const std::size_t digits_start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        count = count * 10 + static_cast<std::size_t>(peek() - '0');
        if (count > kMaxExpandedLength) throw ParseError("exponent too large", digits_start);
        ++pos_;
      }
      if (count == 0) throw ParseError("exponent must be positive", digits_start);
      check_length(item.size() * count);
      item = item.repeated(count);
    }
    return item;
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Parsed parse_seq(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

EPSeq parse_infinite(std::string_view text, const Alphabet& alphabet) {
  Parsed parsed = parse_seq(text, alphabet);
  if (auto* seq = std::get_if<EPSeq>(&parsed)) return std::move(*seq);
  throw ParseError("expected an infinite sequence ending in '^w'", text.size());
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Parsed parsed = parse_seq(text, alphabet);
  if (auto* word = std::get_if<Word>(&parsed)) return std::move(*word);
  throw ParseError("expected a finite word", text.size());
}

std::string format_word(const Word& word, const Alphabet& alphabet) {
  return spell(word, alphabet);
}

std::string format_seq(const EPSeq& seq) {
  std::string out = spell(seq.preperiod(), seq.alphabet());
  if (seq.period().size() == 1) {
    out += spell(seq.period(), seq.alphabet());
  } else {
    out += '(';
    out += spell(seq.period(), seq.alphabet());
    out += ')';
  }
  out += "^w";
  return out;
}

}  // namespace univoque
