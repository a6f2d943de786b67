#include "snakelat/strings.hpp"

#include <charconv>
#include <limits>

namespace snakelat {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

ArrowWord::ArrowWord(std::vector<Letter> l) : letters(std::move(l)) {}

ArrowWord::ArrowWord(std::vector<Letter> l, std::vector<int> v)
    : letters(std::move(l)), labels(std::move(v)) {
  if (!labels.empty() && labels.size() != letters.size() + 1)
    throw std::invalid_argument("label count must be letter count + 1");
  for (int x : labels)
    if (x <= 0) throw std::invalid_argument("labels must be positive");
}

int ArrowWord::label(std::size_t position) const {
  if (position == 0 || position > vertex_count())
    throw std::out_of_range("vertex position out of range");
  return labeled() ? labels[position - 1] : static_cast<int>(position);
}

namespace {

bool is_arrow(char c) { return c == '>' || c == '<'; }
Letter to_letter(char c) { return c == '>' ? Letter::Direct : Letter::Inverse; }

int read_label(std::string_view text, std::size_t& i) {
  std::size_t start = i;
  if (i >= text.size() || text[i] < '1' || text[i] > '9')
    throw ParseError("expected a positive integer label", i);
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
  if (ec != std::errc{}) throw ParseError("label out of range", start);
  return value;
}

}  // namespace

ArrowWord parse_word(std::string_view text) {
  if (text.empty()) throw ParseError("empty input", 0);
  if (text == "%") return ArrowWord{};
  if (is_arrow(text[0])) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!is_arrow(text[i])) throw ParseError("expected '>' or '<'", i);
      letters.push_back(to_letter(text[i]));
    }
    return ArrowWord(std::move(letters));
  }
  std::vector<Letter> letters;
  std::vector<int> labels;
  std::size_t i = 0;
  labels.push_back(read_label(text, i));
  while (i < text.size()) {
    if (!is_arrow(text[i])) throw ParseError("expected '>' or '<'", i);
    letters.push_back(to_letter(text[i++]));
    if (i == text.size()) throw ParseError("word ends with an arrow", i);
    labels.push_back(read_label(text, i));
  }
  return ArrowWord(std::move(letters), std::move(labels));
}

std::string render(const ArrowWord& w) {
  std::string out;
  if (!w.labeled()) {
    if (w.empty()) return "%";
    for (Letter a : w.letters) out += symbol(a);
    return out;
  }
  out += std::to_string(w.labels[0]);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    out += symbol(w.letters[i]);
    out += std::to_string(w.labels[i + 1]);
  }
  return out;
}

ArrowWord inverse(const ArrowWord& w) {
  ArrowWord r;
  r.letters.assign(w.letters.rbegin(), w.letters.rend());
  for (Letter& a : r.letters) a = flip(a);
  r.labels.assign(w.labels.rbegin(), w.labels.rend());
  return r;
}

std::vector<Run> decompose_runs(const ArrowWord& w) {
  if (w.empty()) throw std::invalid_argument("the empty word has no runs");
  std::vector<Run> runs;
  for (Letter a : w.letters) {
    if (!runs.empty() && runs.back().direction == a)
      ++runs.back().length;
    else
      runs.push_back({a, 1});
  }
  return runs;
}

ArrowWord subword(const ArrowWord& w, std::size_t first, std::size_t last) {
  if (first == 0 || first > last || last > w.vertex_count())
    throw std::out_of_range("subword range out of bounds");
  ArrowWord r;
  r.letters.assign(w.letters.begin() + (first - 1), w.letters.begin() + (last - 1));
  if (w.labeled())
    r.labels.assign(w.labels.begin() + (first - 1), w.labels.begin() + last);
  return r;
}

ArrowWord join(const ArrowWord& left, Letter joint, const ArrowWord& right) {
  if (left.labeled() != right.labeled())
    throw std::invalid_argument("cannot join labeled and unlabeled words");
  ArrowWord r = left;
  r.letters.push_back(joint);
  r.letters.insert(r.letters.end(), right.letters.begin(), right.letters.end());
  r.labels.insert(r.labels.end(), right.labels.begin(), right.labels.end());
  return r;
}

std::vector<ArrowWord> all_words(std::size_t length) {
  if (length >= std::numeric_limits<std::size_t>::digits - 1)
    throw std::invalid_argument("word length too large to enumerate");
  std::vector<ArrowWord> out;
  const std::size_t total = std::size_t{1} << length;
  out.reserve(total);
  for (std::size_t bits = 0; bits < total; ++bits) {
    std::vector<Letter> letters(length);
    for (std::size_t i = 0; i < length; ++i)
      letters[i] = (bits >> (length - 1 - i)) & 1 ? Letter::Inverse : Letter::Direct;
    out.emplace_back(std::move(letters));
  }
  return out;
}

bool is_socle(const ArrowWord& w, std::size_t p) {
  bool out_left = p > 1 && w.letter(p - 1) == Letter::Inverse;
  bool out_right = p < w.vertex_count() && w.letter(p) == Letter::Direct;
  return !out_left && !out_right;
}

bool is_top(const ArrowWord& w, std::size_t p) {
  bool in_left = p > 1 && w.letter(p - 1) == Letter::Direct;
  bool in_right = p < w.vertex_count() && w.letter(p) == Letter::Inverse;
  return !in_left && !in_right;
}

}  // namespace snakelat
