#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace snakelat {

enum class Letter : std::uint8_t { Direct, Inverse };

constexpr Letter flip(Letter a) {
  return a == Letter::Direct ? Letter::Inverse : Letter::Direct;
}
constexpr char symbol(Letter a) { return a == Letter::Direct ? '>' : '<'; }

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// v1 a1 v2 ... an v(n+1). Labels are either absent or one per vertex.
struct ArrowWord {
  std::vector<Letter> letters;
  std::vector<int> labels;

  ArrowWord() = default;
  explicit ArrowWord(std::vector<Letter> letters);
  ArrowWord(std::vector<Letter> letters, std::vector<int> labels);

  std::size_t length() const { return letters.size(); }
  std::size_t vertex_count() const { return letters.size() + 1; }
  bool labeled() const { return !labels.empty(); }
  bool empty() const { return letters.empty(); }

  // 1-based vertex position; unlabeled words number their vertices.
  int label(std::size_t position) const;
  // 1-based letter index, between vertices i and i+1.
  Letter letter(std::size_t index) const { return letters.at(index - 1); }

  bool operator==(const ArrowWord&) const = default;
};

ArrowWord parse_word(std::string_view text);
std::string render(const ArrowWord& w);

ArrowWord inverse(const ArrowWord& w);

struct Run {
  Letter direction;
  std::size_t length;
  bool operator==(const Run&) const = default;
};

std::vector<Run> decompose_runs(const ArrowWord& w);

// Vertices first..last (1-based, inclusive) with the letters between them.
ArrowWord subword(const ArrowWord& w, std::size_t first, std::size_t last);

// left, joined by one letter, then right. Both sides must agree on labeling.
ArrowWord join(const ArrowWord& left, Letter joint, const ArrowWord& right);

// Every unlabeled word of the given length, Direct before Inverse.
std::vector<ArrowWord> all_words(std::size_t length);

// Positions with no outgoing / no incoming arrow.
bool is_socle(const ArrowWord& w, std::size_t position);
bool is_top(const ArrowWord& w, std::size_t position);

}  // namespace snakelat
