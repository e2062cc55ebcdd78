#include "affect/tokenizer.hpp"

#include <algorithm>
#include <cctype>

#include "affect/errors.hpp"

namespace affect {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool leading_punct(char c) {
  switch (c) {
    case '(': case '[': case '{': case '"': case '`': case '\'':
      return true;
    default:
      return false;
  }
}

bool trailing_punct(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':':
    case ')': case ']': case '}': case '"': case '\'': case '`':
      return true;
    default:
      return false;
  }
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Contraction suffixes checked longest-first; "n't" before "'t"-style clashes.
const char* kSuffixes[] = {"n't", "'ll", "'re", "'ve", "'s", "'d", "'m"};

void split_chunk(const std::string& chunk, bool split_contractions,
                 std::vector<std::string>& out) {
  std::size_t begin = 0, end = chunk.size();
  std::vector<std::string> tail;  // detached trailing punctuation, reversed

  while (begin < end && leading_punct(chunk[begin]) && end - begin > 1) {
    out.push_back(chunk.substr(begin, 1));
    ++begin;
  }
  while (end > begin + 1 && trailing_punct(chunk[end - 1])) {
    // keep internal apostrophes ("don't"); a trailing one is possessive
    tail.push_back(chunk.substr(end - 1, 1));
    --end;
  }

  std::string core = chunk.substr(begin, end - begin);
  if (!core.empty()) {
    bool emitted = false;
    if (split_contractions && core.size() >= 2) {
      std::string low = lower(core);
      for (const char* sfx : kSuffixes) {
        std::size_t n = std::char_traits<char>::length(sfx);
        if (low.size() > n && low.compare(low.size() - n, n, sfx) == 0) {
          out.push_back(core.substr(0, core.size() - n));
          out.push_back(core.substr(core.size() - n));
          emitted = true;
          break;
        }
      }
    }
    if (!emitted) out.push_back(core);
  }
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(*it);
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text, const TokenizerOptions& opts) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) split_chunk(text.substr(i, j - i), opts.split_contractions, tokens);
    i = j;
  }
  if (tokens.empty()) throw DataError("tokenize: empty text");
  return tokens;
}

}  // namespace affect
