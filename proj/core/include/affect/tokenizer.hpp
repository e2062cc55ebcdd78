#pragma once

#include <string>
#include <vector>

namespace affect {

struct TokenizerOptions {
  // Penn-style splitting of contractions: "didn't" -> did n't, "he's" -> he 's.
  bool split_contractions = true;
};

// Whitespace tokenization with punctuation detached as separate tokens.
// Case is preserved. Deterministic. Throws DataError on empty input.
std::vector<std::string> tokenize(const std::string& text, const TokenizerOptions& opts = {});

}  // namespace affect
