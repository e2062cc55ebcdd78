#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace affect {

struct TaggedText {
  std::vector<std::string> tokens;
  std::vector<std::string> tags;  // same length, Penn-style

  bool operator==(const TaggedText&) const = default;
};

// The 36 Penn Treebank word tags, fixed order.
const std::vector<std::string>& penn_word_tags();
// Punctuation tags (#, $, ., ,, :, (, ), ``, '').
const std::vector<std::string>& penn_punct_tags();
bool is_punct_tag(const std::string& tag);
bool is_known_tag(const std::string& tag);

// Greedy left-to-right averaged perceptron tagger. Tokens that are pure
// punctuation are tagged by a fixed rule table and never scored.
class PerceptronTagger {
 public:
  // Shuffles sentence order per epoch with the given seed; averaging uses
  // the usual timestamp trick. Retraining with the same seed reproduces
  // identical weights. Throws ConfigError on an empty corpus.
  void train(const std::vector<TaggedText>& corpus, int epochs, std::uint64_t seed);

  std::vector<std::string> tag(const std::vector<std::string>& tokens) const;
  TaggedText tag_text(const std::vector<std::string>& tokens) const;

  bool trained() const { return !tags_.empty(); }

  // Versioned binary model file.
  void save(const std::string& path) const;
  static PerceptronTagger load(const std::string& path);

  bool operator==(const PerceptronTagger&) const = default;

 private:
  std::vector<std::string> tags_;                            // scored tag inventory
  std::map<std::string, std::map<int, double>> weights_;     // feature -> tag idx -> weight

  int best_tag(const std::vector<std::string>& features) const;
  friend struct TaggerTrainer;
};

// Pre-tagged corpus file: "token<TAB>tag" lines, blank line between
// sentences. Unknown tags are data errors.
std::vector<TaggedText> read_tagged_file(const std::string& path);
std::string write_tagged(const std::vector<TaggedText>& sentences);

// Rule tag for a pure-punctuation token ("" when the token is not one).
std::string punct_rule_tag(const std::string& token);

}  // namespace affect
