#pragma once

#include <string>
#include <vector>

namespace numgroup {

/// Freely reduced word over generators g_1..g_m and their inverses.
/// Letter +k means g_k, letter -k means g_k^{-1} (1-based). The empty word
/// is the identity.
class Word {
 public:
  Word() = default;
  /// Reduces an arbitrary letter sequence.
  explicit Word(std::vector<int> letters);

  static Word identity() { return Word(); }

  const std::vector<int>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Appends one letter with free cancellation.
  Word appended(int letter) const;
  Word inverse() const;
  Word operator*(const Word& o) const;
  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator<(const Word& o) const { return letters_ < o.letters_; }

  /// Renders against generator labels; inverse letters get a ^-1 suffix.
  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  std::vector<int> letters_;
};

}  // namespace numgroup
