#include "numgroup/word.hpp"

#include <sstream>
#include <stdexcept>

namespace numgroup {

Word::Word(std::vector<int> letters) {
  for (int l : letters) {
    if (l == 0) throw std::invalid_argument("word letters must be nonzero");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::appended(int letter) const {
  Word w = *this;
  if (letter == 0) throw std::invalid_argument("word letters must be nonzero");
  if (!w.letters_.empty() && w.letters_.back() == -letter)
    w.letters_.pop_back();
  else
    w.letters_.push_back(letter);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::operator*(const Word& o) const {
  Word w = *this;
  for (int l : o.letters_) w = w.appended(l);
  return w;
}

std::string Word::to_string(const std::vector<std::string>& labels) const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (int l : letters_) {
    size_t idx = static_cast<size_t>((l > 0 ? l : -l) - 1);
    if (idx >= labels.size()) throw std::out_of_range("word letter outside label range");
    os << labels[idx];
    if (l < 0) os << "^-1";
  }
  return os.str();
}

}  // namespace numgroup
