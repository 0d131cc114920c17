// Copyright 2026 The Stancecraft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stancecraft/porter_stemmer.hpp"

#include "stancecraft/strings.hpp"

namespace stancecraft::textprep {
namespace {

// Direct transcription of the original algorithm. The buffer b holds the
// word; k is the index of its last character and j marks the end of the
// stem while testing a suffix.
class Stemmer {
 public:
  explicit Stemmer(std::string_view word) : b_(word) {
    k_ = static_cast<int>(b_.size()) - 1;
  }

  std::string run() {
    if (k_ <= 1) return b_;
    step1ab();
    if (k_ > 0) {
      step1c();
      step2();
      step3();
      step4();
      step5();
    }
    return b_.substr(0, static_cast<std::size_t>(k_ + 1));
  }

 private:
  char at(int i) const { return b_[static_cast<std::size_t>(i)]; }

  bool cons(int i) const {
    switch (at(i)) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of vowel-consonant sequences in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_cons(int j) const {
    if (j < 1) return false;
    if (at(j) != at(j - 1)) return false;
    return cons(j);
  }

  // consonant-vowel-consonant ending at i, last consonant not w, x or y.
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = at(i);
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (std::string_view(b_).substr(static_cast<std::size_t>(k_ - len + 1),
                                    s.size()) != s) {
      return false;
    }
    j_ = k_ - len;
    return true;
  }

  void set_to(std::string_view s) {
    b_.replace(static_cast<std::size_t>(j_ + 1),
               static_cast<std::size_t>(k_ - j_), s);
    k_ = j_ + static_cast<int>(s.size());
    b_.resize(static_cast<std::size_t>(k_ + 1));
  }

  void replace_if_measured(std::string_view s) {
    if (m() > 0) set_to(s);
  }

  // Tries (suffix, replacement) pairs in order; the first suffix that
  // matches decides, whether or not the measure allows the replacement.
  template <std::size_t N>
  void rules(const std::pair<std::string_view, std::string_view> (&table)[N]) {
    for (const auto& [suffix, replacement] : table) {
      if (ends(suffix)) {
        replace_if_measured(replacement);
        return;
      }
    }
  }

  void step1ab() {
    if (at(k_) == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (at(k_ - 1) != 's') {
        --k_;
      }
    }
    if (ends("eed")) {
      if (m() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_cons(k_)) {
        --k_;
        const char ch = at(k_);
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else if (j_ = k_; m() == 1 && cvc(k_)) {
        set_to("e");
      }
    }
    b_.resize(static_cast<std::size_t>(k_ + 1));
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[static_cast<std::size_t>(k_)] = 'i';
  }

  void step2() {
    if (k_ < 1) return;
    switch (at(k_ - 1)) {
      case 'a': {
        static constexpr std::pair<std::string_view, std::string_view> t[] = {
            {"ational", "ate"}, {"tional", "tion"}};
        rules(t);
        break;
      }
      case 'c': {
        static constexpr std::pair<std::string_view, std::string_view> t[] = {
            {"enci", "ence"}, {"anci", "ance"}};
        rules(t);
        break;
      }
      case 'e': {
        static constexpr std::pair<std::string_view, std::string_view> t[] = {
            {"izer", "ize"}};
        rules(t);
        break;
      }
      case 'l': {
        static constexpr std::pair<std::string_view, std::string_view> t[] = {
            {"abli", "able"}, {"alli", "al"}, {"entli", "ent"},
            {"eli", "e"},     {"ousli", "ous"}};
        rules(t);
        break;
      }
      case 'o': {
        static constexpr std::pair<std::string_view, std::string_view> t[] = {
            {"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}};
        rules(t);
        break;
      }
      case 's': {
        static constexpr std::pair<std::string_view, std::string_view> t[] = {
            {"alism", "al"},
            {"iveness", "ive"},
            {"fulness", "ful"},
            {"ousness", "ous"}};
        rules(t);
        break;
      }
      case 't': {
        static constexpr std::pair<std::string_view, std::string_view> t[] = {
            {"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}};
        rules(t);
        break;
      }
      default:
        break;
    }
  }

  void step3() {
    switch (at(k_)) {
      case 'e': {
        static constexpr std::pair<std::string_view, std::string_view> t[] = {
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}};
        rules(t);
        break;
      }
      case 'i': {
        static constexpr std::pair<std::string_view, std::string_view> t[] = {
            {"iciti", "ic"}};
        rules(t);
        break;
      }
      case 'l': {
        static constexpr std::pair<std::string_view, std::string_view> t[] = {
            {"ical", "ic"}, {"ful", ""}};
        rules(t);
        break;
      }
      case 's': {
        static constexpr std::pair<std::string_view, std::string_view> t[] = {
            {"ness", ""}};
        rules(t);
        break;
      }
      default:
        break;
    }
  }

  void step4() {
    if (k_ < 1) return;
    bool matched = false;
    switch (at(k_ - 1)) {
      case 'a':
        matched = ends("al");
        break;
      case 'c':
        matched = ends("ance") || ends("ence");
        break;
      case 'e':
        matched = ends("er");
        break;
      case 'i':
        matched = ends("ic");
        break;
      case 'l':
        matched = ends("able") || ends("ible");
        break;
      case 'n':
        matched = ends("ant") || ends("ement") || ends("ment") || ends("ent");
        break;
      case 'o':
        if (ends("ion") && j_ >= 0 && (at(j_) == 's' || at(j_) == 't')) {
          matched = true;
        } else {
          matched = ends("ou");
        }
        break;
      case 's':
        matched = ends("ism");
        break;
      case 't':
        matched = ends("ate") || ends("iti");
        break;
      case 'u':
        matched = ends("ous");
        break;
      case 'v':
        matched = ends("ive");
        break;
      case 'z':
        matched = ends("ize");
        break;
      default:
        break;
    }
    if (matched && m() > 1) k_ = j_;
  }

  void step5() {
    j_ = k_;
    if (at(k_) == 'e') {
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    if (at(k_) == 'l' && double_cons(k_)) {
      j_ = k_;
      if (m() > 1) --k_;
    }
  }

  std::string b_;
  int k_ = 0;
  int j_ = 0;
};

}  // namespace

std::string porter_stem(std::string_view word) {
  if (!is_lower_alpha(word)) return std::string(word);
  return Stemmer(word).run();
}

}  // namespace stancecraft::textprep
