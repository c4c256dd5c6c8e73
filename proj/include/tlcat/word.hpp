#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "tlcat/errors.hpp"

namespace tlcat {

// Word over the two-letter alphabet {a, b}. 'a' marks a plain tensor factor,
// 'b' a conjugate one; orthogonal categories use all-a words throughout.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
      if (c != 'a' && c != 'b') throw ParseError("word letter must be 'a' or 'b'");
  }

  static Word all_a(std::size_t k) { return Word(std::string(k, 'a')); }

  // alternating word of k letters starting with `first`: abab... or baba...
  static Word alternating(std::size_t k, char first) {
    std::string s(k, 'a');
    for (std::size_t i = 0; i < k; ++i)
      s[i] = (i % 2 == 0) == (first == 'a') ? 'a' : 'b';
    return Word(s);
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char at(std::size_t i) const { return letters_[i]; }
  const std::string& str() const { return letters_; }

  bool all_a() const { return letters_.find('b') == std::string::npos; }

  // bar every letter (a <-> b)
  Word bar() const {
    std::string s = letters_;
    for (char& c : s) c = c == 'a' ? 'b' : 'a';
    Word w;
    w.letters_ = std::move(s);
    return w;
  }

  Word reversed() const {
    Word w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    return w;
  }

  // the word dual to this one: reverse and bar (u^w has dual u^{rev_bar(w)})
  Word rev_bar() const { return reversed().bar(); }

  Word operator+(const Word& o) const {
    Word w;
    w.letters_ = letters_ + o.letters_;
    return w;
  }

  auto operator<=>(const Word&) const = default;

 private:
  std::string letters_;
};

inline Word alt_a(std::size_t k) { return Word::alternating(k, 'a'); }
inline Word alt_b(std::size_t k) { return Word::alternating(k, 'b'); }

}  // namespace tlcat
