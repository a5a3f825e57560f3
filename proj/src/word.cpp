#include "chinoid/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chinoid {

void check_word(const Word& w, int n) {
  for (Gen g : w) {
    if (g < 1 || g > n) {
      throw std::invalid_argument("letter a" + std::to_string(g) +
                                  " outside 1.." + std::to_string(n));
    }
  }
}

Word word_from_string(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "1" && w.empty()) {
      // identity token; nothing may follow it
      if (in >> token) {
        throw std::invalid_argument("unexpected token after identity '1'");
      }
      return w;
    }
    if (token.size() < 2 || token[0] != 'a') {
      throw std::invalid_argument("malformed letter token: '" + token + "'");
    }
    std::size_t used = 0;
    int index = 0;
    try {
      index = std::stoi(token.substr(1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed letter token: '" + token + "'");
    }
    if (used + 1 != token.size() || index < 1) {
      throw std::invalid_argument("malformed letter token: '" + token + "'");
    }
    w.push_back(index);
  }
  return w;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += 'a';
    out += std::to_string(w[i]);
  }
  return out;
}

long letter_count(const Word& w, Gen gen) {
  return std::count(w.begin(), w.end(), gen);
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace chinoid
