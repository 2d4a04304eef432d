#include "vkmap/words.hpp"

#include <algorithm>
#include <cctype>

namespace vkmap {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == inverse(x))
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse(w[i - 1])) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || w.front() != inverse(w.back());
}

Word cyclic_shift(const Word& w, int k) {
  if (w.empty()) return w;
  const int n = static_cast<int>(w.size());
  k = ((k % n) + n) % n;
  Word out(w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return out;
}

bool concatenation_freely_reduced(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) return true;
  return v.front() != inverse(u.back());
}

std::string format_word(const Word& w, const std::vector<char>& generators) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (Letter x : w) {
    int idx = std::abs(static_cast<int>(x)) - 1;
    char c = generators.at(static_cast<size_t>(idx));
    out.push_back(x > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

Word parse_word(const std::string& text, const std::vector<char>& generators) {
  Word out;
  if (text == "1") return out;  // the empty word
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto it = std::find(generators.begin(), generators.end(), low);
    if (it == generators.end())
      throw Error(Errc::kUnknownGenerator, std::string("letter '") + c + "' is not a generator");
    Letter x = static_cast<Letter>(std::distance(generators.begin(), it) + 1);
    out.push_back(upper ? inverse(x) : x);
  }
  return out;
}

}  // namespace vkmap
