#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vkmap/errors.hpp"

namespace vkmap {

/// A letter is a signed generator index: +(i+1) for generator i, -(i+1)
/// for its inverse. Textually generator i is a lowercase letter and its
/// inverse the matching uppercase letter.
using Letter = std::int8_t;

/// A free-group word; the empty vector is the empty word.
using Word = std::vector<Letter>;

inline Letter inverse(Letter x) { return static_cast<Letter>(-x); }

Word inverse(const Word& w);
Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// Rotates w left by k positions (w_k ... w_{n-1} w_0 ... w_{k-1}).
Word cyclic_shift(const Word& w, int k);

/// True when the junction of u.v introduces no cancellation; both words are
/// assumed freely reduced.
bool concatenation_freely_reduced(const Word& u, const Word& v);

/// Textual form under the uppercase-inverse convention; "1" is the empty
/// word. `generators` lists the lowercase generator letters in order.
std::string format_word(const Word& w, const std::vector<char>& generators);
Word parse_word(const std::string& text, const std::vector<char>& generators);

}  // namespace vkmap
