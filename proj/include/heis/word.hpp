#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "heis/genset.hpp"
#include "heis/group.hpp"

namespace heis {

// A word over A u A^-1: an ordered list of signed generator references.
struct Word {
  std::vector<SignedGen> letters;

  size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
};

// Left-to-right product of the referenced generators.
// Throws OutOfRangeError on a dangling generator reference.
GroupElement eval_word(const Word& w, const GenSet& A);

Word concat(const Word& a, const Word& b);

// Rotation by s: letter t of the result is letter (t+s) mod len of w.
Word cyclic_permute(const Word& w, size_t s);

// Letterwise sign flip, order preserved (not the group inverse).
Word invert_letters(const Word& w);

// Group inverse as a word: reverse order, flip signs.
Word inverse_word(const Word& w);

Word insert_letter(const Word& w, size_t pos, SignedGen letter);

// Swap adjacent letters at positions pos, pos+1.
Word transpose_adjacent(const Word& w, size_t pos);

// Run-length rendering, e.g. "x^3 y^2 x^-3 y^-2". Empty word renders "e".
std::string word_to_string(const Word& w, const GenSet& A);

}  // namespace heis
