#include "heis/word.hpp"

#include "heis/errors.hpp"

namespace heis {

GroupElement eval_word(const Word& w, const GenSet& A) {
  GroupElement acc = identity();
  for (SignedGen s : w.letters) {
    if (s.index < 0 || s.index >= static_cast<int>(A.size()))
      throw OutOfRangeError("word references generator index " +
                            std::to_string(s.index) + " outside the set");
    acc = mul(acc, A.element_of(s));
  }
  return acc;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

Word cyclic_permute(const Word& w, size_t s) {
  const size_t n = w.length();
  if (n == 0) return w;
  Word r;
  r.letters.reserve(n);
  for (size_t t = 0; t < n; ++t) r.letters.push_back(w.letters[(t + s) % n]);
  return r;
}

Word invert_letters(const Word& w) {
  Word r = w;
  for (SignedGen& s : r.letters) s.sign = -s.sign;
  return r;
}

Word inverse_word(const Word& w) {
  Word r;
  r.letters.reserve(w.length());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->index, -it->sign});
  return r;
}

Word insert_letter(const Word& w, size_t pos, SignedGen letter) {
  Word r = w;
  r.letters.insert(r.letters.begin() + pos, letter);
  return r;
}

Word transpose_adjacent(const Word& w, size_t pos) {
  Word r = w;
  std::swap(r.letters.at(pos), r.letters.at(pos + 1));
  return r;
}

std::string word_to_string(const Word& w, const GenSet& A) {
  if (w.empty()) return "e";
  std::string out;
  size_t t = 0;
  while (t < w.length()) {
    size_t run = t + 1;
    while (run < w.length() && w.letters[run] == w.letters[t]) ++run;
    int64_t exp = static_cast<int64_t>(run - t) * w.letters[t].sign;
    if (!out.empty()) out += ' ';
    out += A.generator(w.letters[t].index).label;
    if (exp != 1) out += "^" + std::to_string(exp);
    t = run;
  }
  return out;
}

}  // namespace heis
