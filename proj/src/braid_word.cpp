#include "braidkit/braid_word.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

void check_letter(int letter, int strands) {
  if (letter == 0) throw DomainError("letter index 0 is invalid");
  const int idx = letter < 0 ? -letter : letter;
  if (idx > strands - 1)
    throw DomainError("index " + std::to_string(idx) + " needs >= " +
                      std::to_string(idx + 1) + " strands (have " +
                      std::to_string(strands) + ")");
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  if (n < 1) throw DomainError("strand count must be >= 1");
  for (int letter : letters) check_letter(letter, n);
}

namespace {

// token := optional '-' followed by a decimal index, or a single letter
// alias (a..y = sigma_1..sigma_25, A..Y = inverses).
int parse_token(const std::string& tok) {
  if (tok.size() == 1 && std::isalpha(static_cast<unsigned char>(tok[0]))) {
    const char c = tok[0];
    if (c >= 'a' && c <= 'y') return c - 'a' + 1;
    if (c >= 'A' && c <= 'Y') return -(c - 'A' + 1);
    throw DomainError(std::string("unknown letter alias '") + c + "'");
  }
  size_t pos = 0;
  bool negative = false;
  if (pos < tok.size() && tok[pos] == '-') {
    negative = true;
    ++pos;
  }
  const size_t digits = pos;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
  if (pos == digits || pos != tok.size())
    throw DomainError("syntax error in word at '" + tok + "'");
  const int idx = std::atoi(tok.substr(digits).c_str());
  return negative ? -idx : idx;
}

}  // namespace

BraidWord parse_word(const std::string& text, int strands) {
  if (strands < 1) throw DomainError("strand count must be >= 1");
  std::vector<int> letters;
  size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
      continue;
    }
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != ',')
      ++pos;
    const int letter = parse_token(text.substr(start, pos - start));
    check_letter(letter, strands);
    letters.push_back(letter);
  }
  return BraidWord(strands, std::move(letters));
}

std::string serialize(const BraidWord& w) {
  std::string out;
  for (size_t k = 0; k < w.letters.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(w.letters[k]);
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  stack.reserve(w.letters.size());
  for (int letter : w.letters) {
    if (!stack.empty() && stack.back() == -letter)
      stack.pop_back();
    else
      stack.push_back(letter);
  }
  return BraidWord(w.strands, std::move(stack));
}

BraidWord invert(const BraidWord& w) {
  std::vector<int> letters(w.letters.rbegin(), w.letters.rend());
  for (int& letter : letters) letter = -letter;
  return BraidWord(w.strands, std::move(letters));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b);
  std::vector<int> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return BraidWord(a.strands, std::move(letters));
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (int letter : w.letters) sum += letter > 0 ? 1 : -1;
  return sum;
}

Permutation permutation(const BraidWord& w) {
  Permutation p(w.strands);
  for (int letter : w.letters) p.swap_positions(letter < 0 ? -letter : letter);
  return p;
}

BraidWord apply_tau(const BraidWord& w, int k) {
  if (k % 2 == 0) return w;
  std::vector<int> letters = w.letters;
  for (int& letter : letters)
    letter = letter > 0 ? w.strands - letter : -(w.strands + letter);
  return BraidWord(w.strands, std::move(letters));
}

void require_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw DomainError("strand-count mismatch: " + std::to_string(a.strands) +
                      " vs " + std::to_string(b.strands));
}

}  // namespace braidkit
