#include "rotlab/word.hpp"

#include "rotlab/errors.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <limits>

namespace rotlab {

Word::Word(std::vector<Syllable> syllables) {
  s_.reserve(syllables.size());
  for (const auto& s : syllables) push(s);
}

Word::Word(std::initializer_list<Syllable> syllables) {
  for (const auto& s : syllables) push(s);
}

Word Word::letter(const std::string& gen, long long exp) { return Word({Syllable{gen, exp}}); }

void Word::push(const Syllable& s) {
  if (s.exp == 0) return;
  if (!s_.empty() && s_.back().gen == s.gen) {
    s_.back().exp += s.exp;
    if (s_.back().exp == 0) s_.pop_back();
    return;
  }
  s_.push_back(s);
}

Word& Word::operator*=(const Word& o) {
  for (const auto& s : o.s_) push(s);
  return *this;
}

Word Word::inverse() const {
  Word r;
  for (auto it = s_.rbegin(); it != s_.rend(); ++it) r.push({it->gen, -it->exp});
  return r;
}

Word Word::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  Word r;
  for (long long i = 0; i < k; ++i) r *= *this;
  return r;
}

long long Word::letter_length() const {
  long long n = 0;
  for (const auto& s : s_) n += std::llabs(s.exp);
  return n;
}

std::string Word::str() const {
  if (s_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (i) out += ' ';
    out += s_[i].gen + "^" + std::to_string(s_[i].exp);
  }
  return out;
}

bool Word::operator<(const Word& o) const {
  if (s_.size() != o.s_.size()) return s_.size() < o.s_.size();
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (s_[i].gen != o.s_[i].gen) return s_[i].gen < o.s_[i].gen;
    if (s_[i].exp != o.s_[i].exp) return s_[i].exp < o.s_[i].exp;
  }
  return false;
}

Word Word::parse(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == n) throw ParseError("empty word text (write \"1\" for the identity)", 1);
  if (text[i] == '1') {
    std::size_t j = i + 1;
    while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == n) return Word();
    throw ParseError("unexpected text after \"1\"", j + 1);
  }
  std::vector<Syllable> out;
  while (true) {
    skip_ws();
    if (i == n) break;
    std::size_t start = i;
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) throw ParseError("expected a generator name", i + 1);
    while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    std::string name(text.substr(start, i - start));
    if (i == n || text[i] != '^') throw ParseError("expected '^' after generator " + name, i + 1);
    ++i;
    std::size_t num_start = i;
    if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw ParseError("expected an integer exponent", i + 1);
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) throw ParseError("unexpected character", i + 1);
    std::string num(text.substr(num_start, i - num_start));
    errno = 0;
    char* endp = nullptr;
    long long e = std::strtoll(num.c_str(), &endp, 10);
    if (errno == ERANGE) throw ParseError("exponent out of range", num_start + 1);
    out.push_back({name, e});
  }
  return Word(std::move(out));
}

long long balanced_mod(long long e, long long d) {
  if (d <= 0) return e;
  long long r = ((e % d) + d) % d;
  if (2 * r > d) r -= d;
  return r;
}

Word free_reduce(const Word& w, const OrderMap& orders) {
  std::vector<Syllable> stack;
  auto reduce_exp = [&](Syllable& s) {
    auto it = orders.find(s.gen);
    if (it != orders.end()) s.exp = balanced_mod(s.exp, it->second);
  };
  for (auto s : w.syllables()) {
    reduce_exp(s);
    if (s.exp == 0) continue;
    if (!stack.empty() && stack.back().gen == s.gen) {
      stack.back().exp += s.exp;
      reduce_exp(stack.back());
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return Word(std::move(stack));
}

}  // namespace rotlab
