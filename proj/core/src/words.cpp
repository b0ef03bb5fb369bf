// Copyright 2026 The qpfree Authors.
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

#include "qpfree/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "qpfree/error.hpp"

namespace qpfree {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_identifier(std::string_view s) {
  return !s.empty() && is_ident_start(s.front()) &&
         std::all_of(s.begin(), s.end(), is_ident_char);
}

std::int64_t parse_exponent(std::string_view text, std::string_view token) {
  std::int64_t v = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("bad exponent in token '" + std::string(token) + "'");
  }
  return v;
}

// Appends |k| copies of x^{sign(k)}.
void append_power(std::vector<Letter>& out, int generator, std::int64_t k) {
  const Letter l = k > 0 ? Letter::positive(generator) : Letter::negative(generator);
  for (std::int64_t i = 0; i < std::abs(k); ++i) out.push_back(l);
}

}  // namespace

// Alphabet ------------------------------------------------------------------

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto& s = symbols_[i];
    if (!is_identifier(s)) throw ParseError("invalid symbol '" + s + "'");
    if (s == "e") throw ParseError("symbol 'e' is reserved for the neutral letter");
    if (!index_.emplace(s, static_cast<int>(i)).second) {
      throw ParseError("duplicate symbol '" + s + "'");
    }
  }
}

const std::string& Alphabet::symbol(int generator) const {
  if (generator < 0 || static_cast<std::size_t>(generator) >= symbols_.size()) {
    throw DomainError("generator index out of range");
  }
  return symbols_[static_cast<std::size_t>(generator)];
}

int Alphabet::index_of(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) {
    throw ParseError("undeclared symbol '" + std::string(symbol) + "'");
  }
  return it->second;
}

bool Alphabet::contains(std::string_view symbol) const {
  return index_.count(std::string(symbol)) != 0;
}

// Word ------------------------------------------------------------------------

std::size_t Word::neutral_count() const {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(), [](Letter l) { return l.is_neutral(); }));
}

Word reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (Letter l : w.letters()) {
    if (l.is_neutral()) continue;
    if (!stack.empty() && stack.back().cancels_with(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool is_reduced(const Word& w) {
  return w.neutral_count() == 0 && is_almost_irreducible(w);
}

bool is_almost_irreducible(const Word& w) {
  const auto ls = w.letters();
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i - 1].cancels_with(ls[i])) return false;
  }
  return true;
}

NormalForm normal_form(const Word& w) {
  NormalForm nf;
  const Word r = reduce(w);
  for (Letter l : r.letters()) {
    if (!nf.empty() && nf.back().generator == l.generator()) {
      nf.back().exponent += l.sign();
    } else {
      nf.push_back({l.generator(), l.sign()});
    }
  }
  return nf;
}

Word from_normal_form(const NormalForm& nf) {
  std::vector<Letter> out;
  for (const auto& t : nf) append_power(out, t.generator, t.exponent);
  return Word(std::move(out));
}

Word word_product(const Word& u, const Word& v) {
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(out));
}

Word word_inverse(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

bool bn_member(const Word& w, std::size_t n) { return reduce(w).length() <= n; }

bool bn_member(const AbelianWord& h, std::size_t n) {
  return h.length() <= static_cast<std::int64_t>(n);
}

// AbelianWord -----------------------------------------------------------------

AbelianWord::AbelianWord(const std::map<int, std::int64_t>& exponents) {
  for (const auto& [g, k] : exponents) add(g, k);
}

AbelianWord AbelianWord::generator(int g, std::int64_t k) {
  AbelianWord h;
  h.add(g, k);
  return h;
}

void AbelianWord::add(int generator, std::int64_t k) {
  if (k == 0) return;
  auto& slot = exponents_[generator];
  slot += k;
  if (slot == 0) exponents_.erase(generator);
}

std::int64_t AbelianWord::exponent(int generator) const {
  auto it = exponents_.find(generator);
  return it == exponents_.end() ? 0 : it->second;
}

std::int64_t AbelianWord::length() const {
  std::int64_t n = 0;
  for (const auto& [g, k] : exponents_) n += std::abs(k);
  return n;
}

std::int64_t AbelianWord::coefficient_sum() const {
  std::int64_t n = 0;
  for (const auto& [g, k] : exponents_) n += k;
  return n;
}

std::vector<Letter> AbelianWord::expand() const {
  std::vector<Letter> out;
  for (const auto& [g, k] : exponents_) append_power(out, g, k);
  return out;
}

AbelianWord& AbelianWord::operator+=(const AbelianWord& o) {
  for (const auto& [g, k] : o.exponents_) add(g, k);
  return *this;
}

AbelianWord& AbelianWord::operator-=(const AbelianWord& o) {
  for (const auto& [g, k] : o.exponents_) add(g, -k);
  return *this;
}

AbelianWord operator-(const AbelianWord& a) {
  AbelianWord r;
  for (const auto& [g, k] : a.exponents_) r.add(g, -k);
  return r;
}

AbelianWord operator*(std::int64_t k, const AbelianWord& a) {
  AbelianWord r;
  for (const auto& [g, m] : a.exponents_) r.add(g, k * m);
  return r;
}

AbelianWord abelianize(const Word& w) {
  AbelianWord h;
  for (Letter l : w.letters()) {
    if (!l.is_neutral()) h += AbelianWord::generator(l.generator(), l.sign());
  }
  return h;
}

// Text syntax -----------------------------------------------------------------

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    const std::string_view sym = std::string_view(token).substr(0, caret);
    if (sym == "e") {
      if (caret != std::string::npos) {
        throw ParseError("the neutral letter takes no exponent: '" + token + "'");
      }
      out.push_back(Letter::neutral());
      continue;
    }
    if (!is_identifier(sym)) throw ParseError("malformed token '" + token + "'");
    const int g = alphabet.index_of(sym);
    const std::int64_t k =
        caret == std::string::npos
            ? 1
            : parse_exponent(std::string_view(token).substr(caret + 1), token);
    append_power(out, g, k);
  }
  return Word(std::move(out));
}

AbelianWord parse_abelian(std::string_view text, const Alphabet& alphabet) {
  AbelianWord h;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto fail = [&](const std::string& why) {
    throw ParseError(why + " in abelian word '" + std::string(text) + "'");
  };
  skip_ws();
  if (text.substr(i) == "0") return h;
  while (i < text.size()) {
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    std::int64_t coefficient = 1;
    const std::size_t digits_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > digits_begin) {
      coefficient = parse_exponent(text.substr(digits_begin, i - digits_begin), text);
      if (i < text.size() && text[i] == '*') ++i;
    }
    const std::size_t sym_begin = i;
    if (i >= text.size() || !is_ident_start(text[i])) fail("expected a symbol");
    while (i < text.size() && is_ident_char(text[i])) ++i;
    const std::string_view sym = text.substr(sym_begin, i - sym_begin);
    std::int64_t power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t exp_begin = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      power = parse_exponent(text.substr(exp_begin, i - exp_begin), text);
    }
    if (sym == "e") {
      if (power != 1) fail("the neutral letter takes no exponent");
    } else {
      h += AbelianWord::generator(alphabet.index_of(sym), sign * coefficient * power);
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
        text[i] != '+' && text[i] != '-') {
      fail("unexpected character");
    }
    skip_ws();
  }
  return h;
}

std::string format_letter(Letter l, const Alphabet& alphabet) {
  if (l.is_neutral()) return "e";
  std::string s = alphabet.symbol(l.generator());
  if (l.sign() < 0) s += "^-1";
  return s;
}

std::string format_signed_letter(Letter l, const Alphabet& alphabet) {
  if (l.is_neutral()) return "e";
  return (l.sign() < 0 ? "-" : "") + alphabet.symbol(l.generator());
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string s;
  for (Letter l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += format_letter(l, alphabet);
  }
  return s;
}

std::string format_normal_form(const NormalForm& nf, const Alphabet& alphabet) {
  std::string s;
  for (const auto& t : nf) {
    if (!s.empty()) s += ' ';
    s += alphabet.symbol(t.generator);
    if (t.exponent != 1) s += "^" + std::to_string(t.exponent);
  }
  return s;
}

std::string format_abelian(const AbelianWord& h, const Alphabet& alphabet) {
  if (h.is_identity()) return "0";
  std::string s;
  for (const auto& [g, k] : h.exponents()) {
    if (s.empty()) {
      if (k < 0) s += '-';
    } else {
      s += k < 0 ? " - " : " + ";
    }
    if (std::abs(k) != 1) s += std::to_string(std::abs(k));
    s += alphabet.symbol(g);
  }
  return s;
}

}  // namespace qpfree
