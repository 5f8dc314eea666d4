#include "heckeforge_cli/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "heckeforge/error.hpp"

namespace heckeforge::cli {

namespace {

[[noreturn]] void bad(std::string_view what, std::string_view text) {
  throw Error(ErrorKind::ParseError, std::string(what) + ": '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) bad("expected an integer", context);
  return v;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view context) {
  std::vector<int> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// [sign][k]a[i]^ terms.
Cocharacter parse_shorthand(const RootDatum& rd, std::string_view text) {
  Cocharacter sum = rd.zero();
  std::size_t i = 0;
  const std::string_view s = text;
  if (s.empty()) bad("empty cocharacter", text);
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      bad("expected '+' or '-'", text);
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    const int k = j > i ? parse_int(s.substr(i, j - i), text) : 1;
    if (j >= s.size() || s[j] != 'a') bad("expected 'a' in coroot shorthand", text);
    i = ++j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    int index = 1;
    if (j > i) {
      index = parse_int(s.substr(i, j - i), text);
    } else if (rd.num_simple() != 1) {
      bad("ambiguous 'a^': name the simple coroot, e.g. 'a1^'", text);
    }
    if (index < 1 || index > rd.num_simple()) bad("simple coroot index out of range", text);
    if (j >= s.size() || s[j] != '^') bad("expected '^' after the coroot name", text);
    i = j + 1;
    sum += (sign * k) * rd.simple_coroot(index - 1);
  }
  return sum;
}

}  // namespace

Cocharacter parse_cocharacter(const RootDatum& rd, std::string_view text) {
  text = trim(text);
  if (text.find('a') != std::string_view::npos) return parse_shorthand(rd, text);
  std::vector<int> v = parse_int_list(text, text);
  if (static_cast<int>(v.size()) != rd.rank()) {
    bad("cocharacter needs " + std::to_string(rd.rank()) + " coordinates", text);
  }
  return Cocharacter(v);
}

ExtAffineElement parse_element(const AffineWeylGroup& g, std::string_view text) {
  const RootDatum& rd = g.root_datum();
  ExtAffineElement x = g.identity();
  std::string_view rest = trim(text);
  if (rest.empty()) bad("empty element", text);
  for (;;) {
    const std::size_t star = rest.find('*');
    const std::string_view tok = trim(rest.substr(0, star));
    ExtAffineElement f;
    if (tok == "e") {
      f = g.identity();
    } else if (tok.size() > 1 && tok[0] == 's' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
      const int label = parse_int(tok.substr(1), text);
      if (label < 0 || label >= g.num_generators()) bad("no such generator", text);
      f = g.generator(label);
    } else if (tok.size() > 3 && tok.substr(0, 2) == "t(" && tok.back() == ')') {
      f = g.translation(parse_cocharacter(rd, tok.substr(2, tok.size() - 3)));
    } else if (const std::size_t colon = tok.find(':'); colon != std::string_view::npos) {
      std::vector<int> word = parse_int_list(tok.substr(colon + 1), text);
      for (int& i : word) {
        if (i < 1 || i > rd.num_simple()) bad("simple reflection index out of range", text);
        --i;
      }
      f = {parse_cocharacter(rd, tok.substr(0, colon)), rd.from_word(word)};
    } else {
      bad("unrecognized element", text);
    }
    x = g.multiply(x, f);
    if (star == std::string_view::npos) break;
    rest = rest.substr(star + 1);
  }
  return x;
}

Facet parse_facet(const AffineWeylGroup& g, std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "alcove" || text == "a0") return g.alcove();
  if (text == "hyperspecial" || text == "f0") return g.hyperspecial();
  Facet f{parse_int_list(text, text)};
  std::sort(f.gens.begin(), f.gens.end());
  f.gens.erase(std::unique(f.gens.begin(), f.gens.end()), f.gens.end());
  for (int s : f.gens) {
    if (s < 0 || s >= g.num_generators()) bad("no such generator", text);
  }
  if (!g.is_proper(f)) throw Error(ErrorKind::InfiniteParabolic, "facet " + std::string(text) + " is not proper");
  return f;
}

}  // namespace heckeforge::cli
