#include "ltlred/word.hpp"

#include "ltlred/formula.hpp"

namespace ltlred {

bool operator==(const LassoWord& a, const LassoWord& b) {
  return a.prefix == b.prefix && a.period == b.period;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Letter parse_letter(const std::string& raw) {
  std::string t = trim(raw);
  if (t.empty()) throw WordFormatError("empty letter token; use {} for the empty letter");
  Letter out;
  if (t.front() == '{') {
    if (t.back() != '}') throw WordFormatError("letter '" + t + "' is missing '}'");
    std::string inner = t.substr(1, t.size() - 2);
    std::size_t start = 0;
    while (start <= inner.size()) {
      std::size_t comma = inner.find(',', start);
      std::string item = trim(comma == std::string::npos ? inner.substr(start)
                                                         : inner.substr(start, comma - start));
      if (!item.empty()) {
        if (!valid_atom_name(item))
          throw WordFormatError("invalid proposition name '" + item + "'");
        out.insert(item);
      } else if (comma != std::string::npos) {
        throw WordFormatError("empty proposition name in letter '" + t + "'");
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }
  if (!valid_atom_name(t)) throw WordFormatError("invalid proposition name '" + t + "'");
  out.insert(t);
  return out;
}

std::vector<Letter> parse_side(const std::string& raw) {
  std::vector<Letter> out;
  std::string t = trim(raw);
  if (t.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = t.find(';', start);
    out.push_back(parse_letter(semi == std::string::npos ? t.substr(start)
                                                         : t.substr(start, semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace

LassoWord parse_word(const std::string& text) {
  std::size_t bar = text.find('|');
  if (bar == std::string::npos) throw WordFormatError("missing '|' between prefix and period");
  if (text.find('|', bar + 1) != std::string::npos) throw WordFormatError("more than one '|'");
  LassoWord w;
  w.prefix = parse_side(text.substr(0, bar));
  w.period = parse_side(text.substr(bar + 1));
  if (w.period.empty()) throw WordFormatError("period must contain at least one letter");
  return w;
}

std::string to_string(const Letter& l) {
  if (l.size() == 1) return *l.begin();
  std::string out = "{";
  bool first = true;
  for (const std::string& p : l) {
    if (!first) out += ',';
    out += p;
    first = false;
  }
  out += '}';
  return out;
}

static std::string join(const std::vector<Letter>& side) {
  std::string out;
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (i) out += ';';
    out += to_string(side[i]);
  }
  return out;
}

std::string to_string(const LassoWord& w) {
  std::string out = join(w.prefix);
  if (!out.empty()) out += ' ';
  out += '|';
  if (!w.period.empty()) out += ' ';
  return out + join(w.period);
}

}  // namespace ltlred
